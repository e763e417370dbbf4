#include "pseudospec/check_suite.hpp"

#include <cstdio>
#include <random>

namespace pseudospec {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return normal_(rng_); }
  cplx complex_normal() { return {normal(), normal()}; }

  ComplexMatrix matrix(int n) {
    ComplexMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = complex_normal();
    return m;
  }

  ComplexMatrix hermitian(int n) {
    const ComplexMatrix g = matrix(n);
    return 0.5 * (g + g.adjoint());
  }

  ComplexMatrix real_diagonal(int n) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = normal();
    return m;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

InstanceReport run_instance(int index, std::uint64_t seed) {
  Draw draw(seed);
  InstanceReport out;
  out.index = index;
  out.seed = seed;
  out.n = draw.uniform_int(1, 6);
  out.d1 = draw.uniform_int(1, 3);
  out.hermitian = index % 10 == 0;

  MatrixTuple t;
  ProbeSite site;
  for (int i = 0; i < out.d1; ++i) {
    t.herm.push_back(draw.hermitian(out.n));
    site.lambda.push_back(draw.normal());
  }
  t.nonherm.push_back(out.hermitian ? draw.hermitian(out.n) : draw.matrix(out.n));
  site.nu.push_back(out.hermitian ? cplx(draw.normal(), 0.0) : draw.complex_normal());
  out.reports = check_gap_bounds(t, site, build_rep(out.d1));

  // Locality needs commuting positions: diagonal ones. The perturbation is
  // halved until K < 1 so the sandwich is actually exercised.
  MatrixTuple local;
  ProbeSite local_site;
  for (int i = 0; i < out.d1; ++i) {
    local.herm.push_back(draw.real_diagonal(out.n));
    local_site.lambda.push_back(draw.normal());
  }
  local.nonherm.push_back(draw.matrix(out.n));
  local_site.nu.push_back(draw.complex_normal());
  ComplexMatrix c = draw.matrix(out.n);
  LocalityReport loc = check_locality(local, local_site, {c});
  for (int halving = 0; halving < 60 && !(loc.k_right < 1.0 && loc.k_left < 1.0); ++halving) {
    c *= 0.5;
    loc = check_locality(local, local_site, {c});
  }
  out.reports.push_back(loc.rq);
  out.reports.push_back(loc.lq);
  out.reports.push_back(loc.q);
  return out;
}

}  // namespace

CheckSuiteResult check_suite(std::uint64_t seed, int instances) {
  if (instances < 1) throw InputError("check_suite: instances must be >= 1");
  std::mt19937_64 master(seed);
  CheckSuiteResult result;
  for (int k = 0; k < instances; ++k) {
    InstanceReport inst = run_instance(k, master());
    for (const auto& r : inst.reports) {
      if (!r.hypothesis_met) ++result.not_applicable;
      else if (!r.satisfied) ++result.violations;
    }
    result.instances.push_back(std::move(inst));
  }
  return result;
}

std::string format_check_report(const CheckSuiteResult& result) {
  std::string out;
  char buf[512];
  for (const auto& inst : result.instances)
    for (const auto& r : inst.reports) {
      const char* status = !r.hypothesis_met ? "n/a" : r.satisfied ? "ok" : "VIOLATION";
      std::snprintf(buf, sizeof buf,
                    "instance=%d seed=%llu n=%d d1=%d hermitian=%d check=%s lhs=%.17e rhs=%.17e slack=%.17e %s\n",
                    inst.index, static_cast<unsigned long long>(inst.seed), inst.n, inst.d1, inst.hermitian ? 1 : 0,
                    r.name.c_str(), r.lhs, r.rhs, r.slack, status);
      out += buf;
    }
  std::snprintf(buf, sizeof buf, "instances=%zu violations=%d not_applicable=%d\n", result.instances.size(),
                result.violations, result.not_applicable);
  out += buf;
  return out;
}

}  // namespace pseudospec
