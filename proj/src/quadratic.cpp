#include "pseudospec/quadratic.hpp"

#include <algorithm>
#include <cmath>

#include "pseudospec/spectral_kernels.hpp"

namespace pseudospec {

namespace {

constexpr int kSvdDimensionLimit = 1024;

void require_quadratic_shape(const MatrixTuple& t, const ProbeSite& site) {
  t.validate();
  site.validate_against(t);
}

double gap_from_rq(const ComplexMatrix& rq) { return std::sqrt(std::max(0.0, hermitian_min_eigenvalue(rq))); }

}  // namespace

QuadraticOperators build_quadratic(const MatrixTuple& t, const ProbeSite& site) {
  require_quadratic_shape(t, site);
  const int n = t.dim();
  ComplexMatrix squares = ComplexMatrix::Zero(n, n);
  for (const auto& a : shifted_herm(t, site)) squares.noalias() += a * a;

  QuadraticOperators out{squares, squares};
  for (const auto& b : shifted_nonherm(t, site)) {
    out.rq.noalias() += b.adjoint() * b;
    out.lq.noalias() += b * b.adjoint();
  }
  // Products of Hermitian pieces carry roundoff in the skew part.
  out.rq = (0.5 * (out.rq + out.rq.adjoint())).eval();
  out.lq = (0.5 * (out.lq + out.lq.adjoint())).eval();
  return out;
}

ComplexMatrix rm_stack(const MatrixTuple& t, const ProbeSite& site) {
  require_quadratic_shape(t, site);
  const int n = t.dim();
  ComplexMatrix out(static_cast<Eigen::Index>(t.d1() + t.d2()) * n, n);
  int row = 0;
  for (auto& a : shifted_herm(t, site)) {
    out.middleRows(row, n) = a;
    row += n;
  }
  for (auto& b : shifted_nonherm(t, site)) {
    out.middleRows(row, n) = b;
    row += n;
  }
  return out;
}

MatrixTuple adjoint_tuple(const MatrixTuple& t) {
  MatrixTuple out{t.herm, {}};
  out.nonherm.reserve(t.nonherm.size());
  for (const auto& b : t.nonherm) out.nonherm.push_back(b.adjoint());
  return out;
}

ProbeSite conjugate_site(const ProbeSite& site) {
  ProbeSite out{site.lambda, {}};
  out.nu.reserve(site.nu.size());
  for (const auto& v : site.nu) out.nu.push_back(std::conj(v));
  return out;
}

double right_quadratic_gap(const MatrixTuple& t, const ProbeSite& site) {
  if (t.dim() <= kSvdDimensionLimit) {
    const RealVector s = singular_values(rm_stack(t, site));
    return s(s.size() - 1);
  }
  return gap_from_rq(build_quadratic(t, site).rq);
}

double left_quadratic_gap(const MatrixTuple& t, const ProbeSite& site) {
  return right_quadratic_gap(adjoint_tuple(t), conjugate_site(site));
}

QuadraticGaps quadratic_gaps(const MatrixTuple& t, const ProbeSite& site) {
  QuadraticGaps out;
  out.rq = right_quadratic_gap(t, site);
  out.lq = left_quadratic_gap(t, site);
  out.q = std::min(out.rq, out.lq);
  return out;
}

ExpectationVariance expectation_variance(const ComplexMatrix& b, const ComplexVector& psi) {
  require_square_finite(b, "expectation_variance");
  if (psi.size() != b.rows()) throw InputError("expectation_variance: vector length mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw InputError("expectation_variance: psi must be a unit vector");
  const ComplexVector bpsi = b * psi;
  ExpectationVariance out;
  out.expectation = psi.dot(bpsi);  // <B psi, psi> = psi^dagger B psi
  out.variance_sq = bpsi.squaredNorm() - std::norm(out.expectation);
  return out;
}

QuadraticMembership quadratic_epsilon_membership(const MatrixTuple& t, const ProbeSite& site, double eps) {
  if (!(eps >= 0.0)) throw InputError("quadratic_epsilon_membership: eps must be >= 0");
  const QuadraticGaps g = quadratic_gaps(t, site);
  return {g.rq <= eps, g.lq <= eps, g.q <= eps};
}

double tuple_distance(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2() || a.dim() != b.dim())
    throw InputError("tuple_distance: tuples have different shapes");
  const int n = a.dim();
  ComplexMatrix stack(static_cast<Eigen::Index>(a.d1() + a.d2()) * n, n);
  int row = 0;
  for (int i = 0; i < a.d1(); ++i, row += n) stack.middleRows(row, n) = a.herm[i] - b.herm[i];
  for (int j = 0; j < a.d2(); ++j, row += n) stack.middleRows(row, n) = a.nonherm[j] - b.nonherm[j];
  const RealVector s = singular_values(stack);
  return s.size() == 0 ? 0.0 : s(0);
}

double probe_distance(const ProbeSite& a, const ProbeSite& b) {
  if (a.lambda.size() != b.lambda.size() || a.nu.size() != b.nu.size())
    throw InputError("probe_distance: probe sites have different shapes");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.lambda.size(); ++i) sum += (a.lambda[i] - b.lambda[i]) * (a.lambda[i] - b.lambda[i]);
  for (std::size_t j = 0; j < a.nu.size(); ++j) sum += std::norm(a.nu[j] - b.nu[j]);
  return std::sqrt(sum);
}

}  // namespace pseudospec
