#include "pseudospec/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

namespace pseudospec {

MatrixTuple build_tls(const TwoLevelParams& p) {
  if (!std::isfinite(p.delta_e) || !std::isfinite(p.delta_gamma) || !std::isfinite(p.c))
    throw InputError("build_tls: parameters must be finite");
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 0) = -1.0;
  x(1, 1) = 1.0;
  ComplexMatrix h(2, 2);
  h << cplx(p.delta_e, p.delta_gamma), p.c, p.c, 0.0;
  return MatrixTuple{{x}, {h}};
}

std::vector<double> exceptional_point_locus(const TwoLevelParams& p) {
  if (p.delta_e != 0.0) throw UnsupportedError("exceptional_point_locus: only delta_e = 0 is supported");
  const double c = std::abs(p.delta_gamma) / 2.0;
  if (c == 0.0) return {0.0};
  return {c, -c};
}

const char* region_name(Region r) {
  switch (r) {
    case Region::topological: return "topological";
    case Region::trivial: return "trivial";
    case Region::lossy: return "lossy";
  }
  return "?";
}

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Vec2 {
  double x, y;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
bool near(Vec2 a, Vec2 b) { return std::abs(a.x - b.x) < 1e-9 && std::abs(a.y - b.y) < 1e-9; }

const Vec2 kA1{1.0, 0.0};
const Vec2 kA2{0.5, kSqrt3 / 2.0};
// Vectors from an A site to its three B neighbours.
const std::array<Vec2, 3> kDelta{{{0.0, 1.0 / kSqrt3}, {0.5, -0.5 / kSqrt3}, {-0.5, -0.5 / kSqrt3}}};

void validate_region(const RegionParams& r, const char* name) {
  for (double v : {r.mass, r.loss, r.t, r.t_c, r.phi})
    if (!std::isfinite(v)) throw InputError(std::string("HaldaneParams.") + name + ": non-finite parameter");
}

// +1 for a counterclockwise turn through the shared neighbour, -1 otherwise.
int circulation(char sublattice, Vec2 v) {
  for (const Vec2& d : kDelta) {
    const Vec2 s = sublattice == 'A' ? d : -d;
    const Vec2 rest = v - s;
    for (const Vec2& e : kDelta) {
      const Vec2 back = sublattice == 'A' ? -e : e;
      if (near(rest, back)) return cross(s, rest) > 0.0 ? 1 : -1;
    }
  }
  throw InputError("build_haldane_heterostructure: internal error, not a next-nearest-neighbour vector");
}

const RegionParams& params_for(const HaldaneParams& p, Region r) {
  switch (r) {
    case Region::topological: return p.topological;
    case Region::trivial: return p.trivial;
    case Region::lossy: return p.lossy;
  }
  return p.lossy;
}

}  // namespace

void HaldaneParams::validate() const {
  validate_region(topological, "topological");
  validate_region(trivial, "trivial");
  validate_region(lossy, "lossy");
  if (!(r_topo > 0.0 && r_topo < r_trivial && r_trivial < r_lossy) || !std::isfinite(r_lossy))
    throw InputError("HaldaneParams: radii must satisfy 0 < r_topo < r_trivial < r_lossy");
  if (r_topo < 0.5) throw InputError("HaldaneParams: r_topo must be >= 0.5 to contain the central plaquette");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw InputError("HaldaneParams: kappa must be positive");
}

double hexagonal_norm(double x, double y) {
  const double c = 0.5;
  const double s = kSqrt3 / 2.0;
  return std::max({std::abs(x), std::abs(c * x + s * y), std::abs(-c * x + s * y)});
}

LatticeModel build_haldane_heterostructure(const HaldaneParams& p) {
  p.validate();
  const Vec2 origin_shift{0.0, 1.0 / kSqrt3};  // puts a plaquette centre at the origin
  const int reach = static_cast<int>(std::ceil(2.0 * p.r_lossy)) + 2;
  const double tol = 1e-9;

  using Key = std::tuple<int, int, int>;  // (i, j, 0 for A / 1 for B)
  std::map<Key, Vec2> candidates;
  for (int i = -reach; i <= reach; ++i)
    for (int j = -reach; j <= reach; ++j) {
      const Vec2 a = Vec2{i * kA1.x + j * kA2.x, i * kA1.y + j * kA2.y} + origin_shift;
      const Vec2 b = a + kDelta[0];
      if (hexagonal_norm(a.x, a.y) <= p.r_lossy + tol) candidates[{i, j, 0}] = a;
      if (hexagonal_norm(b.x, b.y) <= p.r_lossy + tol) candidates[{i, j, 1}] = b;
    }

  // B(i,j) sits at A(i,j) + delta_1; the other two neighbours of A(i,j) are
  // B(i+1,j-1) and B(i,j-1).
  auto nn_keys = [](const Key& k) {
    const auto [i, j, s] = k;
    if (s == 0) return std::array<Key, 3>{Key{i, j, 1}, Key{i + 1, j - 1, 1}, Key{i, j - 1, 1}};
    return std::array<Key, 3>{Key{i, j, 0}, Key{i - 1, j + 1, 0}, Key{i, j + 1, 0}};
  };

  // Strip dangling sites until every site has at least two neighbours.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = candidates.begin(); it != candidates.end();) {
      int degree = 0;
      for (const Key& nk : nn_keys(it->first)) degree += candidates.count(nk) ? 1 : 0;
      if (degree < 2) {
        it = candidates.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  LatticeModel model;
  std::map<Key, int> index;
  for (const auto& [key, pos] : candidates) {
    LatticeSite site;
    site.x = pos.x;
    site.y = pos.y;
    site.sublattice = std::get<2>(key) == 0 ? 'A' : 'B';
    const double h = hexagonal_norm(pos.x, pos.y);
    site.region = h <= p.r_topo + tol ? Region::topological
                  : h <= p.r_trivial + tol ? Region::trivial
                                           : Region::lossy;
    index[key] = model.size();
    model.sites.push_back(site);
  }

  int central = 0;
  for (const auto& s : model.sites)
    if (std::abs(hexagonal_norm(s.x, s.y) - 0.5) < tol && std::hypot(s.x, s.y) < 0.6) ++central;
  if (central < 6) throw InputError("build_haldane_heterostructure: flake does not contain the central plaquette");

  const int n = model.size();
  model.x = ComplexMatrix::Zero(n, n);
  model.y = ComplexMatrix::Zero(n, n);
  model.h = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const LatticeSite& s = model.sites[k];
    const RegionParams& r = params_for(p, s.region);
    model.x(k, k) = s.x;
    model.y(k, k) = s.y;
    model.h(k, k) = s.sublattice == 'A' ? cplx(r.mass, -r.loss) : cplx(-r.mass, -r.loss);
  }

  // Nearest neighbours: enumerate from the A side.
  for (const auto& [key, k] : index) {
    if (std::get<2>(key) != 0) continue;
    for (const Key& nk : nn_keys(key)) {
      auto it = index.find(nk);
      if (it == index.end()) continue;
      const int l = it->second;
      const double t = 0.5 * (params_for(p, model.sites[k].region).t + params_for(p, model.sites[l].region).t);
      model.h(k, l) += -t;
      model.h(l, k) += -t;
    }
  }

  // Next-nearest neighbours along +a1, +a2, a2 - a1 (each bond once).
  const std::array<std::pair<int, int>, 3> steps{{{1, 0}, {0, 1}, {-1, 1}}};
  for (const auto& [key, m] : index) {
    const auto [i, j, s] = key;
    const char sub = s == 0 ? 'A' : 'B';
    for (const auto& [di, dj] : steps) {
      auto it = index.find(Key{i + di, j + dj, s});
      if (it == index.end()) continue;
      const int target = it->second;
      const Vec2 v{di * kA1.x + dj * kA2.x, di * kA1.y + dj * kA2.y};
      const int nu = circulation(sub, v);
      auto amplitude = [nu](const RegionParams& r) { return -r.t_c * std::exp(cplx(0.0, nu * r.phi)); };
      const cplx a = 0.5 * (amplitude(params_for(p, model.sites[m].region)) +
                            amplitude(params_for(p, model.sites[target].region)));
      model.h(target, m) += a;  // |target><m|
      model.h(m, target) += std::conj(a);
    }
  }
  return model;
}

MatrixTuple scale_positions(const MatrixTuple& t, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw InputError("scale_positions: kappa must be positive");
  MatrixTuple out = t;
  for (auto& a : out.herm) a *= kappa;
  return out;
}

MatrixTuple scaled_tuple(const LatticeModel& model, double kappa) {
  return scale_positions(MatrixTuple{{model.x, model.y}, {model.h}}, kappa);
}

}  // namespace pseudospec
