#include "pseudospec/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pseudospec/gaps.hpp"
#include "pseudospec/quadratic.hpp"

namespace pseudospec {

BoundReport make_report(std::string name, double lhs, double rhs, double scale) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.scale = scale;
  r.slack = rhs - lhs;
  r.satisfied = lhs <= rhs + kBoundTolerance * scale;
  return r;
}

double BoundTerms::linear_radial() const { return std::sqrt(static_cast<double>(dimension)) * nonnormal_part + departure; }

double BoundTerms::radial_quadratic() const { return std::sqrt(commutators + f_norm); }

BoundTerms bound_terms(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep, double departure) {
  BoundTerms out;
  out.dimension = rep.size() * t.dim();
  const ComplexMatrix b = shifted_nonherm(t, site).front();
  out.nonnormal_part = hermiticity_defect(b);
  out.departure = departure >= 0.0 ? departure : departure_from_normality(nh_localizer(t, site, rep)).schur;
  out.commutators = commutator_sum_norm(t);
  out.f_norm = f_term_norm(t, site, rep);
  return out;
}

std::vector<BoundReport> check_gap_bounds(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  const ComplexMatrix l = nh_localizer(t, site, rep);
  const SchurSpectrum schur = schur_spectrum(l);
  const double linear = min_abs_real(schur.eigenvalues);
  const double radial = sigma_min(l);
  const double q = quadratic_gaps(t, site).q;
  const BoundTerms terms = bound_terms(t, site, rep, schur.departure.schur);
  const double scale = std::max(1.0, operator_norm(l));

  std::vector<BoundReport> out;
  out.push_back(make_report("linear_radial", std::abs(linear - radial), terms.linear_radial(), scale));
  out.push_back(make_report("radial_quadratic", std::abs(radial - q), terms.radial_quadratic(), scale));
  out.push_back(make_report("linear_quadratic", std::abs(linear - q), terms.linear_quadratic(), scale));
  for (auto& r : out) {
    r.diagnostics["linear"] = linear;
    r.diagnostics["radial"] = radial;
    r.diagnostics["q"] = q;
    r.diagnostics["departure_schur"] = schur.departure.schur;
    r.diagnostics["departure_frobenius"] = schur.departure.frobenius;
  }
  return out;
}

BoundReport check_linear_vs_radial(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return check_gap_bounds(t, site, rep)[0];
}

BoundReport check_radial_vs_quadratic(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return check_gap_bounds(t, site, rep)[1];
}

BoundReport check_linear_vs_quadratic(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return check_gap_bounds(t, site, rep)[2];
}

namespace {

// Z^{-1} for Z^2 = sum (A_i - l_i)^2, plus cond(Z).
struct InverseRoot {
  ComplexMatrix z_inv;
  double condition = 0.0;
};

InverseRoot inverse_root(const MatrixTuple& t, const ProbeSite& site) {
  const auto shifted = shifted_herm(t, site);
  if (shifted.empty()) throw InputError("check_locality: tuple has no Hermitian matrices");
  const int n = t.dim();

  double a_scale = 1.0;
  for (const auto& a : shifted) a_scale = std::max(a_scale, operator_norm(a));
  if (commutator_sum_norm(t) > 1e-10 * a_scale * a_scale)
    throw InputError("check_locality: Hermitian matrices do not commute");

  bool diagonal = true;
  for (const auto& a : shifted) diagonal = diagonal && is_diagonal(a);

  RealVector w;
  ComplexMatrix v;
  if (diagonal) {
    w = RealVector::Zero(n);
    for (const auto& a : shifted) w += a.diagonal().cwiseAbs2();
  } else {
    ComplexMatrix z2 = ComplexMatrix::Zero(n, n);
    for (const auto& a : shifted) z2 += a * a;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (z2 + z2.adjoint()));
    w = solver.eigenvalues();
    v = solver.eigenvectors();
  }
  const double w_min = w.minCoeff();
  const double w_max = w.maxCoeff();
  if (!(w_min > 1e-12 * std::max(1.0, w_max)))
    throw InputError("check_locality: sum of squared shifted positions is not invertible at this site");

  InverseRoot out;
  out.condition = std::sqrt(w_max / w_min);
  const RealVector inv = w.cwiseSqrt().cwiseInverse();
  out.z_inv = diagonal ? ComplexMatrix(inv.cast<cplx>().asDiagonal())
                       : ComplexMatrix(v * inv.cast<cplx>().asDiagonal() * v.adjoint());
  return out;
}

double congruence_norm(const ComplexMatrix& z_inv, const ComplexMatrix& m) {
  const ComplexMatrix s = z_inv * m * z_inv;
  return hermitian_operator_norm(0.5 * (s + s.adjoint()));
}

BoundReport sandwich(std::string name, double base, double perturbed, double k, double scale) {
  BoundReport r;
  r.name = std::move(name);
  r.scale = scale;
  r.lhs = perturbed;
  r.diagnostics["k"] = k;
  r.diagnostics["unperturbed"] = base;
  if (!(k < 1.0)) {
    r.hypothesis_met = false;
    r.rhs = base;
    return r;
  }
  const double lower = std::sqrt(1.0 - k) * base;
  const double upper = std::sqrt(1.0 + k) * base;
  r.rhs = upper;
  r.diagnostics["lower"] = lower;
  r.diagnostics["upper"] = upper;
  r.slack = std::min(upper - perturbed, perturbed - lower);
  r.satisfied = r.slack >= -kBoundTolerance * scale;
  return r;
}

}  // namespace

LocalityReport check_locality(const MatrixTuple& t, const ProbeSite& site, const std::vector<ComplexMatrix>& c) {
  t.validate();
  site.validate_against(t);
  if (static_cast<int>(c.size()) != t.d2()) throw InputError("check_locality: one perturbation per non-Hermitian matrix");
  for (const auto& cj : c) {
    require_square_finite(cj, "check_locality perturbation");
    if (cj.rows() != t.dim()) throw InputError("check_locality: perturbation dimension mismatch");
  }

  const InverseRoot root = inverse_root(t, site);
  const int n = t.dim();
  ComplexMatrix m_right = ComplexMatrix::Zero(n, n);
  ComplexMatrix m_left = ComplexMatrix::Zero(n, n);
  const auto shifted = shifted_nonherm(t, site);
  MatrixTuple perturbed = t;
  for (int j = 0; j < t.d2(); ++j) {
    const ComplexMatrix& b = shifted[j];
    const ComplexMatrix& cj = c[j];
    m_right += b.adjoint() * cj + cj.adjoint() * b + cj.adjoint() * cj;
    m_left += b * cj.adjoint() + cj * b.adjoint() + cj * cj.adjoint();
    perturbed.nonherm[j] += cj;
  }

  LocalityReport out;
  out.k_right = congruence_norm(root.z_inv, m_right);
  out.k_left = congruence_norm(root.z_inv, m_left);
  out.z_condition = root.condition;

  const QuadraticGaps base = quadratic_gaps(t, site);
  const QuadraticGaps pert = quadratic_gaps(perturbed, site);
  const double scale = std::max(1.0, operator_norm(rm_stack(t, site)));
  out.rq = sandwich("locality_rq", base.rq, pert.rq, out.k_right, scale);
  out.lq = sandwich("locality_lq", base.lq, pert.lq, out.k_left, scale);
  out.q = sandwich("locality_q", base.q, pert.q, std::max(out.k_right, out.k_left), scale);
  for (BoundReport* r : {&out.rq, &out.lq, &out.q}) r->diagnostics["z_condition"] = root.condition;
  return out;
}

}  // namespace pseudospec
