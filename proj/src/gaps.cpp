#include "pseudospec/gaps.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "pseudospec/spectral_kernels.hpp"

namespace pseudospec {

double clifford_linear_gap(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return min_abs_real(eigenvalues(nh_localizer(t, site, rep)));
}

double clifford_radial_gap(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return sigma_min(nh_localizer(t, site, rep));
}

double hermitian_localizer_gap(const MatrixTuple& t, const ProbeSite& site) {
  return sigma_min(hermitian_localizer(t, site, build_rep(t.d1())));
}

MatrixTuple hermitian_extension(const MatrixTuple& t) {
  if (t.d2() != 1) throw InputError("hermitian_extension: expected exactly one non-Hermitian slot");
  MatrixTuple out{t.herm, {}};
  out.herm.push_back(t.nonherm.front());
  out.validate();
  return out;
}

ProbeSite hermitian_extension(const ProbeSite& site) {
  if (site.nu.size() != 1) throw InputError("hermitian_extension: expected exactly one nu");
  ProbeSite out{site.lambda, {}};
  out.lambda.push_back(site.nu.front().real());
  return out;
}

const char* side_name(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::both: return "both";
  }
  return "?";
}

double ResidualCertificate::residual_norm() const {
  double sum = 0.0;
  for (double r : residuals) sum += r * r;
  return std::sqrt(sum);
}

void canonical_phase(ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) {
      v *= std::conj(v(i)) / mag;
      v(i) = cplx(v(i).real(), 0.0);
      return;
    }
  }
}

namespace {

double localizer_eps2(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return commutator_sum_norm(t) + f_term_norm(t, site, rep);
}

std::vector<double> herm_residuals(const MatrixTuple& t, const ProbeSite& site, const ComplexVector& psi) {
  std::vector<double> out;
  for (const auto& a : shifted_herm(t, site)) out.push_back((a * psi).norm());
  return out;
}

}  // namespace

ResidualCertificate extract_approx_eigvec(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  const ComplexMatrix l = nh_localizer(t, site, rep);
  Eigen::JacobiSVD<ComplexMatrix> svd(l, Eigen::ComputeFullV);
  const Eigen::Index last = l.cols() - 1;
  ComplexVector big_psi = svd.matrixV().col(last);
  canonical_phase(big_psi);

  const int n = t.dim();
  int best = 0;
  double best_norm = -1.0;
  for (int k = 0; k < rep.size(); ++k) {
    const double nrm = big_psi.segment(static_cast<Eigen::Index>(k) * n, n).norm();
    if (nrm > best_norm) {
      best_norm = nrm;
      best = k;
    }
  }

  ResidualCertificate cert;
  cert.block_index = best;
  cert.side = best < rep.m ? Side::right : Side::left;
  cert.psi = big_psi.segment(static_cast<Eigen::Index>(best) * n, n) / best_norm;
  cert.residuals = herm_residuals(t, site, cert.psi);
  const ComplexMatrix b = shifted_nonherm(t, site).front();
  cert.residuals.push_back(cert.side == Side::right ? (b * cert.psi).norm() : (b.adjoint() * cert.psi).norm());
  cert.eps1 = svd.singularValues()(last);
  cert.eps2 = localizer_eps2(t, site, rep);
  cert.bound = std::sqrt(2.0 * rep.m) * std::sqrt(cert.eps1 * cert.eps1 + cert.eps2);
  return cert;
}

ReverseMembership reverse_membership_eps(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep,
                                         const ComplexVector& psi, Side side) {
  const ComplexMatrix l = nh_localizer(t, site, rep);
  if (psi.size() != t.dim()) throw InputError("reverse_membership_eps: psi length mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw InputError("reverse_membership_eps: psi must be a unit vector");

  double herm_sq = 0.0;
  for (double r : herm_residuals(t, site, psi)) herm_sq += r * r;
  const ComplexMatrix b = shifted_nonherm(t, site).front();
  const double right_sq = (b * psi).squaredNorm();
  const double left_sq = (b.adjoint() * psi).squaredNorm();

  ReverseMembership out;
  out.eps2 = localizer_eps2(t, site, rep);
  switch (side) {
    case Side::right:
      out.eps1 = herm_sq + right_sq;
      out.eps = std::sqrt(out.eps1 + out.eps2);
      break;
    case Side::left:
      out.eps1 = herm_sq + left_sq;
      out.eps = std::sqrt(out.eps1 + out.eps2);
      break;
    case Side::both:
      out.eps1 = 2.0 * herm_sq + right_sq + left_sq;
      out.eps = std::sqrt(out.eps1 / std::sqrt(2.0) + out.eps2);
      break;
  }
  out.radial_gap = sigma_min(l);
  out.holds = out.radial_gap <= out.eps + 1e-9 * std::max(1.0, operator_norm(l));
  return out;
}

double single_matrix_pseudospectrum_eps(const ComplexMatrix& a, cplx z) {
  require_square_finite(a, "single_matrix_pseudospectrum_eps");
  ComplexMatrix shifted = a;
  shifted.diagonal().array() -= z;
  return sigma_min(shifted);
}

PseudospectrumWitness pseudospectrum_witness(const ComplexMatrix& a, cplx z) {
  require_square_finite(a, "pseudospectrum_witness");
  ComplexMatrix shifted = a;
  shifted.diagonal().array() -= z;
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index last = a.cols() - 1;
  PseudospectrumWitness w;
  w.sigma = svd.singularValues()(last);
  w.u = svd.matrixU().col(last);
  w.v = svd.matrixV().col(last);
  w.perturbation = -w.sigma * w.u * w.v.adjoint();
  return w;
}

}  // namespace pseudospec
