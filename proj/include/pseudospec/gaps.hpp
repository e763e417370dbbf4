#pragma once

// Clifford linear and radial gaps of the non-Hermitian localizer, residual
// certificates for approximate joint eigenvectors, and single-matrix
// pseudospectrum helpers.

#include <vector>

#include "pseudospec/localizer.hpp"

namespace pseudospec {

/// min |Re lambda| over the spectrum of nh_localizer(t, site, rep).
double clifford_linear_gap(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// sigma_min of nh_localizer(t, site, rep).
double clifford_radial_gap(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// sigma_min of the Hermitian localizer of a purely Hermitian tuple, using a
/// representation with exactly t.d1() generators.
double hermitian_localizer_gap(const MatrixTuple& t, const ProbeSite& site);

/// A Hermitian B with real nu viewed as one more Hermitian position:
/// (A_1..A_d, B) at (lambda_1..lambda_d, Re nu).
MatrixTuple hermitian_extension(const MatrixTuple& t);
ProbeSite hermitian_extension(const ProbeSite& site);

enum class Side { right, left, both };

const char* side_name(Side s);

struct ResidualCertificate {
  ComplexVector psi;
  Side side = Side::right;
  // ||(A_i - l_i) psi|| for every i, then ||(B - nu) psi|| (right) or
  // ||(B - nu)^dagger psi|| (left).
  std::vector<double> residuals;
  double bound = 0.0;      // sqrt(2m) sqrt(eps1^2 + eps2)
  int block_index = 0;     // 0-based, among the 2m blocks
  double eps1 = 0.0;       // radial gap
  double eps2 = 0.0;       // commutator_sum_norm + f_term_norm
  double residual_norm() const;
};

/// Splits the smallest right singular vector of L into 2m blocks, keeps the
/// largest one (lowest index on ties) and reports its residuals.
ResidualCertificate extract_approx_eigvec(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

struct ReverseMembership {
  double eps = 0.0;
  double eps1 = 0.0;  // residual sum entering eps
  double eps2 = 0.0;
  double radial_gap = 0.0;
  bool holds = false;  // radial_gap <= eps (to 1e-9 scaled)
};

/// Radius of the radial pseudospectrum certified by a unit vector psi:
///   right: sqrt(sum ||(A_i-l_i)psi||^2 + ||(B-nu)psi||^2 + eps2)
///   left:  same with (B-nu)^dagger
///   both:  sqrt(eps1/sqrt(2) + eps2), eps1 = 2 sum ||(A_i-l_i)psi||^2 + ||(B-nu)psi||^2 + ||(B-nu)^dagger psi||^2
/// with eps2 = commutator_sum_norm + f_term_norm. Throws InputError on non-unit psi.
ReverseMembership reverse_membership_eps(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep,
                                         const ComplexVector& psi, Side side);

/// sigma_min(A - z I).
double single_matrix_pseudospectrum_eps(const ComplexMatrix& a, cplx z);

/// Witnesses for sigma = sigma_min(A - z): unit v with ||(A - z) v|| = sigma and
/// E = -sigma u v^dagger with ||E|| = sigma making z an eigenvalue of A + E.
struct PseudospectrumWitness {
  double sigma = 0.0;
  ComplexVector u;
  ComplexVector v;
  ComplexMatrix perturbation;
};

PseudospectrumWitness pseudospectrum_witness(const ComplexMatrix& a, cplx z);

/// Makes the first component with |v_i| > 1e-12 real and positive.
void canonical_phase(ComplexVector& v);

}  // namespace pseudospec
