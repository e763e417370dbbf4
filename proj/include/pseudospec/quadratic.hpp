#pragma once

// Right/left quadratic composite operators and the quadratic gaps.
//
//   RQ = sum_i (A_i - l_i)^2 + sum_j (B_j - nu_j)^dagger (B_j - nu_j)
//   LQ = sum_i (A_i - l_i)^2 + sum_j (B_j - nu_j) (B_j - nu_j)^dagger
//
// Q is the direct sum RQ ⊕ LQ and is never materialized.

#include <optional>

#include "pseudospec/localizer.hpp"

namespace pseudospec {

struct QuadraticOperators {
  ComplexMatrix rq;
  ComplexMatrix lq;
};

struct QuadraticGaps {
  double rq = 0.0;
  double lq = 0.0;
  double q = 0.0;  // min(rq, lq)
};

/// Gap values at one probe site. Gaps that were not requested stay empty.
struct GapRecord {
  ProbeSite site;
  std::optional<double> linear;
  std::optional<double> radial;
  std::optional<double> rq;
  std::optional<double> lq;
  std::optional<double> q;
};

QuadraticOperators build_quadratic(const MatrixTuple& t, const ProbeSite& site);

/// Vertical stack [A_1-l_1; ...; A_d1-l_d1; B_1-nu_1; ...], ((d1+d2) n) x n.
ComplexMatrix rm_stack(const MatrixTuple& t, const ProbeSite& site);

/// The tuple with every B_j replaced by B_j^dagger; paired with
/// conjugate_site() it turns left quantities into right ones.
MatrixTuple adjoint_tuple(const MatrixTuple& t);
ProbeSite conjugate_site(const ProbeSite& site);

/// sqrt(sigma_min(RQ)) via the singular values of rm_stack for n <= 1024,
/// via the eigenvalues of RQ otherwise.
double right_quadratic_gap(const MatrixTuple& t, const ProbeSite& site);
double left_quadratic_gap(const MatrixTuple& t, const ProbeSite& site);

QuadraticGaps quadratic_gaps(const MatrixTuple& t, const ProbeSite& site);

struct ExpectationVariance {
  cplx expectation;
  double variance_sq = 0.0;
};

/// E = <B psi, psi>, V^2 = <B^dagger B psi, psi> - |E|^2.
/// Throws InputError if ||psi|| differs from 1 by more than 1e-12.
ExpectationVariance expectation_variance(const ComplexMatrix& b, const ComplexVector& psi);

struct QuadraticMembership {
  bool in_rq = false;
  bool in_lq = false;
  bool in_q = false;
};

/// Closed epsilon-pseudospectrum membership: gap <= eps.
QuadraticMembership quadratic_epsilon_membership(const MatrixTuple& t, const ProbeSite& site, double eps);

/// Stacked column norm || [A_1 - C_1; ...; B_1 - D_1; ...] ||_2.
double tuple_distance(const MatrixTuple& a, const MatrixTuple& b);

/// Euclidean distance between probe sites in R^{d1} x C^{d2}.
double probe_distance(const ProbeSite& a, const ProbeSite& b);

}  // namespace pseudospec
