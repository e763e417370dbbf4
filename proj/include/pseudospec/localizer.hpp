#pragma once

// Hermitian and non-Hermitian spectral localizers.
//
// Block convention: the Clifford factor is the outer (coarse) index and the
// physical matrix the inner one, so for d = 1, m = 1
//
//     L = [[B - nu,      A - lambda     ],
//          [A - lambda, -(B - nu)^dagger]].

#include <vector>

#include "pseudospec/clifford.hpp"
#include "pseudospec/common.hpp"

namespace pseudospec {

/// The system (A, B): Hermitian matrices A_i and non-Hermitian matrices B_j,
/// all n x n. Position scaling (kappa) is applied by the caller.
struct MatrixTuple {
  std::vector<ComplexMatrix> herm;
  std::vector<ComplexMatrix> nonherm;

  int dim() const;
  int d1() const { return static_cast<int>(herm.size()); }
  int d2() const { return static_cast<int>(nonherm.size()); }

  /// Throws InputError on empty tuples, mismatched or non-finite matrices, or
  /// herm entries that are not Hermitian to 1e-12 * ||A_i||.
  void validate() const;
};

/// Probe site (lambda, nu) in R^{d1} x C^{d2}.
struct ProbeSite {
  std::vector<double> lambda;
  std::vector<cplx> nu;

  void validate_against(const MatrixTuple& t) const;
};

/// A_i - lambda_i, B_j - nu_j for every member of the tuple.
std::vector<ComplexMatrix> shifted_herm(const MatrixTuple& t, const ProbeSite& site);
std::vector<ComplexMatrix> shifted_nonherm(const MatrixTuple& t, const ProbeSite& site);

/// sum_i (A_i - lambda_i) ⊗ Gamma_i. Requires t.d2() == 0 and rep.d >= t.d1().
ComplexMatrix hermitian_localizer(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// Non-Hermitian localizer; requires t.d2() == 1 and rep.d == t.d1().
ComplexMatrix nh_localizer(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// sum_{i<k} ||[A_i, A_k]||.
double commutator_sum_norm(const MatrixTuple& t);

/// sum_{i<j} [A_i, A_j] ⊗ Gamma_i Gamma_j (probe-independent).
ComplexMatrix commutator_term(const MatrixTuple& t, const CliffordRep& rep);

/// The probe-dependent cross term F of L^dagger L:
///   sum_i (A_i-l_i)(B-nu) ⊗ Gamma_i P+  + h.c.
/// + sum_i (A_i-l_i)(B-nu)^dagger ⊗ Gamma_i P-  + h.c.
/// with P+ = diag(I_m, 0) and P- = diag(0, -I_m).
ComplexMatrix f_term(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

double f_term_norm(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

/// The block-diagonal part of L^dagger L that survives when commutators and F
/// vanish:
///   sum_i (A_i-l_i)^2 ⊗ I + (B-nu)^dagger (B-nu) ⊗ diag(I,0) + (B-nu)(B-nu)^dagger ⊗ diag(0,I).
ComplexMatrix quadratic_block_part(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep);

}  // namespace pseudospec
