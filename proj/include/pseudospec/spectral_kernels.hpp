#pragma once

// Dense spectral primitives shared by every other module: eigenvalues,
// smallest singular values, operator norms, and Schur-based departure from
// normality. Everything here is a pure function of its input.

#include <vector>

#include "pseudospec/common.hpp"

namespace pseudospec {

/// Eigenvalues with their spectral quantities of interest.
struct SpectralSummary {
  std::vector<cplx> eigenvalues;  // sorted by real part, ties by imaginary part
  double sigma_min = 0.0;
  double min_abs_spec = 0.0;
  double min_abs_real_spec = 0.0;
};

/// Both departure-from-normality surrogates taken from one Schur form
/// M = Q (D + U) Q^dagger.
struct Departure {
  double schur = 0.0;      // ||U||_2, an upper bound on the Ruhe infimum
  double frobenius = 0.0;  // ||U||_F, identical for every Schur form
};

/// Throws InputError unless `m` is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const char* what);

bool is_finite(const ComplexMatrix& m);
bool is_diagonal(const ComplexMatrix& m);

/// Total order used for spectra: real part, then imaginary part.
bool spectral_less(const cplx& a, const cplx& b);

std::vector<cplx> eigenvalues(const ComplexMatrix& m);

/// Singular values in descending order (works for rectangular input).
RealVector singular_values(const ComplexMatrix& m);

double sigma_min(const ComplexMatrix& m);

/// Spectral norm. Diagonal input is handled exactly (max |m_ii|).
double operator_norm(const ComplexMatrix& m);

/// Spectral norm of a Hermitian matrix via its eigenvalues.
double hermitian_operator_norm(const ComplexMatrix& h);

/// Smallest eigenvalue of a Hermitian matrix.
double hermitian_min_eigenvalue(const ComplexMatrix& h);

SpectralSummary spectral_summary(const ComplexMatrix& m);

/// Min |lambda| and min |Re lambda| of an eigenvalue list.
double min_abs(const std::vector<cplx>& values);
double min_abs_real(const std::vector<cplx>& values);

/// Eigenvalues and departure read off a single Schur factorization.
struct SchurSpectrum {
  std::vector<cplx> eigenvalues;  // sorted
  Departure departure;
};

SchurSpectrum schur_spectrum(const ComplexMatrix& m);

Departure departure_from_normality(const ComplexMatrix& m);

/// ||M - M^dagger||_2; zero iff M is Hermitian.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product with the coarse (block) index taken from `outer`.
ComplexMatrix kron(const ComplexMatrix& outer, const ComplexMatrix& inner);

}  // namespace pseudospec
