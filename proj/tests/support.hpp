#pragma once

// Random instance generators and independent reference computations used by
// the unit tests and the acceptance binary. The references deliberately use
// Eigen's own solvers and explicit block formulas instead of the library's
// LAPACK-backed kernels.

#include <cstdint>
#include <random>
#include <vector>

#include "pseudospec/localizer.hpp"
#include "pseudospec/models.hpp"

namespace support {

using pseudospec::ComplexMatrix;
using pseudospec::ComplexVector;
using pseudospec::cplx;
using pseudospec::MatrixTuple;
using pseudospec::ProbeSite;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx complex_normal() { return {normal(), normal()}; }

  ComplexMatrix matrix(int n);
  ComplexMatrix hermitian(int n);
  ComplexMatrix real_diagonal(int n);
  ComplexMatrix unitary(int n);
  ComplexVector unit_vector(int n);

  MatrixTuple tuple(int n, int d1, int d2);
  ProbeSite site(int d1, int d2);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Hermitian tuple entries U D_i U^dagger sharing one random unitary.
MatrixTuple commuting_hermitian_tuple(Rng& rng, int n, int d1, int d2);

double eigen_sigma_min(const ComplexMatrix& m);
double eigen_sigma_max(const ComplexMatrix& m);
std::vector<cplx> eigen_eigenvalues(const ComplexMatrix& m);
double eigen_min_eigenvalue(const ComplexMatrix& h);

/// Non-Hermitian localizer written out blockwise for d1 = 1 or 2, d2 = 1:
///   d1 = 1: [[B-nu, A-l], [A-l, -(B-nu)^dagger]]
///   d1 = 2: [[B-nu, (A1-l1) - i(A2-l2)], [(A1-l1) + i(A2-l2), -(B-nu)^dagger]]
ComplexMatrix explicit_localizer(const MatrixTuple& t, const ProbeSite& site);

/// Minimum over `samples` random unit vectors of
/// sqrt(sum ||(A_i - l_i) psi||^2 + sum ||(B_j - nu_j) psi||^2).
double sampled_residual_min(const MatrixTuple& t, const ProbeSite& site, int samples, Rng& rng);

/// Eigenvalues of a uniform Haldane model on a cells x cells torus.
std::vector<cplx> periodic_haldane_spectrum(int cells, const pseudospec::RegionParams& p);

}  // namespace support
