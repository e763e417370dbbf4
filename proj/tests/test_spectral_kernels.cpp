#include <doctest.h>

#include <cmath>

#include "pseudospec/spectral_kernels.hpp"
#include "support.hpp"

using namespace pseudospec;

namespace {

ComplexMatrix jordan2() {
  ComplexMatrix j = ComplexMatrix::Zero(2, 2);
  j(0, 1) = 1.0;
  return j;
}

}  // namespace

TEST_CASE("sigma_min and eigenvalues agree with Eigen's own solvers") {
  support::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 9);
    const ComplexMatrix m = rng.matrix(n);
    const double scale = std::max(1.0, support::eigen_sigma_max(m));
    CHECK(std::abs(sigma_min(m) - support::eigen_sigma_min(m)) <= 1e-10 * scale);
    CHECK(std::abs(operator_norm(m) - support::eigen_sigma_max(m)) <= 1e-10 * scale);

    const auto ours = eigenvalues(m);
    const auto ref = support::eigen_eigenvalues(m);
    REQUIRE(ours.size() == ref.size());
    // Match each eigenvalue to its nearest reference value.
    for (const auto& z : ours) {
      double best = 1e300;
      for (const auto& w : ref) best = std::min(best, std::abs(z - w));
      CHECK(best <= 1e-8 * scale);
    }
  }
}

TEST_CASE("spectral summary invariants on random matrices") {
  support::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = rng.matrix(rng.integer(1, 7));
    const SpectralSummary s = spectral_summary(m);
    const double tol = 1e-10 * std::max(1.0, operator_norm(m));
    CHECK(s.sigma_min <= s.min_abs_spec + tol);
    CHECK(s.min_abs_real_spec <= s.min_abs_spec + tol);
    CHECK(s.sigma_min >= 0.0);
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(), spectral_less));
  }
}

TEST_CASE("Ruhe-type bound holds with the Schur departure") {
  support::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = rng.matrix(rng.integer(1, 7));
    const SchurSpectrum s = schur_spectrum(m);
    const double tol = 1e-9 * std::max(1.0, operator_norm(m));
    CHECK(std::abs(sigma_min(m) - min_abs(s.eigenvalues)) <= s.departure.schur + tol);
    CHECK(s.departure.schur <= s.departure.frobenius + tol);
  }
}

TEST_CASE("Frobenius departure is sqrt(||M||_F^2 - sum |lambda|^2)") {
  support::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = rng.matrix(6);
    double sum = 0.0;
    for (const auto& z : support::eigen_eigenvalues(m)) sum += std::norm(z);
    const double expected = std::sqrt(std::max(0.0, m.squaredNorm() - sum));
    CHECK(departure_from_normality(m).frobenius == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("Jordan block: eigenvalue zero, singular, unit departure") {
  const ComplexMatrix j = jordan2();
  const SpectralSummary s = spectral_summary(j);
  CHECK(s.min_abs_spec == 0.0);
  CHECK(s.sigma_min == doctest::Approx(0.0));
  const Departure d = departure_from_normality(j);
  CHECK(d.schur == doctest::Approx(1.0));
  CHECK(d.frobenius == doctest::Approx(1.0));

  // sigma_min < min|Spec| strictly for a shifted Jordan block.
  ComplexMatrix shifted = j;
  shifted.diagonal().array() -= 0.1;
  CHECK(sigma_min(shifted) < min_abs(eigenvalues(shifted)) - 1e-3);
}

TEST_CASE("normal matrices have zero departure") {
  support::Rng rng(15);
  const ComplexMatrix u = rng.unitary(5);
  ComplexMatrix d = ComplexMatrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) d(i, i) = rng.complex_normal();
  const ComplexMatrix m = u * d * u.adjoint();
  CHECK(departure_from_normality(m).schur <= 1e-12 * operator_norm(m) * 10);
  CHECK(departure_from_normality(d).schur == 0.0);
}

TEST_CASE("hermiticity defect") {
  support::Rng rng(16);
  const ComplexMatrix h = rng.hermitian(4);
  CHECK(hermiticity_defect(h) <= 1e-14);
  ComplexMatrix lossy = h;
  lossy(2, 2) += cplx(0.0, -0.2);
  CHECK(hermiticity_defect(lossy) == doctest::Approx(0.4).epsilon(1e-12));

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(1, 1) = cplx(1.0, -0.2);
  CHECK(hermiticity_defect(diag) == 0.4);
}

TEST_CASE("kron places the outer factor on the block index") {
  ComplexMatrix outer(2, 2);
  outer << 0, 1, 1, 0;
  ComplexMatrix inner(2, 2);
  inner << 1, 2, 3, 4;
  const ComplexMatrix k = kron(outer, inner);
  CHECK(k.block(0, 2, 2, 2) == inner);
  CHECK(k.block(2, 0, 2, 2) == inner);
  CHECK(k.block(0, 0, 2, 2).isZero());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(sigma_min(ComplexMatrix::Zero(2, 3)), InputError);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(eigenvalues(bad), InputError);
  CHECK_THROWS_AS(schur_spectrum(ComplexMatrix()), InputError);
}
