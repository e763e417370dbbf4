#include "pseudospec/spectral_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <lapacke.h>

namespace pseudospec {

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool is_diagonal(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && m(i, j) != cplx{}) return false;
  return true;
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InputError(std::string(what) + ": matrix must be square and non-empty");
  if (!is_finite(m)) throw InputError(std::string(what) + ": matrix has non-finite entries");
}

bool spectral_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

namespace {

lapack_complex_double* as_lapack(cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

// The sweep parallelizes over probe sites; BLAS-level threading on top of
// that only oversubscribes the cores.
extern "C" void openblas_set_num_threads(int) __attribute__((weak));
[[maybe_unused]] const bool kSingleThreadedBackend = [] {
  if (openblas_set_num_threads) openblas_set_num_threads(1);
  return true;
}();

std::vector<cplx> sorted(const ComplexVector& v) {
  std::vector<cplx> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), spectral_less);
  return out;
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
  require_square_finite(m, "eigenvalues");
  return schur_spectrum(m).eigenvalues;
}

RealVector singular_values(const ComplexMatrix& m) {
  if (!is_finite(m)) throw InputError("singular_values: matrix has non-finite entries");
  if (m.size() == 0) return RealVector{};
  ComplexMatrix a = m;
  RealVector s(std::min(m.rows(), m.cols()));
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', lapack_int(a.rows()), lapack_int(a.cols()),
                                         as_lapack(a.data()), lapack_int(a.rows()), s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw InputError("singular_values: LAPACK zgesdd failed (info " + std::to_string(info) + ")");
  return s;
}

double sigma_min(const ComplexMatrix& m) {
  require_square_finite(m, "sigma_min");
  const RealVector s = singular_values(m);
  return s(s.size() - 1);
}

namespace {

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  ComplexMatrix a = h;
  RealVector w(h.rows());
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', lapack_int(a.rows()), as_lapack(a.data()),
                                         lapack_int(a.rows()), w.data());
  if (info != 0) throw InputError("hermitian eigenvalues: LAPACK zheevd failed (info " + std::to_string(info) + ")");
  return w;
}

}  // namespace

double hermitian_operator_norm(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  if (is_diagonal(h)) return h.diagonal().cwiseAbs().maxCoeff();
  const RealVector ev = hermitian_eigenvalues(h);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double hermitian_min_eigenvalue(const ComplexMatrix& h) {
  if (h.size() == 0) throw InputError("hermitian_min_eigenvalue: empty matrix");
  return hermitian_eigenvalues(h)(0);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (is_diagonal(m)) return m.diagonal().cwiseAbs().maxCoeff();
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  return singular_values(m)(0);
}

double min_abs(const std::vector<cplx>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : values) best = std::min(best, std::abs(v));
  return best;
}

double min_abs_real(const std::vector<cplx>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : values) best = std::min(best, std::abs(v.real()));
  return best;
}

SpectralSummary spectral_summary(const ComplexMatrix& m) {
  SpectralSummary out;
  out.eigenvalues = eigenvalues(m);
  out.sigma_min = sigma_min(m);
  out.min_abs_spec = min_abs(out.eigenvalues);
  out.min_abs_real_spec = min_abs_real(out.eigenvalues);
  return out;
}

SchurSpectrum schur_spectrum(const ComplexMatrix& m) {
  require_square_finite(m, "schur_spectrum");
  const lapack_int n = lapack_int(m.rows());
  ComplexMatrix t = m;
  ComplexVector w(n);
  lapack_int sdim = 0;
  lapack_complex_double unused_vs[1];
  const lapack_int info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'N', 'N', nullptr, n, as_lapack(t.data()), n, &sdim,
                                        as_lapack(w.data()), unused_vs, 1);
  if (info != 0) throw InputError("schur_spectrum: LAPACK zgees failed (info " + std::to_string(info) + ")");

  SchurSpectrum out;
  out.eigenvalues = sorted(w);
  const ComplexMatrix strict = t.triangularView<Eigen::StrictlyUpper>();
  out.departure.frobenius = strict.norm();
  out.departure.schur = out.departure.frobenius == 0.0 ? 0.0 : operator_norm(strict);
  return out;
}

Departure departure_from_normality(const ComplexMatrix& m) { return schur_spectrum(m).departure; }

double hermiticity_defect(const ComplexMatrix& m) {
  require_square_finite(m, "hermiticity_defect");
  const ComplexMatrix skew = m - m.adjoint();
  if (is_diagonal(skew)) return skew.diagonal().cwiseAbs().maxCoeff();
  // i (M - M^dagger) is Hermitian with the same norm.
  return hermitian_operator_norm(cplx{0.0, 1.0} * skew);
}

ComplexMatrix kron(const ComplexMatrix& outer, const ComplexMatrix& inner) {
  ComplexMatrix out = ComplexMatrix::Zero(outer.rows() * inner.rows(), outer.cols() * inner.cols());
  for (Eigen::Index r = 0; r < outer.rows(); ++r)
    for (Eigen::Index c = 0; c < outer.cols(); ++c)
      if (outer(r, c) != cplx{})
        out.block(r * inner.rows(), c * inner.cols(), inner.rows(), inner.cols()) = outer(r, c) * inner;
  return out;
}

}  // namespace pseudospec
