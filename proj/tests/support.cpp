#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace support {

ComplexMatrix Rng::matrix(int n) {
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = complex_normal();
  return m;
}

ComplexMatrix Rng::hermitian(int n) {
  const ComplexMatrix g = matrix(n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix Rng::real_diagonal(int n) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = normal();
  return m;
}

ComplexMatrix Rng::unitary(int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(matrix(n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexVector Rng::unit_vector(int n) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal();
  return v / v.norm();
}

MatrixTuple Rng::tuple(int n, int d1, int d2) {
  MatrixTuple t;
  for (int i = 0; i < d1; ++i) t.herm.push_back(hermitian(n));
  for (int j = 0; j < d2; ++j) t.nonherm.push_back(matrix(n));
  return t;
}

ProbeSite Rng::site(int d1, int d2) {
  ProbeSite s;
  for (int i = 0; i < d1; ++i) s.lambda.push_back(normal());
  for (int j = 0; j < d2; ++j) s.nu.push_back(complex_normal());
  return s;
}

MatrixTuple commuting_hermitian_tuple(Rng& rng, int n, int d1, int d2) {
  const ComplexMatrix u = rng.unitary(n);
  MatrixTuple t;
  for (int i = 0; i < d1; ++i) t.herm.push_back(u * rng.real_diagonal(n) * u.adjoint());
  for (int j = 0; j < d2; ++j) {
    const ComplexMatrix h = u * rng.real_diagonal(n) * u.adjoint();
    t.nonherm.push_back(0.5 * (h + h.adjoint()));
  }
  for (auto& a : t.herm) a = (0.5 * (a + a.adjoint())).eval();
  return t;
}

double eigen_sigma_min(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double eigen_sigma_max(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<cplx> eigen_eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

double eigen_min_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix explicit_localizer(const MatrixTuple& t, const ProbeSite& site) {
  const int n = t.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix b = t.nonherm[0] - site.nu[0] * id;
  ComplexMatrix off = t.herm[0] - site.lambda[0] * id;
  ComplexMatrix off_adj = off;
  if (t.d1() == 2) {
    const ComplexMatrix a2 = t.herm[1] - site.lambda[1] * id;
    off = off - cplx(0.0, 1.0) * a2;
    off_adj = off_adj + cplx(0.0, 1.0) * a2;
  }
  ComplexMatrix l(2 * n, 2 * n);
  l << b, off, off_adj, -b.adjoint();
  return l;
}

double sampled_residual_min(const MatrixTuple& t, const ProbeSite& site, int samples, Rng& rng) {
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const ComplexVector psi = rng.unit_vector(t.dim());
    double sum = 0.0;
    for (int i = 0; i < t.d1(); ++i) sum += (t.herm[i] * psi - site.lambda[i] * psi).squaredNorm();
    for (int j = 0; j < t.d2(); ++j) sum += (t.nonherm[j] * psi - site.nu[j] * psi).squaredNorm();
    best = std::min(best, std::sqrt(sum));
  }
  return best;
}

std::vector<cplx> periodic_haldane_spectrum(int cells, const pseudospec::RegionParams& p) {
  const int n = 2 * cells * cells;
  auto wrap = [cells](int k) { return ((k % cells) + cells) % cells; };
  auto idx = [&](int i, int j, int s) { return 2 * (wrap(i) * cells + wrap(j)) + s; };
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      h(idx(i, j, 0), idx(i, j, 0)) = cplx(p.mass, -p.loss);
      h(idx(i, j, 1), idx(i, j, 1)) = cplx(-p.mass, -p.loss);
      const int a = idx(i, j, 0);
      for (int b : {idx(i, j, 1), idx(i + 1, j - 1, 1), idx(i, j - 1, 1)}) {
        h(a, b) += -p.t;
        h(b, a) += -p.t;
      }
      // Circulation signs for hops along +a1, +a2, a2 - a1 on the A
      // sublattice; the B sublattice carries the opposite signs.
      const int steps[3][3] = {{1, 0, 1}, {0, 1, -1}, {-1, 1, 1}};
      for (const auto& st : steps)
        for (int s = 0; s < 2; ++s) {
          const int nu = s == 0 ? st[2] : -st[2];
          const cplx amp = -p.t_c * std::exp(cplx(0.0, nu * p.phi));
          const int from = idx(i, j, s);
          const int to = idx(i + st[0], j + st[1], s);
          h(to, from) += amp;
          h(from, to) += std::conj(amp);
        }
    }
  return eigen_eigenvalues(h);
}

}  // namespace support
