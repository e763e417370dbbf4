#include "pseudospec/localizer.hpp"

#include <cmath>
#include <string>

#include "pseudospec/spectral_kernels.hpp"

namespace pseudospec {

int MatrixTuple::dim() const {
  if (!herm.empty()) return static_cast<int>(herm.front().rows());
  if (!nonherm.empty()) return static_cast<int>(nonherm.front().rows());
  return 0;
}

void MatrixTuple::validate() const {
  if (herm.empty() && nonherm.empty()) throw InputError("MatrixTuple: empty tuple");
  const int n = dim();
  auto check = [n](const ComplexMatrix& m, const std::string& name) {
    require_square_finite(m, name.c_str());
    if (m.rows() != n) throw InputError(name + ": dimension mismatch within tuple");
  };
  for (int i = 0; i < d1(); ++i) {
    const std::string name = "herm[" + std::to_string(i) + "]";
    check(herm[i], name);
    const double scale = std::max(1.0, herm[i].cwiseAbs().maxCoeff());
    if ((herm[i] - herm[i].adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw InputError(name + ": matrix is not Hermitian");
  }
  for (int j = 0; j < d2(); ++j) check(nonherm[j], "nonherm[" + std::to_string(j) + "]");
}

void ProbeSite::validate_against(const MatrixTuple& t) const {
  if (static_cast<int>(lambda.size()) != t.d1() || static_cast<int>(nu.size()) != t.d2())
    throw InputError("ProbeSite: coordinate count does not match the tuple");
  for (double l : lambda)
    if (!std::isfinite(l)) throw InputError("ProbeSite: non-finite lambda");
  for (const auto& v : nu)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InputError("ProbeSite: non-finite nu");
}

std::vector<ComplexMatrix> shifted_herm(const MatrixTuple& t, const ProbeSite& site) {
  std::vector<ComplexMatrix> out;
  out.reserve(t.herm.size());
  for (std::size_t i = 0; i < t.herm.size(); ++i) {
    ComplexMatrix m = t.herm[i];
    m.diagonal().array() -= site.lambda[i];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<ComplexMatrix> shifted_nonherm(const MatrixTuple& t, const ProbeSite& site) {
  std::vector<ComplexMatrix> out;
  out.reserve(t.nonherm.size());
  for (std::size_t j = 0; j < t.nonherm.size(); ++j) {
    ComplexMatrix m = t.nonherm[j];
    m.diagonal().array() -= site.nu[j];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// out += coeff * (g ⊗ m), g supplying the block index.
void add_kron(ComplexMatrix& out, const GaussianMatrix& g, const ComplexMatrix& m, cplx coeff = 1.0) {
  const Eigen::Index n = m.rows();
  for (int r = 0; r < g.size(); ++r)
    for (int c = 0; c < g.size(); ++c) {
      const GaussianInt v = g(r, c);
      if (v.is_zero()) continue;
      out.block(r * n, c * n, n, n) += coeff * cplx(v.re, v.im) * m;
    }
}

void require_localizer_shape(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  t.validate();
  site.validate_against(t);
  if (t.d2() != 1)
    throw UnsupportedError("nh_localizer: exactly one non-Hermitian matrix is supported");
  if (rep.d != t.d1())
    throw InputError("nh_localizer: Clifford representation built for d=" + std::to_string(rep.d) +
                     " but the tuple has " + std::to_string(t.d1()) + " Hermitian matrices");
}

}  // namespace

ComplexMatrix hermitian_localizer(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  t.validate();
  site.validate_against(t);
  if (t.d2() != 0) throw InputError("hermitian_localizer: tuple must not contain non-Hermitian matrices");
  if (rep.d < t.d1()) throw InputError("hermitian_localizer: Clifford representation too small");

  const int n = t.dim();
  ComplexMatrix out = ComplexMatrix::Zero(rep.size() * n, rep.size() * n);
  const auto shifted = shifted_herm(t, site);
  for (int i = 0; i < t.d1(); ++i) add_kron(out, rep.gammas[i], shifted[i]);
  return out;
}

ComplexMatrix nh_localizer(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  require_localizer_shape(t, site, rep);
  const int n = t.dim();
  ComplexMatrix out = ComplexMatrix::Zero(rep.size() * n, rep.size() * n);
  const auto shifted = shifted_herm(t, site);
  for (int i = 0; i < t.d1(); ++i) add_kron(out, rep.gammas[i], shifted[i]);
  const ComplexMatrix b = shifted_nonherm(t, site).front();
  add_kron(out, rep.diag_plus, b);
  add_kron(out, rep.diag_minus, b.adjoint());
  return out;
}

double commutator_sum_norm(const MatrixTuple& t) {
  double total = 0.0;
  for (int i = 0; i < t.d1(); ++i)
    for (int k = i + 1; k < t.d1(); ++k) {
      const ComplexMatrix c = t.herm[i] * t.herm[k] - t.herm[k] * t.herm[i];
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      // [A_i, A_k] is skew-Hermitian; i [A_i, A_k] is Hermitian.
      total += hermitian_operator_norm(cplx{0.0, 1.0} * c);
    }
  return total;
}

ComplexMatrix commutator_term(const MatrixTuple& t, const CliffordRep& rep) {
  const int n = t.dim();
  ComplexMatrix out = ComplexMatrix::Zero(rep.size() * n, rep.size() * n);
  for (int i = 0; i < t.d1(); ++i)
    for (int k = i + 1; k < t.d1(); ++k) {
      const ComplexMatrix c = t.herm[i] * t.herm[k] - t.herm[k] * t.herm[i];
      add_kron(out, rep.gammas[i] * rep.gammas[k], c);
    }
  return out;
}

ComplexMatrix f_term(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  require_localizer_shape(t, site, rep);
  const int n = t.dim();
  const auto shifted = shifted_herm(t, site);
  const ComplexMatrix b = shifted_nonherm(t, site).front();
  const ComplexMatrix b_adj = b.adjoint();

  ComplexMatrix half = ComplexMatrix::Zero(rep.size() * n, rep.size() * n);
  for (int i = 0; i < t.d1(); ++i) {
    add_kron(half, rep.gammas[i] * rep.diag_plus, shifted[i] * b);
    add_kron(half, rep.gammas[i] * rep.diag_minus, shifted[i] * b_adj);
  }
  return half + half.adjoint();
}

double f_term_norm(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  return hermitian_operator_norm(f_term(t, site, rep));
}

ComplexMatrix quadratic_block_part(const MatrixTuple& t, const ProbeSite& site, const CliffordRep& rep) {
  require_localizer_shape(t, site, rep);
  const int n = t.dim();
  ComplexMatrix squares = ComplexMatrix::Zero(n, n);
  for (const auto& a : shifted_herm(t, site)) squares += a * a;
  const ComplexMatrix b = shifted_nonherm(t, site).front();

  ComplexMatrix out = ComplexMatrix::Zero(rep.size() * n, rep.size() * n);
  add_kron(out, GaussianMatrix::identity(rep.size()), squares);
  add_kron(out, rep.diag_plus, b.adjoint() * b);
  add_kron(out, rep.diag_minus, b * b.adjoint(), -1.0);
  return out;
}

}  // namespace pseudospec
