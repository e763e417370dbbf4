#include "pseudospec/clifford.hpp"

#include <sstream>

namespace pseudospec {

GaussianMatrix GaussianMatrix::identity(int size) {
  GaussianMatrix out(size);
  for (int i = 0; i < size; ++i) out(i, i) = {1, 0};
  return out;
}

GaussianMatrix GaussianMatrix::adjoint() const {
  GaussianMatrix out(size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

bool GaussianMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

ComplexMatrix GaussianMatrix::to_complex() const {
  ComplexMatrix out(size_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) out(r, c) = cplx(static_cast<double>((*this)(r, c).re),
                                                     static_cast<double>((*this)(r, c).im));
  return out;
}

GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b) {
  GaussianMatrix out(a.size_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b) {
  GaussianMatrix out(a.size_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  const int n = a.size_;
  GaussianMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const GaussianInt ark = a(r, k);
      if (ark.is_zero()) continue;
      for (int c = 0; c < n; ++c) out(r, c) = out(r, c) + ark * b(k, c);
    }
  return out;
}

GaussianMatrix kron(const GaussianMatrix& outer, const GaussianMatrix& inner) {
  const int no = outer.size();
  const int ni = inner.size();
  GaussianMatrix out(no * ni);
  for (int r = 0; r < no; ++r)
    for (int c = 0; c < no; ++c)
      for (int i = 0; i < ni; ++i)
        for (int j = 0; j < ni; ++j) out(r * ni + i, c * ni + j) = outer(r, c) * inner(i, j);
  return out;
}

namespace pauli {

GaussianMatrix identity() { return GaussianMatrix::identity(2); }

GaussianMatrix x() {
  GaussianMatrix s(2);
  s(0, 1) = {1, 0};
  s(1, 0) = {1, 0};
  return s;
}

GaussianMatrix y() {
  GaussianMatrix s(2);
  s(0, 1) = {0, -1};
  s(1, 0) = {0, 1};
  return s;
}

GaussianMatrix z() {
  GaussianMatrix s(2);
  s(0, 0) = {1, 0};
  s(1, 1) = {-1, 0};
  return s;
}

}  // namespace pauli

namespace {

enum class FactorOrder { ChainInner, ChainOuter };

// Odd chain of length k. With ChainInner the existing generators stay in the
// left (outer) Kronecker slot, which is the textbook recursion; ChainOuter
// swaps the factors.
std::vector<GaussianMatrix> chain(int k, FactorOrder order) {
  std::vector<GaussianMatrix> gens = {pauli::x(), pauli::y(), pauli::z()};
  for (int count = 3; count < k; count += 2) {
    const int m = gens.front().size();
    const GaussianMatrix id = GaussianMatrix::identity(m);
    std::vector<GaussianMatrix> next;
    next.reserve(gens.size() + 2);
    if (order == FactorOrder::ChainInner) {
      for (const auto& g : gens) next.push_back(kron(g, pauli::x()));
      next.push_back(kron(id, pauli::y()));
      next.push_back(kron(id, pauli::z()));
    } else {
      for (const auto& g : gens) next.push_back(kron(pauli::x(), g));
      next.push_back(kron(pauli::y(), id));
      next.push_back(kron(pauli::z(), id));
    }
    gens = std::move(next);
  }
  return gens;
}

}  // namespace

std::vector<GaussianMatrix> odd_chain(int k) {
  if (k < 3 || k % 2 == 0) throw InputError("odd_chain: k must be odd and >= 3");
  return chain(k, FactorOrder::ChainInner);
}

int half_block_dimension(int d) {
  if (d < 1) throw InputError("half_block_dimension: d must be >= 1");
  return 1 << ((d - 1) / 2);
}

CliffordRep build_rep(int d) {
  if (d < 1) throw InputError("build_rep: d must be >= 1");
  if (d > 11) throw InputError("build_rep: d must be <= 11");

  // d even: the (d+1)-chain already ends in the diagonal generator.
  // d odd: take the (d+2)-chain and drop the sigma_y-structured generator.
  const int k = d % 2 == 0 ? d + 1 : d + 2;
  std::vector<GaussianMatrix> gens = chain(k, FactorOrder::ChainOuter);
  GaussianMatrix diagonal = gens.back();
  gens.pop_back();
  if (d % 2 == 1) gens.pop_back();

  CliffordRep rep;
  rep.d = d;
  rep.m = diagonal.size() / 2;
  rep.gammas = std::move(gens);
  rep.diag_plus = GaussianMatrix(diagonal.size());
  rep.diag_minus = GaussianMatrix(diagonal.size());
  for (int i = 0; i < diagonal.size(); ++i) {
    if (diagonal(i, i).re > 0)
      rep.diag_plus(i, i) = diagonal(i, i);
    else
      rep.diag_minus(i, i) = diagonal(i, i);
  }
  return rep;
}

std::string RelationViolation::describe() const {
  std::ostringstream os;
  os << relation;
  if (i >= 0) os << " (Gamma_" << i + 1;
  if (k >= 0) os << ", Gamma_" << k + 1;
  if (i >= 0) os << ")";
  return os.str();
}

std::vector<RelationViolation> verify_rep(const CliffordRep& rep) {
  std::vector<RelationViolation> out;
  const int size = rep.size();
  auto shaped = [size](const GaussianMatrix& g) { return g.size() == size; };

  if (static_cast<int>(rep.gammas.size()) != rep.d || !shaped(rep.diag_plus) || !shaped(rep.diag_minus)) {
    out.push_back({"shape", -1, -1});
    return out;
  }
  for (int i = 0; i < rep.d; ++i) {
    if (!shaped(rep.gammas[i])) {
      out.push_back({"shape", i, -1});
      return out;
    }
  }

  GaussianMatrix plus(size);
  GaussianMatrix minus(size);
  for (int i = 0; i < size; ++i) (i < rep.m ? plus(i, i) : minus(i, i)) = {i < rep.m ? 1 : -1, 0};
  if (!(rep.diag_plus == plus) || !(rep.diag_minus == minus)) out.push_back({"split-structure", -1, -1});

  const GaussianMatrix id = GaussianMatrix::identity(size);
  const GaussianMatrix diagonal = rep.diag_plus + rep.diag_minus;
  for (int i = 0; i < rep.d; ++i) {
    const auto& g = rep.gammas[i];
    if (!(g.adjoint() == g)) out.push_back({"hermitian", i, -1});
    if (!(g * g == id)) out.push_back({"involution", i, -1});
    for (int k = i + 1; k < rep.d; ++k) {
      const auto& h = rep.gammas[k];
      if (!(g * h + h * g).is_zero()) out.push_back({"anticommute", i, k});
    }
    if (!(g * diagonal + diagonal * g).is_zero()) out.push_back({"diagonal-split", i, -1});
  }
  return out;
}

}  // namespace pseudospec
