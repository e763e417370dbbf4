#pragma once

// Clifford representations for the non-Hermitian spectral localizer.
//
// Generators are stored with Gaussian-integer entries so the algebraic
// relations can be checked exactly. For a localizer with d Hermitian
// operators, build_rep(d) returns d Hermitian involutions Gamma_i of size 2m,
// m = 2^floor((d-1)/2), that pairwise anticommute and also anticommute with
// the diagonal element diag(I_m, -I_m) = diag_plus + diag_minus.
//
// The odd-count chains follow the recursion
//     gamma_i ⊗ sigma_x,  I ⊗ sigma_y,  I ⊗ sigma_z
// (odd_chain). The localizer representation uses the same chain with the two
// tensor factors swapped, so that the distinguished diagonal generator is
// sigma_z ⊗ I_m = diag(I_m, -I_m) in block form. Swapping factors is a
// permutation similarity and does not change any spectrum.

#include <string>
#include <vector>

#include "pseudospec/common.hpp"

namespace pseudospec {

struct GaussianInt {
  int re = 0;
  int im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// Dense square matrix over the Gaussian integers, row-major.
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}

  static GaussianMatrix identity(int size);
  static GaussianMatrix zero(int size) { return GaussianMatrix(size); }

  int size() const { return size_; }
  GaussianInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * size_ + c]; }
  const GaussianInt& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * size_ + c];
  }

  GaussianMatrix adjoint() const;
  bool is_zero() const;
  ComplexMatrix to_complex() const;

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;
  friend GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);

 private:
  int size_ = 0;
  std::vector<GaussianInt> data_;
};

/// Kronecker product; `outer` supplies the coarse block index.
GaussianMatrix kron(const GaussianMatrix& outer, const GaussianMatrix& inner);

namespace pauli {
GaussianMatrix identity();
GaussianMatrix x();
GaussianMatrix y();
GaussianMatrix z();
}  // namespace pauli

struct CliffordRep {
  int d = 0;  // number of generators
  int m = 0;  // half-block dimension; every matrix is 2m x 2m
  std::vector<GaussianMatrix> gammas;
  GaussianMatrix diag_plus;   // diag(I_m, 0_m)
  GaussianMatrix diag_minus;  // diag(0_m, -I_m)

  int size() const { return 2 * m; }
};

/// Anticommuting Hermitian involutions {gamma_1..gamma_k} for odd k >= 3,
/// built with the recursion in the header comment (k=3 is the Pauli triple).
std::vector<GaussianMatrix> odd_chain(int k);

/// Half-block dimension for a localizer with d Hermitian generators.
int half_block_dimension(int d);

/// Localizer representation for 1 <= d <= 11 Hermitian generators.
CliffordRep build_rep(int d);

struct RelationViolation {
  // "hermitian", "involution", "anticommute", "diagonal-split",
  // "split-structure", "shape"
  std::string relation;
  int i = -1;
  int k = -1;
  std::string describe() const;
};

/// Exact check of every relation a localizer representation must satisfy.
/// Violations are returned as data; an empty list means the rep is valid.
std::vector<RelationViolation> verify_rep(const CliffordRep& rep);

}  // namespace pseudospec
