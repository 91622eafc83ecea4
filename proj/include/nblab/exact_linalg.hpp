#pragma once

#include <nblab/rational.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace nblab {

/// Dense square matrix over Q(i) that is Hermitian: entry(j,i) = conj(entry(i,j)).
/// Only the constructor from a full entry list checks the property; `set`
/// keeps it by writing both mirrored entries.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n);
  HermitianMatrix(std::size_t n, std::vector<GaussianRational> row_major);

  static HermitianMatrix identity(std::size_t n);

  std::size_t dimension() const { return n_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const GaussianRational& value);

  std::vector<GaussianRational> operator*(std::span<const GaussianRational> x) const;
  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
};

/// Matrix product; the result is returned row-major since a product of
/// Hermitian matrices is not Hermitian in general.
std::vector<GaussianRational> multiply(const HermitianMatrix& a, const HermitianMatrix& b);

/// Exact solution of G x = b by fraction-free elimination over the Gaussian
/// integers (the system is scaled by the common denominator first).
/// Diagonal (symmetric) pivots are preferred; a row pivot is used only when
/// every remaining diagonal entry vanishes.
std::vector<GaussianRational> solve_hermitian(const HermitianMatrix& g,
                                              std::span<const GaussianRational> b);

/// Exact b* G^{-1} b for positive definite G. Positive definiteness is read
/// off the signs of the unpivoted fraction-free pivots, which are scaled
/// leading principal minors.
Rational projection_norm_sq(const HermitianMatrix& g, std::span<const GaussianRational> b);

/// The Cauchy block (1/(i+j+1)), 0 <= i,j < m.
HermitianMatrix hilbert_matrix(std::size_t m);

/// Exact inverse of hilbert_matrix(m) from the closed binomial formula
/// (-1)^{i+j} (i+j+1) C(m+i, m-j-1) C(m+j, m-i-1) C(i+j, i)^2.
HermitianMatrix hilbert_inverse(std::size_t m);

}  // namespace nblab
