#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cwl/rational.hpp"

namespace cwl {

/// Dense square matrix of Rationals, row-major, 0-based element access.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  RatMatrix transposed() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Symmetric matrix of Rationals. Symmetry is maintained by every mutator;
/// the 0x0 matrix is a valid value.
class SymRatMatrix {
 public:
  SymRatMatrix() = default;
  explicit SymRatMatrix(std::size_t n) : m_(n) {}
  /// Throws DomainError when the rows are not square and symmetric.
  SymRatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static SymRatMatrix from_matrix(const RatMatrix& m);

  std::size_t size() const { return m_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Writes entry (i, j) and its mirror (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v);

  /// Principal submatrix on the given (sorted, distinct) indices.
  SymRatMatrix principal(const std::vector<std::size_t>& indices) const;

  const RatMatrix& matrix() const { return m_; }

  friend bool operator==(const SymRatMatrix&, const SymRatMatrix&) = default;

 private:
  RatMatrix m_;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact determinant via fraction-free Bareiss elimination after clearing
/// row denominators. det of the 0x0 matrix is 1.
Rational det_exact(const RatMatrix& m);
Rational det_exact(const SymRatMatrix& m);

/// Sylvester inertia by symmetric congruence diagonalization. A zero diagonal
/// with a nonzero row is eliminated as a 2x2 hyperbolic block (one positive,
/// one negative).
Inertia inertia(const SymRatMatrix& m);

/// (-1)^{n_minus}; +1 for the 0x0 matrix.
int matrix_sign(const SymRatMatrix& m);

/// n_plus - n_minus.
int signature(const SymRatMatrix& m);

}  // namespace cwl
