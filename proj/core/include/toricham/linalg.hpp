#pragma once

#include "toricham/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace toricham {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> column(std::size_t j) const;

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transposed() const {
  Matrix<T> t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix to_rational(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Integer> x);
RatVector multiply(const IntMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Exact determinant by rational Gaussian elimination.
/// Throws Error(NotSquare).
Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Unique solution of a square nonsingular system, or nullopt when singular.
std::optional<RatVector> solve_square(const RatMatrix& a, std::span<const Rational> b);

/// Some s with w * s = tau. Free variables are set to zero.
/// Throws Error(NoSolution) when tau is outside the column space of w and
/// Error(DimensionMismatch) when tau.size() != w.rows().
RatVector solve_rational(const IntMatrix& w, std::span<const Rational> tau);

/// Row-style Hermite normal form: row operations only, pivots positive,
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped,
/// so the result is a basis of the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// m x n matrix whose columns form a basis of the saturated lattice
/// ker(w) ∩ Z^m, n = m - rank(w). The basis is returned in Hermite normal
/// form (of its transpose), but callers must not rely on the choice.
IntMatrix integer_kernel(const IntMatrix& w);

struct PrimitiveVector {
  IntVector vector;
  Integer scale;  // gcd of |entries|, always > 0
};

/// Divides out the content of v. Throws Error(ZeroVector) for v == 0.
PrimitiveVector primitive(std::span<const Integer> v);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const RatVector> points);

/// True when u is unimodular (integer, square, det = ±1).
bool is_unimodular(const IntMatrix& u);

}  // namespace toricham
