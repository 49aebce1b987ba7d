#pragma once

#include "polarcut/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polarcut {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from a list of rows; all rows must have equal length
  /// (Error{DimensionMismatch} otherwise). `cols` fixes the width when the
  /// list is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector operator*(std::span<const Rational> x) const;
  /// Returns y^T M.
  Vector left_multiply(std::span<const Rational> y) const;

  /// Multiplies row r by a scalar.
  void scale_row(std::size_t r, const Rational& factor);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scaled(std::span<const Rational> a, const Rational& factor);
bool is_zero(std::span<const Rational> a);
Vector zeros(std::size_t n);

/// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}. One vector per free column of the reduced row
/// echelon form, in increasing column order; each has a 1 in its free column.
std::vector<Vector> nullspace(const Matrix& m);

/// The unique solution of M x = rhs, or nullopt when the system is
/// inconsistent or underdetermined.
std::optional<Vector> solve_unique(const Matrix& m, std::span<const Rational> rhs);

/// Dimension of the affine hull: -1 for no points, 0 for one point.
/// Error{DimensionMismatch} when points differ in length.
int affine_rank(const std::vector<Vector>& points);

}  // namespace polarcut
