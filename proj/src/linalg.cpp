#include "polarcut/linalg.hpp"

#include "polarcut/error.hpp"

#include <utility>

namespace polarcut {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

Vector Matrix::left_multiply(std::span<const Rational> y) const {
  if (y.size() != rows_) throw Error(Errc::DimensionMismatch, "vector-matrix product");
  Vector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * (*this)(r, c);
  }
  return out;
}

void Matrix::scale_row(std::size_t r, const Rational& factor) {
  for (auto& v : row(r)) v *= factor;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector difference");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(std::span<const Rational> a, const Rational& factor) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * factor;
  return out;
}

bool is_zero(std::span<const Rational> a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

namespace {

// In-place reduced row echelon form; returns pivot columns (considering only
// the first `limit` columns as pivot candidates).
std::vector<std::size_t> rref(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < limit && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    m.scale_row(lead_row, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m, m.cols()).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r, r.cols());
  std::vector<bool> is_pivot(r.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < r.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zeros(r.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_unique(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::DimensionMismatch, "linear system rhs");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto pivots = rref(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, m.cols()) != 0) return std::nullopt;
  if (pivots.size() != m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

int affine_rank(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(Errc::DimensionMismatch, "affine_rank: points differ in length");
  if (points.size() == 1) return 0;
  Matrix diffs(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
  return static_cast<int>(rank(std::move(diffs)));
}

}  // namespace polarcut
