#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trias/errors.hpp"
#include "trias/rational.hpp"

namespace trias {

/// Dense rational matrix, row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  std::vector<Rational> column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_row(std::size_t r, const std::vector<Rational>& values) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
  }

  bool is_zero() const {
    for (const Rational& v : data_)
      if (v != 0) return false;
    return true;
  }

  RatMatrix transposed() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

inline std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0 && x[c] != 0) out[r] += a(r, c) * x[c];
  return out;
}

inline RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionError("vstack column mismatch");
  RatMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

inline bool is_zero_vector(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

struct RrefResult {
  RatMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row echelon form: pivots equal 1, zeros above and below,
/// pivot columns strictly increasing. Exact Gauss-Jordan, no pivot heuristics.
inline RrefResult rref(RatMatrix m) {
  RrefResult result;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(sel, c), m(pivot_row, c));
    const Rational inv = Rational(1) / m(pivot_row, col);
    if (inv != 1)
      for (std::size_t c = col; c < cols; ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = result.pivot_columns.size();
  result.matrix = std::move(m);
  return result;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Exact inverse; empty when singular.
inline std::optional<RatMatrix> inverted(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(std::move(aug));
  // Invertible iff every pivot lands in the left block.
  if (red.rank < n || red.pivot_columns[n - 1] >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

/// True iff a·x = b has a solution (rank test on the augmented matrix).
inline bool is_consistent(const RatMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) throw DimensionError("system right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  return rref(std::move(aug)).rank == rank(a);
}

}  // namespace trias
