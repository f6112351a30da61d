#pragma once

#include <cstddef>
#include <vector>

#include "trias/errors.hpp"
#include "trias/matrix.hpp"

namespace trias {

/// Linear subspace of Q^n held as its canonical basis: the RREF of any
/// spanning set, zero rows dropped. Two equal subspaces are structurally
/// equal, which makes subspace values usable in golden-file tests.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) { return from_rows(RatMatrix::identity(ambient)); }

  /// Canonical subspace spanned by the rows of `rows`.
  static Subspace from_rows(const RatMatrix& rows) {
    RrefResult red = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = RatMatrix(red.rank, rows.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
      for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(r, c) = red.matrix(r, c);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
    RatMatrix rows(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (vectors[r].size() != ambient) throw DimensionError("spanning vector length mismatch");
      rows.set_row(r, vectors[r]);
    }
    return from_rows(rows);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Exact membership: reduce v by the pivots of the canonical basis and
  /// check the residual vanishes.
  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
    std::vector<Rational> residual = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      std::size_t pivot = 0;
      while (pivot < ambient_ && basis_(r, pivot) == 0) ++pivot;
      if (pivot == ambient_ || residual[pivot] == 0) continue;
      const Rational factor = residual[pivot];
      for (std::size_t c = pivot; c < ambient_; ++c) residual[c] -= factor * basis_(r, c);
    }
    return is_zero_vector(residual);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  /// Constraint matrix C with {x : C·x = 0} equal to this subspace.
  RatMatrix constraints() const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
};

/// Canonical basis of {x : m·x = 0}. Free columns of the RREF parameterize
/// the kernel; the resulting spanning set is re-canonicalized.
inline Subspace nullspace(const RatMatrix& m) {
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivot_columns) is_pivot[p] = true;

  std::vector<std::vector<Rational>> generators;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(n);
    v[free_col] = 1;
    for (std::size_t r = 0; r < red.pivot_columns.size(); ++r)
      v[red.pivot_columns[r]] = -red.matrix(r, free_col);
    generators.push_back(std::move(v));
  }
  return Subspace::span(n, generators);
}

inline RatMatrix Subspace::constraints() const {
  // Rows of the kernel basis of the basis matrix: over Q the double
  // annihilator of a row space is the row space itself.
  return nullspace(basis_).basis();
}

/// a ∩ b via the kernel of the stacked constraint systems of both spaces.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return nullspace(vstack(a.constraints(), b.constraints()));
}

}  // namespace trias
