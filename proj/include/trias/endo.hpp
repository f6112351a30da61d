#pragma once

#include <cstddef>
#include <vector>

#include "trias/matrix.hpp"
#include "trias/subspace.hpp"

namespace trias {

/// Linear endomorphism of the algebra in the column convention: entry (r, c)
/// is the coefficient of e_r in the image of e_c, so applying the map is a
/// plain matrix-vector product. Flattening is column-major, the unknown
/// ordering shared by the derivation and centroid systems.
class EndoMatrix {
 public:
  EndoMatrix() = default;
  explicit EndoMatrix(std::size_t dim) : m_(dim, dim) {}
  explicit EndoMatrix(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("endomorphism matrix must be square");
  }

  static EndoMatrix identity(std::size_t dim) { return EndoMatrix(RatMatrix::identity(dim)); }

  static EndoMatrix diagonal(const std::vector<Rational>& entries) {
    EndoMatrix d(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) d.at(i, i) = entries[i];
    return d;
  }

  static EndoMatrix from_flat(std::size_t dim, const std::vector<Rational>& flat) {
    if (flat.size() != dim * dim) throw DimensionError("flattened endomorphism length mismatch");
    EndoMatrix out(dim);
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r) out.at(r, c) = flat[c * dim + r];
    return out;
  }

  std::size_t dim() const { return m_.rows(); }
  Rational& at(std::size_t r, std::size_t c) { return m_(r, c); }
  const Rational& at(std::size_t r, std::size_t c) const { return m_(r, c); }
  const RatMatrix& matrix() const { return m_; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const { return m_ * v; }
  std::vector<Rational> column(std::size_t c) const { return m_.column(c); }

  std::vector<Rational> flatten() const {
    std::vector<Rational> flat(dim() * dim());
    for (std::size_t c = 0; c < dim(); ++c)
      for (std::size_t r = 0; r < dim(); ++r) flat[c * dim() + r] = m_(r, c);
    return flat;
  }

  bool operator==(const EndoMatrix&) const = default;

 private:
  RatMatrix m_;
};

inline EndoMatrix operator*(const EndoMatrix& outer, const EndoMatrix& inner) {
  return EndoMatrix(outer.matrix() * inner.matrix());
}

inline EndoMatrix operator+(const EndoMatrix& a, const EndoMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("endomorphism dimension mismatch");
  EndoMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

inline EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("endomorphism dimension mismatch");
  EndoMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
  return out;
}

inline EndoMatrix operator*(const Rational& scalar, const EndoMatrix& m) {
  EndoMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out.at(r, c) = scalar * m.at(r, c);
  return out;
}

inline EndoMatrix commutator(const EndoMatrix& a, const EndoMatrix& b) { return a * b - b * a; }

/// A subspace of endomorphisms, canonical under the column-major flattening.
class EndoSubspace {
 public:
  EndoSubspace() = default;
  EndoSubspace(std::size_t algebra_dim, Subspace space)
      : algebra_dim_(algebra_dim), space_(std::move(space)) {
    if (space_.ambient_dim() != algebra_dim_ * algebra_dim_)
      throw DimensionError("endomorphism subspace must live in dim² coordinates");
  }

  static EndoSubspace all(std::size_t algebra_dim) {
    return {algebra_dim, Subspace::full(algebra_dim * algebra_dim)};
  }
  static EndoSubspace zero(std::size_t algebra_dim) {
    return {algebra_dim, Subspace::zero(algebra_dim * algebra_dim)};
  }
  static EndoSubspace span_of(const std::vector<EndoMatrix>& mats, std::size_t algebra_dim) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(mats.size());
    for (const EndoMatrix& m : mats) rows.push_back(m.flatten());
    return {algebra_dim, Subspace::span(algebra_dim * algebra_dim, rows)};
  }

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }

  std::vector<EndoMatrix> basis() const {
    std::vector<EndoMatrix> out;
    out.reserve(space_.dim());
    for (std::size_t i = 0; i < space_.dim(); ++i)
      out.push_back(EndoMatrix::from_flat(algebra_dim_, space_.basis_vector(i)));
    return out;
  }

  bool contains(const EndoMatrix& m) const {
    if (m.dim() != algebra_dim_) throw DimensionError("endomorphism dimension mismatch");
    return space_.contains(m.flatten());
  }

  bool operator==(const EndoSubspace&) const = default;

 private:
  std::size_t algebra_dim_ = 0;
  Subspace space_;
};

}  // namespace trias
