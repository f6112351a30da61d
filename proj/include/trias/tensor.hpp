#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "trias/errors.hpp"
#include "trias/rational.hpp"

namespace trias {

/// Structure constants of one bilinear product on an n-dimensional space:
/// at(i, j, k) is the coefficient of e_k in e_i • e_j (0-based internally;
/// files and reports use 1-based indices).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// e_i • e_j as a coordinate vector.
  std::vector<Rational> basis_product(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = at(i, j, k);
    return out;
  }

  /// Bilinear extension applied to arbitrary coordinate vectors.
  std::vector<Rational> apply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("vector length does not match tensor dimension");
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (at(i, j, k) != 0) out[k] += xy * at(i, j, k);
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const Rational& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const StructureTensor&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Failed ternary identity on a basis triple; indices are 1-based as in reports.
struct TripleWitness {
  std::size_t i = 0, j = 0, k = 0;
  std::vector<Rational> lhs, rhs;
};

/// First basis triple with (e_i • e_j) • e_k != e_i • (e_j • e_k), if any.
inline std::optional<TripleWitness> find_associativity_failure(const StructureTensor& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> ek(n);
        ek[k] = 1;
        std::vector<Rational> ei(n);
        ei[i] = 1;
        std::vector<Rational> lhs = t.apply(t.basis_product(i, j), ek);
        std::vector<Rational> rhs = t.apply(ei, t.basis_product(j, k));
        if (lhs != rhs) return TripleWitness{i + 1, j + 1, k + 1, std::move(lhs), std::move(rhs)};
      }
  return std::nullopt;
}

/// First triple violating left-symmetry of the associator:
/// (x,y,z) = (x•y)•z - x•(y•z) must equal (y,x,z) on all basis triples.
inline std::optional<TripleWitness> find_left_symmetry_failure(const StructureTensor& t) {
  const std::size_t n = t.dim();
  auto associator = [&](std::size_t a, std::size_t b, std::size_t c) {
    std::vector<Rational> ea(n), ec(n);
    ea[a] = 1;
    ec[c] = 1;
    std::vector<Rational> lhs = t.apply(t.basis_product(a, b), ec);
    std::vector<Rational> rhs = t.apply(ea, t.basis_product(b, c));
    for (std::size_t m = 0; m < n; ++m) lhs[m] -= rhs[m];
    return lhs;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> left = associator(i, j, k);
        std::vector<Rational> right = associator(j, i, k);
        if (left != right) return TripleWitness{i + 1, j + 1, k + 1, std::move(left), std::move(right)};
      }
  return std::nullopt;
}

}  // namespace trias
