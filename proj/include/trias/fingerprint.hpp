#pragma once

#include <array>
#include <cstddef>

#include "trias/centroids.hpp"
#include "trias/derivations.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

/// Basis-change-invariant summary of a trialgebra, used as non-isomorphism
/// evidence. Unitality flags are indexed by product in (left, right, middle)
/// order.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_der = 0;
  std::size_t dim_centroid = 0;
  std::size_t dim_square = 0;
  std::size_t dim_centralizer = 0;
  std::array<bool, 3> left_unital{false, false, false};
  std::array<bool, 3> right_unital{false, false, false};

  bool operator==(const Fingerprint&) const = default;
};

namespace detail {

// Existence of u with u • e_j = e_j for all j is a linear system in u.
inline bool has_left_unit(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RatMatrix a(n * n, n);
  std::vector<Rational> b(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) a(j * n + k, i) = c.at(i, j, k);
      b[j * n + k] = (j == k) ? 1 : 0;
    }
  return is_consistent(a, b);
}

inline bool has_right_unit(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RatMatrix a(n * n, n);
  std::vector<Rational> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) a(i * n + k, j) = c.at(i, j, k);
      b[i * n + k] = (i == k) ? 1 : 0;
    }
  return is_consistent(a, b);
}

}  // namespace detail

inline Fingerprint fingerprint(const Trialgebra& t) {
  Fingerprint fp;
  fp.dim = t.dim;
  fp.dim_der = derivation_basis(t).dim();
  fp.dim_centroid = centroid_basis(t).dim();
  fp.dim_square = product_span(t).dim();
  fp.dim_centralizer = centralizer(t).dim();
  for (std::size_t p = 0; p < kAllProducts.size(); ++p) {
    fp.left_unital[p] = detail::has_left_unit(t.tensor(kAllProducts[p]));
    fp.right_unital[p] = detail::has_right_unit(t.tensor(kAllProducts[p]));
  }
  return fp;
}

}  // namespace trias
