#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trias/endo.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

struct LeibnizCounterexample {
  Product product;
  std::size_t i = 0, j = 0;  // 1-based
  std::vector<Rational> lhs, rhs;
};

struct LeibnizCheck {
  bool ok = false;
  std::optional<LeibnizCounterexample> counterexample;
};

/// d(x • y) = d(x) • y + x • d(y) on every basis pair, all three products.
inline LeibnizCheck is_derivation(const Trialgebra& t, const EndoMatrix& d) {
  if (d.dim() != t.dim) throw DimensionError("derivation dimension mismatch");
  const std::size_t n = t.dim;
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  for (Product p : kAllProducts) {
    const StructureTensor& c = t.tensor(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> lhs = d.apply(c.basis_product(i, j));
        std::vector<Rational> rhs = c.apply(d.column(i), basis[j]);
        std::vector<Rational> second = c.apply(basis[i], d.column(j));
        for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
        if (lhs != rhs)
          return {false, LeibnizCounterexample{p, i + 1, j + 1, std::move(lhs), std::move(rhs)}};
      }
  }
  return {true, std::nullopt};
}

/// The Leibniz conditions as a linear system over the flattened endomorphism:
/// one row per (product, i, j, q) with
///   sum_k [ c_ij^k d_{qk} - d_{ki} c_kj^q - d_{kj} c_ik^q ] = 0.
struct DerivationSystem {
  std::size_t algebra_dim = 0;
  RatMatrix matrix;  // 3n³ rows, n² columns, unknowns flattened column-major
};

inline DerivationSystem build_derivation_system(const Trialgebra& t) {
  const std::size_t n = t.dim;
  RatMatrix system(3 * n * n * n, n * n);
  std::size_t row = 0;
  for (Product p : kAllProducts) {
    const StructureTensor& c = t.tensor(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q, ++row) {
          for (std::size_t k = 0; k < n; ++k) {
            system(row, k * n + q) += c.at(i, j, k);  // d_{qk}
            system(row, i * n + k) -= c.at(k, j, q);  // d_{ki}
            system(row, j * n + k) -= c.at(i, k, q);  // d_{kj}
          }
        }
  }
  return {n, std::move(system)};
}

/// Canonical basis of Der(T).
inline EndoSubspace derivation_basis(const Trialgebra& t) {
  return {t.dim, nullspace(build_derivation_system(t).matrix)};
}

/// Central derivations by definition: endomorphisms with image inside the
/// two-sided annihilator Z(T) that vanish on the product span T². One stacked
/// linear system; equals Γ(T) ∩ Der(T) for axiom-passing algebras.
inline EndoSubspace central_derivations_definitional(const Trialgebra& t) {
  const std::size_t n = t.dim;
  const RatMatrix z_constraints = centralizer(t).constraints();
  const Subspace square = product_span(t);

  RatMatrix system(z_constraints.rows() * n + square.dim() * n, n * n);
  std::size_t row = 0;
  // image(ψ) ⊆ Z: every column of ψ satisfies every Z constraint.
  for (std::size_t w = 0; w < z_constraints.rows(); ++w)
    for (std::size_t col = 0; col < n; ++col, ++row)
      for (std::size_t r = 0; r < n; ++r) system(row, col * n + r) = z_constraints(w, r);
  // ψ(T²) = 0: ψ kills every basis vector of the product span.
  for (std::size_t b = 0; b < square.dim(); ++b) {
    const std::vector<Rational> p = square.basis_vector(b);
    for (std::size_t r = 0; r < n; ++r, ++row)
      for (std::size_t c = 0; c < n; ++c) system(row, c * n + r) = p[c];
  }
  return {n, nullspace(system)};
}

}  // namespace trias
