#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trias/derivations.hpp"
#include "trias/endo.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

struct CentroidCounterexample {
  Product product;
  std::size_t i = 0, j = 0;  // 1-based
  bool left_condition_failed = false;  // ψ(x•y) = ψ(x)•y; otherwise ψ(x•y) = x•ψ(y)
  std::vector<Rational> lhs, rhs;
};

struct CentroidCheck {
  bool ok = false;
  std::optional<CentroidCounterexample> counterexample;
};

/// ψ(x • y) = ψ(x) • y = x • ψ(y) on every basis pair, all three products.
inline CentroidCheck is_centroid_element(const Trialgebra& t, const EndoMatrix& psi) {
  if (psi.dim() != t.dim) throw DimensionError("centroid element dimension mismatch");
  const std::size_t n = t.dim;
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  for (Product p : kAllProducts) {
    const StructureTensor& c = t.tensor(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> mid = psi.apply(c.basis_product(i, j));
        std::vector<Rational> left = c.apply(psi.column(i), basis[j]);
        if (mid != left)
          return {false, CentroidCounterexample{p, i + 1, j + 1, true, std::move(mid), std::move(left)}};
        std::vector<Rational> right = c.apply(basis[i], psi.column(j));
        if (mid != right)
          return {false,
                  CentroidCounterexample{p, i + 1, j + 1, false, std::move(mid), std::move(right)}};
      }
  }
  return {true, std::nullopt};
}

/// The two centroid condition families as a linear system over the flattened
/// endomorphism. For each product tensor c and triple (i, j, p):
///   sum_k [ c_ij^k C_{pk} - C_{ki} c_kj^p ] = 0   (ψ(x•y) = ψ(x)•y)
///   sum_k [ c_ij^k C_{pk} - C_{kj} c_ik^p ] = 0   (ψ(x•y) = x•ψ(y))
struct CentroidSystem {
  std::size_t algebra_dim = 0;
  RatMatrix matrix;  // 6n³ rows for all products; unknown ordering as derivations
};

namespace detail {

inline void append_centroid_rows(const StructureTensor& c, RatMatrix& system, std::size_t& row) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t k = 0; k < n; ++k) {
          system(row, k * n + p) += c.at(i, j, k);  // C_{pk}
          system(row, i * n + k) -= c.at(k, j, p);  // C_{ki}
        }
        ++row;
        for (std::size_t k = 0; k < n; ++k) {
          system(row, k * n + p) += c.at(i, j, k);  // C_{pk}
          system(row, j * n + k) -= c.at(i, k, p);  // C_{kj}
        }
        ++row;
      }
}

}  // namespace detail

inline CentroidSystem build_centroid_system(const Trialgebra& t) {
  const std::size_t n = t.dim;
  RatMatrix system(6 * n * n * n, n * n);
  std::size_t row = 0;
  for (Product p : kAllProducts) detail::append_centroid_rows(t.tensor(p), system, row);
  return {n, std::move(system)};
}

/// Γ(T) = Γ^⊣ ∩ Γ^⊢ ∩ Γ^⊥, the full two-sided centroid.
inline EndoSubspace centroid_basis(const Trialgebra& t) {
  return {t.dim, nullspace(build_centroid_system(t).matrix)};
}

/// Centroid of a single product (Γ^⊣, Γ^⊢ or Γ^⊥).
inline EndoSubspace product_centroid_basis(const Trialgebra& t, Product p) {
  const std::size_t n = t.dim;
  RatMatrix system(2 * n * n * n, n * n);
  std::size_t row = 0;
  detail::append_centroid_rows(t.tensor(p), system, row);
  return {n, nullspace(system)};
}

// ---------------------------------------------------------------------------
// Structural checks on Γ and Der

struct PairFailure {
  std::size_t first_index = 0, second_index = 0;  // 0-based indices into the bases
};

/// φ ∘ d must be a derivation for every φ in Γ and d in Der.
struct GammaDerReport {
  std::size_t pairs_checked = 0;
  std::vector<PairFailure> failures;
  bool ok() const { return failures.empty(); }
};

inline GammaDerReport gamma_der_product_check(const Trialgebra& t) {
  GammaDerReport report;
  const EndoSubspace der = derivation_basis(t);
  const std::vector<EndoMatrix> gamma = centroid_basis(t).basis();
  const std::vector<EndoMatrix> ders = der.basis();
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = 0; b < ders.size(); ++b) {
      ++report.pairs_checked;
      if (!der.contains(gamma[a] * ders[b])) report.failures.push_back({a, b});
    }
  return report;
}

/// [Γ, Γ] must annihilate T², and [Γ, Der] must land back in Γ.
struct GammaCommutatorReport {
  std::size_t gamma_pairs_checked = 0;
  std::size_t mixed_pairs_checked = 0;
  std::vector<PairFailure> square_annihilation_failures;  // (φ_a, φ_b)
  std::vector<PairFailure> mixed_membership_failures;     // (φ_a, d_b)
  bool ok() const {
    return square_annihilation_failures.empty() && mixed_membership_failures.empty();
  }
};

inline GammaCommutatorReport gamma_commutator_check(const Trialgebra& t) {
  GammaCommutatorReport report;
  const EndoSubspace gamma_space = centroid_basis(t);
  const std::vector<EndoMatrix> gamma = gamma_space.basis();
  const std::vector<EndoMatrix> ders = derivation_basis(t).basis();
  const Subspace square = product_span(t);

  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = a + 1; b < gamma.size(); ++b) {
      ++report.gamma_pairs_checked;
      const EndoMatrix comm = commutator(gamma[a], gamma[b]);
      for (std::size_t s = 0; s < square.dim(); ++s)
        if (!is_zero_vector(comm.apply(square.basis_vector(s)))) {
          report.square_annihilation_failures.push_back({a, b});
          break;
        }
    }
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = 0; b < ders.size(); ++b) {
      ++report.mixed_pairs_checked;
      if (!gamma_space.contains(commutator(gamma[a], ders[b])))
        report.mixed_membership_failures.push_back({a, b});
    }
  return report;
}

}  // namespace trias
