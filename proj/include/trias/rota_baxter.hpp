#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trias/endo.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

struct RotaBaxterCounterexample {
  std::size_t i = 0, j = 0;  // 1-based basis pair
  std::vector<Rational> lhs, rhs;
};

struct RotaBaxterCheck {
  bool ok = false;
  std::optional<RotaBaxterCounterexample> counterexample;
};

/// Checks R(x)R(y) = R(R(x)y + xR(y) + λxy) on all basis pairs, where the
/// juxtaposition product is the induced associative star product
/// x∗y = x⊣y + x⊢y − x⊥y. Bilinearity makes basis pairs sufficient.
inline RotaBaxterCheck is_rota_baxter(const Trialgebra& t, const EndoMatrix& r, const Rational& weight) {
  if (r.dim() != t.dim) throw DimensionError("operator dimension mismatch");
  const std::size_t n = t.dim;
  const StructureTensor star = star_product(t);
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> lhs = star.apply(r.column(i), r.column(j));
      std::vector<Rational> inner = star.apply(r.column(i), basis[j]);
      std::vector<Rational> second = star.apply(basis[i], r.column(j));
      std::vector<Rational> third = star.apply(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k) inner[k] += second[k] + weight * third[k];
      std::vector<Rational> rhs = r.apply(inner);
      if (lhs != rhs)
        return {false, RotaBaxterCounterexample{i + 1, j + 1, std::move(lhs), std::move(rhs)}};
    }
  return {true, std::nullopt};
}

/// Weight-0 double product x ⋆ y = R(x) ∗ y − y ∗ R(x). Left-symmetric when
/// R is Rota-Baxter of weight 0 on an axiom-passing algebra.
inline StructureTensor induced_product_weight0(const Trialgebra& t, const EndoMatrix& r,
                                               const Rational& weight) {
  if (weight != 0) throw PreconditionError("induced weight-0 product requires weight 0");
  if (r.dim() != t.dim) throw DimensionError("operator dimension mismatch");
  const std::size_t n = t.dim;
  const StructureTensor star = star_product(t);
  StructureTensor out(n);
  std::vector<Rational> ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(ei.begin(), ei.end(), Rational(0));
      std::fill(ej.begin(), ej.end(), Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      std::vector<Rational> value = star.apply(r.column(i), ej);
      std::vector<Rational> back = star.apply(ej, r.column(i));
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = value[k] - back[k];
    }
  return out;
}

/// The two readings of the weight-(−1) double product. The source formula is
/// x ⋆ y = R(x) ∗ y − y ∗ R(x) − x ∗ y; the standard double-product
/// construction is x ⋆ y = R(x) ∗ y + x ∗ R(y) − x ∗ y.
enum class InducedFormula { paper, standard };

inline StructureTensor induced_product_weight_minus1(const Trialgebra& t, const EndoMatrix& r,
                                                     const Rational& weight,
                                                     InducedFormula formula = InducedFormula::paper) {
  if (weight != -1) throw PreconditionError("induced weight-(-1) product requires weight -1");
  if (r.dim() != t.dim) throw DimensionError("operator dimension mismatch");
  const std::size_t n = t.dim;
  const StructureTensor star = star_product(t);
  StructureTensor out(n);
  std::vector<Rational> ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(ei.begin(), ei.end(), Rational(0));
      std::fill(ej.begin(), ej.end(), Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      std::vector<Rational> first = star.apply(r.column(i), ej);
      std::vector<Rational> second = formula == InducedFormula::paper
                                         ? star.apply(ej, r.column(i))
                                         : star.apply(ei, r.column(j));
      std::vector<Rational> plain = star.apply(ei, ej);
      for (std::size_t k = 0; k < n; ++k) {
        if (formula == InducedFormula::paper)
          out.at(i, j, k) = first[k] - second[k] - plain[k];
        else
          out.at(i, j, k) = first[k] + second[k] - plain[k];
      }
    }
  return out;
}

struct GridSearchResult {
  std::vector<EndoMatrix> found;
  bool complete = true;
  std::size_t examined = 0;
};

/// Exhaustive search over matrices with entries drawn from entry_set, in
/// lexicographic order of the column-major flattening. Enumeration stops at
/// `limit` candidates examined; `complete` reports whether the space was
/// exhausted.
inline GridSearchResult grid_search_rota_baxter(const Trialgebra& t, const Rational& weight,
                                                const std::vector<Rational>& entry_set,
                                                std::size_t limit) {
  GridSearchResult result;
  const std::size_t slots = t.dim * t.dim;
  if (entry_set.empty() || slots == 0) return result;

  std::vector<std::size_t> digits(slots, 0);
  while (true) {
    if (result.examined == limit) {
      result.complete = false;
      return result;
    }
    ++result.examined;
    std::vector<Rational> flat(slots);
    for (std::size_t s = 0; s < slots; ++s) flat[s] = entry_set[digits[s]];
    EndoMatrix candidate = EndoMatrix::from_flat(t.dim, flat);
    if (is_rota_baxter(t, candidate, weight).ok) result.found.push_back(std::move(candidate));

    // Odometer step, least-significant digit last so the order is
    // lexicographic in the flattened tuple.
    std::size_t pos = slots;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < entry_set.size()) break;
      digits[pos] = 0;
      if (pos == 0) return result;
    }
  }
}

}  // namespace trias
