#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trias/matrix.hpp"
#include "trias/subspace.hpp"
#include "trias/tensor.hpp"

namespace trias {

/// The three products of a trialgebra: left (⊣), right (⊢), middle (⊥).
enum class Product { left, right, middle };

inline constexpr std::array<Product, 3> kAllProducts{Product::left, Product::right, Product::middle};

inline std::string_view product_name(Product p) {
  switch (p) {
    case Product::left: return "left";
    case Product::right: return "right";
    case Product::middle: return "middle";
  }
  return "?";
}

inline std::optional<Product> product_from_name(std::string_view name) {
  if (name == "left") return Product::left;
  if (name == "right") return Product::right;
  if (name == "middle") return Product::middle;
  return std::nullopt;
}

/// A finite-dimensional algebra with three bilinear products, given by
/// structure constants. The value is immutable after construction as far as
/// the operations below are concerned; all of them are pure.
struct Trialgebra {
  std::size_t dim = 0;
  StructureTensor left, right, middle;
  std::string name;
  std::map<std::string, Rational> params;

  Trialgebra() = default;
  explicit Trialgebra(std::size_t n) : dim(n), left(n), right(n), middle(n) {}

  const StructureTensor& tensor(Product p) const {
    switch (p) {
      case Product::left: return left;
      case Product::right: return right;
      default: return middle;
    }
  }
  StructureTensor& tensor(Product p) {
    switch (p) {
      case Product::left: return left;
      case Product::right: return right;
      default: return middle;
    }
  }
};

inline Trialgebra make_zero_algebra(std::size_t dim, std::string name = "zero") {
  Trialgebra t(dim);
  t.name = std::move(name);
  return t;
}

/// Trialgebra with all three products equal to one associative product.
inline Trialgebra make_diagonal(const StructureTensor& product, std::string name = "diagonal") {
  Trialgebra t(product.dim());
  t.left = product;
  t.right = product;
  t.middle = product;
  t.name = std::move(name);
  return t;
}

inline std::vector<Rational> multiply(const Trialgebra& t, Product p, const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) {
  return t.tensor(p).apply(x, y);
}

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomViolation {
  std::string axiom;                  // "D1".."D5" or "T1".."T11"
  std::array<std::size_t, 3> triple;  // 1-based basis indices (i, j, k)
  std::vector<Rational> lhs, rhs;
};

struct AxiomReport {
  std::vector<std::string> checked;
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }

  /// Distinct violated axiom ids, in checked order, with the first witness each.
  std::vector<AxiomViolation> first_witness_per_axiom() const {
    std::vector<AxiomViolation> out;
    for (const AxiomViolation& v : violations) {
      bool seen = false;
      for (const AxiomViolation& w : out) seen = seen || w.axiom == v.axiom;
      if (!seen) out.push_back(v);
    }
    return out;
  }
};

namespace detail {

// One identity (x A y) B z = x C (y D z).
struct AxiomShape {
  Product a, b, c, d;
};

// Eqs. of the trialgebra definition; the first five are the dialgebra axioms.
inline constexpr std::array<AxiomShape, 11> kAxioms{{
    {Product::left, Product::left, Product::left, Product::left},      // T1
    {Product::left, Product::left, Product::left, Product::right},     // T2
    {Product::right, Product::left, Product::right, Product::left},    // T3
    {Product::left, Product::right, Product::right, Product::right},   // T4
    {Product::right, Product::right, Product::right, Product::right},  // T5
    {Product::left, Product::left, Product::left, Product::middle},    // T6
    {Product::middle, Product::left, Product::middle, Product::left},  // T7
    {Product::left, Product::middle, Product::middle, Product::right}, // T8
    {Product::right, Product::middle, Product::right, Product::middle},// T9
    {Product::middle, Product::right, Product::right, Product::right}, // T10
    {Product::middle, Product::middle, Product::middle, Product::middle},  // T11
}};

inline AxiomReport check_axioms(const Trialgebra& t, std::size_t axiom_count, char id_prefix) {
  AxiomReport report;
  const std::size_t n = t.dim;
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  for (std::size_t a = 0; a < axiom_count; ++a) {
    const AxiomShape& shape = kAxioms[a];
    const std::string id = std::string(1, id_prefix) + std::to_string(a + 1);
    report.checked.push_back(id);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> lhs =
              t.tensor(shape.b).apply(t.tensor(shape.a).basis_product(i, j), basis[k]);
          std::vector<Rational> rhs =
              t.tensor(shape.c).apply(basis[i], t.tensor(shape.d).basis_product(j, k));
          if (lhs != rhs)
            report.violations.push_back(
                {id, {i + 1, j + 1, k + 1}, std::move(lhs), std::move(rhs)});
        }
  }
  return report;
}

}  // namespace detail

/// Evaluates all 11 trialgebra identities on every basis triple. Trilinearity
/// makes the basis check complete. A failing algebra yields a report with
/// witnesses, never an exception: downstream solvers stay well-defined on
/// arbitrary structure-constant tables.
inline AxiomReport check_trialgebra(const Trialgebra& t) { return detail::check_axioms(t, 11, 'T'); }

/// The five dialgebra identities on (⊣, ⊢) only.
inline AxiomReport check_dialgebra(const Trialgebra& t) { return detail::check_axioms(t, 5, 'D'); }

// ---------------------------------------------------------------------------
// Induced associative product

/// Tensor of x ∗ y = x ⊣ y + x ⊢ y − x ⊥ y. Associative whenever the
/// trialgebra axioms hold.
inline StructureTensor star_product(const Trialgebra& t) {
  StructureTensor s(t.dim);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j)
      for (std::size_t k = 0; k < t.dim; ++k)
        s.at(i, j, k) = t.left.at(i, j, k) + t.right.at(i, j, k) - t.middle.at(i, j, k);
  return s;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct HomCounterexample {
  Product product;
  std::size_t i = 0, j = 0;  // 1-based
  std::vector<Rational> lhs, rhs;
};

struct HomCheckResult {
  bool ok = false;
  std::optional<HomCounterexample> counterexample;
};

/// f has dst.dim rows and src.dim columns; column c is the image of e_c.
/// True iff f(e_i • e_j) = f(e_i) • f(e_j) for all basis pairs and products.
inline HomCheckResult check_homomorphism(const Trialgebra& src, const Trialgebra& dst,
                                         const RatMatrix& f) {
  if (f.rows() != dst.dim || f.cols() != src.dim)
    throw DimensionError("homomorphism matrix must be dst.dim x src.dim");
  for (Product p : kAllProducts)
    for (std::size_t i = 0; i < src.dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j) {
        std::vector<Rational> lhs = f * src.tensor(p).basis_product(i, j);
        std::vector<Rational> rhs = dst.tensor(p).apply(f.column(i), f.column(j));
        if (lhs != rhs)
          return {false, HomCounterexample{p, i + 1, j + 1, std::move(lhs), std::move(rhs)}};
      }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Centralizer and product span

/// {x : x • h = h • x = 0 for all h in span(subset_basis), all three
/// products}, computed as one exact nullspace.
inline Subspace centralizer(const Trialgebra& t, const std::vector<std::vector<Rational>>& subset_basis) {
  const std::size_t n = t.dim;
  for (const auto& h : subset_basis)
    if (h.size() != n) throw DimensionError("centralizer subset vector length mismatch");

  RatMatrix system(subset_basis.size() * 6 * n, n);
  std::size_t row = 0;
  for (const auto& h : subset_basis) {
    for (Product p : kAllProducts) {
      const StructureTensor& c = t.tensor(p);
      // x • h = 0: coefficient of x_i in coordinate k is sum_j c(i,j,k) h_j.
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) system(row, i) += c.at(i, j, k) * h[j];
      // h • x = 0: coefficient of x_j in coordinate k is sum_i h_i c(i,j,k).
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) system(row, j) += h[i] * c.at(i, j, k);
    }
  }
  return nullspace(system);
}

/// Two-sided annihilator Z_T(T).
inline Subspace centralizer(const Trialgebra& t) {
  std::vector<std::vector<Rational>> whole(t.dim, std::vector<Rational>(t.dim));
  for (std::size_t i = 0; i < t.dim; ++i) whole[i][i] = 1;
  return centralizer(t, whole);
}

/// T² = span of all basis products under all three products.
inline Subspace product_span(const Trialgebra& t) {
  std::vector<std::vector<Rational>> generators;
  for (Product p : kAllProducts)
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j) generators.push_back(t.tensor(p).basis_product(i, j));
  return Subspace::span(t.dim, generators);
}

// ---------------------------------------------------------------------------
// Basis change

/// Transport of structure along x ↦ P x: the new product is
/// x •' y = P⁻¹ (P x • P y). P must be invertible.
inline Trialgebra change_basis(const Trialgebra& t, const RatMatrix& p) {
  if (p.rows() != t.dim || p.cols() != t.dim) throw DimensionError("basis-change matrix shape mismatch");
  std::optional<RatMatrix> p_inv = inverted(p);
  if (!p_inv) throw PreconditionError("basis-change matrix is singular");
  Trialgebra out(t.dim);
  out.name = t.name;
  out.params = t.params;
  for (Product prod : kAllProducts) {
    const StructureTensor& c = t.tensor(prod);
    StructureTensor& c2 = out.tensor(prod);
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j) {
        std::vector<Rational> image = *p_inv * c.apply(p.column(i), p.column(j));
        for (std::size_t k = 0; k < t.dim; ++k) c2.at(i, j, k) = image[k];
      }
  }
  return out;
}

}  // namespace trias
