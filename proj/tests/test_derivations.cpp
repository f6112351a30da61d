#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "trias/catalog.hpp"
#include "trias/centroids.hpp"
#include "trias/derivations.hpp"

using namespace trias;

namespace {

std::vector<Rational> basis_vec(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

EndoMatrix elementary(std::size_t n, std::size_t r, std::size_t c) {
  EndoMatrix e(n);
  e.at(r, c) = 1;
  return e;
}

// Independent construction of the derivation system: evaluate the Leibniz
// residual d(e_i•e_j) - d(e_i)•e_j - e_i•d(e_j) on every elementary matrix.
// The residual is linear in d, so its coordinates on elementary matrices are
// exactly the system's columns.
RatMatrix derivation_system_oracle(const Trialgebra& t) {
  const std::size_t n = t.dim;
  RatMatrix oracle(3 * n * n * n, n * n);
  for (std::size_t col_r = 0; col_r < n; ++col_r)
    for (std::size_t col_c = 0; col_c < n; ++col_c) {
      const EndoMatrix e = elementary(n, col_r, col_c);
      const std::size_t unknown = col_c * n + col_r;
      std::size_t row = 0;
      for (Product p : kAllProducts) {
        const StructureTensor& c = t.tensor(p);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> residual = e.apply(c.basis_product(i, j));
            const std::vector<Rational> first = c.apply(e.column(i), basis_vec(n, j));
            const std::vector<Rational> second = c.apply(basis_vec(n, i), e.column(j));
            for (std::size_t q = 0; q < n; ++q) residual[q] -= first[q] + second[q];
            for (std::size_t q = 0; q < n; ++q, ++row) oracle(row, unknown) = residual[q];
          }
      }
    }
  return oracle;
}

}  // namespace

TEST_CASE("every endomorphism is a derivation of the zero algebra") {
  const Trialgebra zero = make_zero_algebra(3);
  testing::Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    EndoMatrix d(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) d.at(r, c) = testing::random_rational(rng);
    CHECK(is_derivation(zero, d).ok);
  }
}

TEST_CASE("diag(0,1) is a derivation of Trias_2^6 but the identity is not") {
  // Hand-solved: the Leibniz constraints force the (1,1), (1,2), (2,1)
  // entries to zero and leave d_22 free.
  const Trialgebra t = instantiate("Trias_2^6");
  CHECK(is_derivation(t, EndoMatrix::diagonal({Rational(0), Rational(1)})).ok);

  const LeibnizCheck id_check = is_derivation(t, EndoMatrix::identity(2));
  REQUIRE_FALSE(id_check.ok);
  REQUIRE(id_check.counterexample.has_value());
  CHECK(id_check.counterexample->product == Product::left);
  CHECK(id_check.counterexample->i == 1);
  CHECK(id_check.counterexample->j == 1);
  CHECK(id_check.counterexample->lhs == std::vector<Rational>{1, 0});
  CHECK(id_check.counterexample->rhs == std::vector<Rational>{2, 0});
}

TEST_CASE("is_derivation rejects mismatched dimensions") {
  CHECK_THROWS_AS(is_derivation(instantiate("Trias_3^3"), EndoMatrix::identity(2)), DimensionError);
}

TEST_CASE("derivation system shape and zero case") {
  const DerivationSystem dim2 = build_derivation_system(instantiate("Trias_2^6"));
  CHECK(dim2.matrix.rows() == 24);
  CHECK(dim2.matrix.cols() == 4);
  CHECK(build_derivation_system(make_zero_algebra(2)).matrix == RatMatrix(24, 4));
}

TEST_CASE("derivation system matches the residual-evaluation oracle") {
  testing::Rng rng(7321);
  const std::vector<Trialgebra> algebras = {
      instantiate("Trias_2^6"), instantiate("Trias_3^3"), instantiate("Trias_2^8"),
      testing::random_diagonal_trialgebra(rng, 3)};
  for (const Trialgebra& t : algebras)
    CHECK(build_derivation_system(t).matrix == derivation_system_oracle(t));
}

TEST_CASE("derivation system of Trias_2^6 has rank 3") {
  CHECK(rank(build_derivation_system(instantiate("Trias_2^6")).matrix) == 3);
}

TEST_CASE("derivation basis of the zero algebra is all endomorphisms") {
  for (std::size_t n : {2u, 3u, 4u}) CHECK(derivation_basis(make_zero_algebra(n)).dim() == n * n);
}

TEST_CASE("Der(Trias_2^6) is exactly the span of diag(0,1)") {
  const EndoSubspace der = derivation_basis(instantiate("Trias_2^6"));
  REQUIRE(der.dim() == 1);
  CHECK(der.basis()[0] == EndoMatrix::diagonal({Rational(0), Rational(1)}));
}

TEST_CASE("Trias_2^7 contradicts its recorded derivation claim") {
  // The recorded table prints d = d_11·I with dimension 1, but the identity
  // fails the Leibniz rule on the idempotent e1; the exact solver finds the
  // two-dimensional space spanned by E_21 and E_22.
  const Trialgebra t = instantiate("Trias_2^7");
  CHECK_FALSE(is_derivation(t, EndoMatrix::identity(2)).ok);
  const EndoSubspace der = derivation_basis(t);
  CHECK(der.dim() == 2);
  CHECK(der.contains(elementary(2, 1, 0)));
  CHECK(der.contains(elementary(2, 1, 1)));
  CHECK(catalog_entry("Trias_2^7").claimed_der_dim == DimClaim::of(1));
}

TEST_CASE("solver and predicate agree on basis elements and random members") {
  testing::Rng rng(852);
  for (const char* id : {"Trias_2^6", "Trias_3^8", "Trias_4^13"}) {
    const Trialgebra t = instantiate(id);
    const EndoSubspace der = derivation_basis(t);
    const std::vector<EndoMatrix> basis = der.basis();
    for (const EndoMatrix& b : basis) CHECK(is_derivation(t, b).ok);
    for (int trial = 0; trial < 20; ++trial) {
      EndoMatrix combo(t.dim);
      for (const EndoMatrix& b : basis) combo = combo + testing::random_rational(rng) * b;
      CHECK(is_derivation(t, combo).ok);
    }
  }
}

TEST_CASE("derivations are closed under the commutator") {
  for (const CatalogEntry& entry : catalog()) {
    const Trialgebra t = instantiate(entry);
    if (!check_trialgebra(t).passed()) continue;
    const EndoSubspace der = derivation_basis(t);
    const std::vector<EndoMatrix> basis = der.basis();
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        CHECK(der.contains(commutator(basis[a], basis[b])));
  }
}

TEST_CASE("central derivations of the zero algebra are everything") {
  CHECK(central_derivations_definitional(make_zero_algebra(3)).dim() == 9);
}

TEST_CASE("central derivations of Trias_2^6 vanish") {
  CHECK(central_derivations_definitional(instantiate("Trias_2^6")) == EndoSubspace::zero(2));
}

TEST_CASE("central derivations sit inside the derivation algebra") {
  for (const char* id : {"Trias_2^6", "Trias_3^7", "Trias_3^10", "Trias_4^6"}) {
    const Trialgebra t = instantiate(id);
    const EndoSubspace central = central_derivations_definitional(t);
    const EndoSubspace der = derivation_basis(t);
    for (const EndoMatrix& b : central.basis()) CHECK(der.contains(b));
  }
}

TEST_CASE("central derivations equal the centroid-derivation intersection") {
  for (const CatalogEntry& entry : catalog()) {
    const Trialgebra t = instantiate(entry);
    if (!check_trialgebra(t).passed()) continue;
    const EndoSubspace central = central_derivations_definitional(t);
    const Subspace meet = intersect(centroid_basis(t).space(), derivation_basis(t).space());
    CHECK(central.space() == meet);
  }
}

TEST_CASE("derivation spaces transform by conjugation under basis change") {
  testing::Rng rng(246);
  const Trialgebra t = instantiate("Trias_3^10");
  const EndoSubspace der = derivation_basis(t);
  for (int trial = 0; trial < 4; ++trial) {
    const RatMatrix p = testing::random_invertible(rng, 3);
    const Trialgebra conjugated = change_basis(t, p);
    const EndoSubspace der2 = derivation_basis(conjugated);
    CHECK(der2.dim() == der.dim());
    // d a derivation of t maps to P⁻¹ d P as a derivation of the conjugate.
    const RatMatrix p_inv = *inverted(p);
    for (const EndoMatrix& d : der.basis())
      CHECK(der2.contains(EndoMatrix(p_inv * d.matrix() * p)));
  }
}
