#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "trias/catalog.hpp"
#include "trias/rota_baxter.hpp"

using namespace trias;

TEST_CASE("the zero operator is Rota-Baxter for every weight") {
  for (const char* id : {"Trias_2^6", "Trias_3^10", "Trias_4^13"}) {
    const Trialgebra t = instantiate(id);
    for (const Rational& weight : {Rational(0), Rational(-1), Rational(5, 3)})
      CHECK(is_rota_baxter(t, EndoMatrix(t.dim), weight).ok);
  }
}

TEST_CASE("the identity is Rota-Baxter of weight -1 everywhere") {
  for (const CatalogEntry& entry : catalog()) {
    const Trialgebra t = instantiate(entry);
    CHECK(is_rota_baxter(t, EndoMatrix::identity(t.dim), Rational(-1)).ok);
  }
}

TEST_CASE("the identity at weight 0 fails on Trias_2^6 at (e1, e1)") {
  // LHS = e1 ∗ e1 = e1; RHS = R(e1∗e1 + e1∗e1) = 2e1.
  const RotaBaxterCheck check =
      is_rota_baxter(instantiate("Trias_2^6"), EndoMatrix::identity(2), Rational(0));
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.counterexample.has_value());
  CHECK(check.counterexample->i == 1);
  CHECK(check.counterexample->j == 1);
  CHECK(check.counterexample->lhs == std::vector<Rational>{1, 0});
  CHECK(check.counterexample->rhs == std::vector<Rational>{2, 0});
}

TEST_CASE("weight-0 induced product of the zero operator is zero") {
  const Trialgebra t = instantiate("Trias_3^10");
  const StructureTensor induced = induced_product_weight0(t, EndoMatrix(3), Rational(0));
  CHECK(induced.is_zero());
  CHECK_FALSE(find_left_symmetry_failure(induced).has_value());
}

TEST_CASE("weight-0 induced product vanishes for commutative star products") {
  // On a diagonal trialgebra over k × k the star product is commutative, so
  // R(x) ∗ y − y ∗ R(x) = 0 whatever R is.
  StructureTensor kxk(2);
  kxk.at(0, 0, 0) = 1;
  kxk.at(1, 1, 1) = 1;
  const Trialgebra t = make_diagonal(kxk);
  testing::Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    EndoMatrix r(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r.at(i, j) = testing::random_rational(rng);
    CHECK(induced_product_weight0(t, r, Rational(0)).is_zero());
  }
}

TEST_CASE("weight-0 candidates found by grid search give left-symmetric products") {
  // Diagonal trialgebra over the spec'd associative 2×2 table.
  StructureTensor a(2);
  a.at(0, 0, 0) = 1;
  a.at(0, 1, 1) = 1;
  const Trialgebra t = make_diagonal(a);
  REQUIRE(check_trialgebra(t).passed());
  const GridSearchResult result =
      grid_search_rota_baxter(t, Rational(0), {Rational(-1), Rational(0), Rational(1)}, 1000);
  CHECK(result.complete);
  CHECK(result.examined == 81);
  CHECK_FALSE(result.found.empty());
  for (const EndoMatrix& r : result.found) {
    const StructureTensor induced = induced_product_weight0(t, r, Rational(0));
    CHECK_FALSE(find_left_symmetry_failure(induced).has_value());
  }
}

TEST_CASE("weight -1 with the identity gives the opposite-sign product") {
  for (const char* id : {"Trias_2^6", "Trias_4^13"}) {
    const Trialgebra t = instantiate(id);
    const StructureTensor star = star_product(t);
    const StructureTensor induced =
        induced_product_weight_minus1(t, EndoMatrix::identity(t.dim), Rational(-1));
    // x ⋆ y = x∗y − y∗x − x∗y = −(y∗x).
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j)
        for (std::size_t k = 0; k < t.dim; ++k)
          CHECK(induced.at(i, j, k) == -star.at(j, i, k));
    CHECK_FALSE(find_associativity_failure(induced).has_value());
  }
}

TEST_CASE("weight -1 with the zero operator negates the star product") {
  const Trialgebra t = instantiate("Trias_3^10");
  REQUIRE(is_rota_baxter(t, EndoMatrix(3), Rational(-1)).ok);
  const StructureTensor induced = induced_product_weight_minus1(t, EndoMatrix(3), Rational(-1));
  const StructureTensor star = star_product(t);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(induced.at(i, j, k) == -star.at(i, j, k));
  CHECK_FALSE(find_associativity_failure(induced).has_value());
}

TEST_CASE("weight -1 induced product on the zero algebra is zero") {
  const Trialgebra zero = make_zero_algebra(2);
  EndoMatrix r(2);
  r.at(0, 1) = Rational(3, 7);
  const StructureTensor induced = induced_product_weight_minus1(zero, r, Rational(-1));
  CHECK(induced.is_zero());
  CHECK_FALSE(find_associativity_failure(induced).has_value());
}

TEST_CASE("both weight -1 formulas are exposed") {
  const Trialgebra t = instantiate("Trias_2^6");
  const EndoMatrix r = EndoMatrix::identity(2);
  const StructureTensor paper = induced_product_weight_minus1(t, r, Rational(-1), InducedFormula::paper);
  const StructureTensor standard =
      induced_product_weight_minus1(t, r, Rational(-1), InducedFormula::standard);
  // With R = id the standard reading collapses to the star product itself.
  CHECK(standard == star_product(t));
  CHECK_FALSE(find_associativity_failure(paper).has_value());
  CHECK_FALSE(find_associativity_failure(standard).has_value());
}

TEST_CASE("induced products enforce their weight preconditions") {
  const Trialgebra t = instantiate("Trias_2^6");
  CHECK_THROWS_AS(induced_product_weight0(t, EndoMatrix(2), Rational(1)), PreconditionError);
  CHECK_THROWS_AS(induced_product_weight_minus1(t, EndoMatrix(2), Rational(0)), PreconditionError);
}

TEST_CASE("zero algebra grid search accepts everything") {
  const Trialgebra zero = make_zero_algebra(2);
  const GridSearchResult result =
      grid_search_rota_baxter(zero, Rational(2), {Rational(0), Rational(1)}, 100);
  CHECK(result.complete);
  CHECK(result.found.size() == 16);  // 2^(n²)
}

TEST_CASE("grid search over the singleton zero entry finds the zero matrix") {
  const Trialgebra t = instantiate("Trias_3^10");
  const GridSearchResult result = grid_search_rota_baxter(t, Rational(4), {Rational(0)}, 100);
  REQUIRE(result.found.size() == 1);
  CHECK(result.found[0] == EndoMatrix(3));
}

TEST_CASE("grid search on Trias_2^6 at weight -1 finds the identity") {
  const GridSearchResult result = grid_search_rota_baxter(instantiate("Trias_2^6"), Rational(-1),
                                                          {Rational(0), Rational(1)}, 1000);
  CHECK(result.complete);
  bool found_identity = false;
  for (const EndoMatrix& r : result.found) found_identity = found_identity || r == EndoMatrix::identity(2);
  CHECK(found_identity);
}

TEST_CASE("grid search reports partial results at the limit") {
  const GridSearchResult result = grid_search_rota_baxter(instantiate("Trias_2^6"), Rational(-1),
                                                          {Rational(0), Rational(1)}, 7);
  CHECK_FALSE(result.complete);
  CHECK(result.examined == 7);
}

TEST_CASE("scaling a Rota-Baxter operator scales its weight") {
  const Trialgebra t = instantiate("Trias_2^6");
  const GridSearchResult result =
      grid_search_rota_baxter(t, Rational(-1), {Rational(0), Rational(1)}, 1000);
  REQUIRE(result.complete);
  for (const EndoMatrix& r : result.found) {
    for (const Rational& mu : {Rational(2), Rational(-1, 3)})
      CHECK(is_rota_baxter(t, mu * r, mu * Rational(-1)).ok);
  }
}
