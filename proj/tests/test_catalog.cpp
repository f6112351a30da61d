#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trias/audit.hpp"
#include "trias/catalog.hpp"

using namespace trias;

TEST_CASE("catalog has 36 entries split 8/12/16 by dimension") {
  const auto entries = list_entries();
  REQUIRE(entries.size() == 36);
  std::size_t by_dim[5] = {0, 0, 0, 0, 0};
  std::set<std::string> ids;
  std::size_t previous_dim = 0;
  for (const EntrySummary& e : entries) {
    ++by_dim[e.dim];
    ids.insert(e.id);
    CHECK(e.dim >= previous_dim);  // fixed order: dimension ascending
    previous_dim = e.dim;
  }
  CHECK(by_dim[2] == 8);
  CHECK(by_dim[3] == 12);
  CHECK(by_dim[4] == 16);
  CHECK(ids.size() == 36);
  CHECK(entries.front().id == "Trias_2^1");
  CHECK(entries.back().id == "Trias_4^16");
}

TEST_CASE("only Trias_3^12 carries the ambiguous-source flag") {
  for (const EntrySummary& e : list_entries())
    CHECK(e.ambiguous_source == (e.id == "Trias_3^12"));
}

TEST_CASE("instantiating Trias_2^6 reproduces its table") {
  const Trialgebra t = instantiate("Trias_2^6");
  REQUIRE(t.dim == 2);
  CHECK(t.left.at(0, 0, 0) == 1);
  CHECK(t.left.at(1, 0, 1) == 1);
  CHECK(t.right.at(0, 0, 0) == 1);
  CHECK(t.middle.at(0, 0, 0) == 1);
  // Everything else vanishes: exactly four nonzero structure constants.
  std::size_t nonzero = 0;
  for (Product p : kAllProducts)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          if (t.tensor(p).at(i, j, k) != 0) ++nonzero;
  CHECK(nonzero == 4);
  CHECK(t.name == "Trias_2^6");
  CHECK(t.params.empty());
}

TEST_CASE("instantiating Trias_2^1 at the default parameters") {
  const Trialgebra t = instantiate("Trias_2^1", {});
  CHECK(t.left.basis_product(0, 1) == std::vector<Rational>{1, 0});    // e1 ⊣ e2 = a e1
  CHECK(t.left.basis_product(1, 1) == std::vector<Rational>{0, 1});    // e2 ⊣ e2 = a e2
  CHECK(t.right.basis_product(1, 0) == std::vector<Rational>{1, 0});   // e2 ⊢ e1 = a e1
  CHECK(t.right.basis_product(1, 1) == std::vector<Rational>{0, 1});   // e2 ⊢ e2 = a e2
  CHECK(t.middle.basis_product(0, 0) == std::vector<Rational>{1, 0});  // e1 ⊥ e1 = b e1
  CHECK(t.middle.basis_product(0, 1) == std::vector<Rational>{1, 1});  // e1 ⊥ e2 = b e1 + a e2
  CHECK(t.params.at("a") == 1);
  CHECK(t.params.at("b") == 1);
}

TEST_CASE("parameter values scale the instantiated table") {
  const Trialgebra t = instantiate("Trias_2^1", {{"a", Rational(2)}, {"b", Rational(-1, 2)}});
  CHECK(t.left.basis_product(0, 1) == std::vector<Rational>{2, 0});
  CHECK(t.middle.basis_product(0, 1) == std::vector<Rational>{Rational(-1, 2), 2});
}

TEST_CASE("instantiation errors") {
  CHECK_THROWS_AS(instantiate("Trias_9^9"), PreconditionError);
  CHECK_THROWS_AS(instantiate("Trias_2^6", {{"a", Rational(1)}}), PreconditionError);
  // b = 0 is forbidden for Trias_2^8.
  CHECK_THROWS_AS(instantiate("Trias_2^8", {{"b", Rational(0)}}), PreconditionError);
  CHECK_THROWS_MATCHES(instantiate("Trias_2^8", {{"a", Rational(1)}, {"b", Rational(0)}}),
                       PreconditionError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("b != 0")));
  CHECK_NOTHROW(instantiate("Trias_2^8", {{"b", Rational(3)}}));
}

TEST_CASE("every entry instantiates to a well-formed algebra of its dimension") {
  for (const CatalogEntry& entry : catalog()) {
    const Trialgebra t = instantiate(entry);
    CHECK(t.dim == entry.dim);
    CHECK(t.left.dim() == entry.dim);
    CHECK(t.right.dim() == entry.dim);
    CHECK(t.middle.dim() == entry.dim);
    CHECK(t.name == entry.id);
  }
}

TEST_CASE("audit covers all entries and records the known spot values") {
  const AuditReport report = run_audit();
  REQUIRE(report.summary.total == 36);
  REQUIRE(report.entries.size() == 36);
  CHECK(report.summary.axiom_pass + report.summary.axiom_fail == 36);

  const auto find = [&report](std::string_view id) -> const EntryAuditRecord& {
    for (const EntryAuditRecord& rec : report.entries)
      if (rec.id == id) return rec;
    FAIL("entry not found");
    return report.entries.front();
  };

  const EntryAuditRecord& t26 = find("Trias_2^6");
  CHECK(t26.axiom_pass);
  CHECK(t26.computed_der_dim == 1);
  CHECK(t26.claimed_der_dim == DimClaim::of(1));
  CHECK(t26.der_match == true);
  CHECK(t26.computed_centroid_dim == 1);
  CHECK(t26.centroid_match == true);

  const EntryAuditRecord& t33 = find("Trias_3^3");
  CHECK_FALSE(t33.axiom_pass);
  REQUIRE(t33.violated_axioms.size() == 1);
  CHECK(t33.violated_axioms[0].axiom == "T11");
  CHECK(t33.violated_axioms[0].triple == std::array<std::size_t, 3>{2, 2, 2});

  const EntryAuditRecord& t27 = find("Trias_2^7");
  CHECK(t27.axiom_pass);
  CHECK(t27.computed_der_dim == 2);
  CHECK(t27.der_match == false);  // table claims 1

  const EntryAuditRecord& t311 = find("Trias_3^11");
  CHECK(t311.claimed_der_dim == DimClaim::unreadable());
  CHECK_FALSE(t311.der_match.has_value());  // excluded from match statistics

  // The dim-2 rows of the centroid table all claim the scalar line.
  for (const EntryAuditRecord& rec : report.entries)
    if (rec.dim == 2) CHECK(rec.computed_centroid_dim == 1);
}

TEST_CASE("claim tallies add up") {
  const AuditReport report = run_audit();
  const auto total = [](const ClaimTally& t) {
    return t.match + t.mismatch + t.unreadable + t.unlisted;
  };
  CHECK(total(report.summary.derivations) == 36);
  CHECK(total(report.summary.centroids) == 36);
  CHECK(report.summary.derivations.unreadable == 1);  // Trias_3^11
  CHECK(report.summary.centroids.unreadable == 0);
}

TEST_CASE("audit output is deterministic") {
  const std::string first = audit_json_text(run_audit());
  const std::string second = audit_json_text(run_audit());
  CHECK(first == second);
  CHECK(first.find("\"schema\": \"trias.audit/1\"") != std::string::npos);
}

TEST_CASE("parameter overrides flow into the audit") {
  ParamOverrides overrides;
  overrides["Trias_2^8"]["b"] = Rational(2);
  const AuditReport report = run_audit(overrides);
  for (const EntryAuditRecord& rec : report.entries)
    if (rec.id == "Trias_2^8") CHECK(rec.params_used.at("b") == 2);
}

TEST_CASE("entry tables pretty-print in source layout") {
  const auto lines = format_entry_table(catalog_entry("Trias_2^6"));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "e1 left e1 = e1");
  CHECK(lines[1] == "e2 left e1 = e2");
  const auto param_lines = format_entry_table(catalog_entry("Trias_2^1"));
  bool found = false;
  for (const std::string& line : param_lines)
    found = found || line == "e1 middle e2 = b*e1 + a*e2";
  CHECK(found);
}
