#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trias/errors.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

/// One structure-constant assignment of a catalog entry: the coefficient of
/// e_k in e_i • e_j, either a rational constant or a named parameter.
/// Indices are 1-based, matching the source tables.
struct CatalogLine {
  Product product;
  std::size_t i = 0, j = 0, k = 0;
  Rational constant;  // used when param is empty
  std::string param;
};

enum class ClaimKind { value, unreadable, absent };

/// A dimension claimed by the source tables; "unreadable" marks rows whose
/// printed matrix is malformed, "absent" marks classes the tables skip.
struct DimClaim {
  ClaimKind kind = ClaimKind::absent;
  std::size_t value = 0;

  static DimClaim of(std::size_t v) { return {ClaimKind::value, v}; }
  static DimClaim unreadable() { return {ClaimKind::unreadable, 0}; }
  static DimClaim absent() { return {ClaimKind::absent, 0}; }

  bool operator==(const DimClaim&) const = default;
};

struct ParamSpec {
  std::string name;
  Rational default_value;
};

/// Parameter value the entry forbids (e.g. b = 0 where a table denominator
/// would vanish).
struct ParamConstraint {
  std::string param;
  Rational forbidden;
};

struct CatalogEntry {
  std::string id;
  std::size_t dim = 0;
  std::vector<CatalogLine> table;
  std::vector<ParamSpec> params;
  std::vector<ParamConstraint> constraints;
  DimClaim claimed_der_dim;
  DimClaim claimed_centroid_dim;
  bool ambiguous_source = false;
};

namespace detail {

// Table grammar, one assignment per line: <left|right|middle> i j k coeff
// where coeff is a rational literal or a declared parameter name. Identical
// duplicate lines are collapsed (some source tables print repeated blocks).
inline std::vector<CatalogLine> parse_catalog_table(const CatalogEntry& entry, std::string_view text) {
  std::vector<CatalogLine> lines;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    CatalogLine line;
    auto product = product_from_name(token);
    if (!product) throw std::logic_error("catalog " + entry.id + ": bad product " + token);
    line.product = *product;
    if (!(in >> line.i >> line.j >> line.k))
      throw std::logic_error("catalog " + entry.id + ": truncated line");
    if (line.i < 1 || line.i > entry.dim || line.j < 1 || line.j > entry.dim || line.k < 1 ||
        line.k > entry.dim)
      throw std::logic_error("catalog " + entry.id + ": index out of range");
    if (!(in >> token)) throw std::logic_error("catalog " + entry.id + ": missing coefficient");
    if (auto value = try_parse_rational(token)) {
      line.constant = *value;
    } else {
      bool declared = false;
      for (const ParamSpec& p : entry.params) declared = declared || p.name == token;
      if (!declared) throw std::logic_error("catalog " + entry.id + ": unknown parameter " + token);
      line.constant = 1;
      line.param = token;
    }
    bool duplicate = false;
    for (const CatalogLine& prev : lines) {
      if (prev.product == line.product && prev.i == line.i && prev.j == line.j && prev.k == line.k) {
        if (prev.constant != line.constant || prev.param != line.param)
          throw std::logic_error("catalog " + entry.id + ": conflicting duplicate line");
        duplicate = true;
        break;
      }
    }
    if (!duplicate) lines.push_back(std::move(line));
  }
  return lines;
}

inline CatalogEntry make_entry(std::string id, std::size_t dim, std::vector<ParamSpec> params,
                               std::vector<ParamConstraint> constraints, DimClaim der, DimClaim cent,
                               bool ambiguous, std::string_view table) {
  CatalogEntry entry;
  entry.id = std::move(id);
  entry.dim = dim;
  entry.params = std::move(params);
  entry.constraints = std::move(constraints);
  entry.claimed_der_dim = der;
  entry.claimed_centroid_dim = cent;
  entry.ambiguous_source = ambiguous;
  entry.table = parse_catalog_table(entry, table);
  return entry;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  const auto add = [&entries](std::string id, std::size_t dim, std::vector<ParamSpec> params,
                              std::vector<ParamConstraint> constraints, DimClaim der, DimClaim cent,
                              bool ambiguous, std::string_view table) {
    entries.push_back(make_entry(std::move(id), dim, std::move(params), std::move(constraints), der,
                                 cent, ambiguous, table));
  };

  // --- dimension 2 -------------------------------------------------------
  add("Trias_2^1", 2, {{"a", 1}, {"b", 1}}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 2 1 a
      left   2 2 2 a
      right  2 1 1 a
      right  2 2 2 a
      middle 1 1 1 b
      middle 1 2 1 b
      middle 1 2 2 a)");
  add("Trias_2^2", 2, {{"a", 1}}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 1 1 1
      left   2 1 2 1
      right  1 1 1 1
      right  1 2 2 1
      middle 1 2 1 1
      middle 1 2 2 a
      middle 2 2 2 1)");
  add("Trias_2^3", 2, {}, {}, DimClaim::of(1), DimClaim::of(1), false, R"(
      left   2 2 2 1
      right  2 1 1 1
      right  2 2 2 1
      middle 2 1 1 1
      middle 2 2 2 1)");
  add("Trias_2^4", 2, {}, {}, DimClaim::of(1), DimClaim::of(1), false, R"(
      left   1 2 1 1
      left   2 2 2 1
      right  2 2 1 1
      right  2 2 2 1
      middle 2 2 1 1
      middle 2 2 2 1)");
  add("Trias_2^5", 2, {}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 1 1 1
      right  2 1 1 1
      right  2 2 2 1
      middle 1 1 1 1
      middle 1 2 2 1)");
  add("Trias_2^6", 2, {}, {}, DimClaim::of(1), DimClaim::of(1), false, R"(
      left   1 1 1 1
      left   2 1 2 1
      right  1 1 1 1
      middle 1 1 1 1)");
  add("Trias_2^7", 2, {}, {}, DimClaim::of(1), DimClaim::of(1), false, R"(
      left   1 1 1 1
      left   2 1 2 1
      right  1 1 1 1
      right  1 2 2 1
      middle 1 1 1 1
      middle 1 2 2 1)");
  add("Trias_2^8", 2, {{"a", 1}, {"b", 1}}, {{"b", 0}}, DimClaim::of(1), DimClaim::of(1), false, R"(
      left   1 1 1 a
      left   2 1 2 a
      right  1 1 1 a
      right  1 2 2 a
      middle 1 1 1 a
      middle 1 1 2 b)");

  // --- dimension 3 -------------------------------------------------------
  add("Trias_3^1", 3, {}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 2 3 1
      left   2 1 3 1
      left   2 3 3 1
      right  1 2 3 1
      right  2 2 3 1
      middle 1 1 3 1
      middle 1 2 3 1
      middle 2 2 3 1)");
  add("Trias_3^2", 3, {}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 2 3 1
      left   2 1 3 1
      left   2 3 3 1
      right  1 2 3 1
      right  2 1 3 1
      right  2 2 3 1
      middle 1 1 3 1
      middle 1 2 3 1
      middle 2 2 3 1)");
  add("Trias_3^3", 3, {}, {}, DimClaim::of(2), DimClaim::of(2), false, R"(
      left   2 2 1 1
      right  2 2 1 1
      middle 2 2 3 1
      middle 2 3 1 1
      middle 2 3 3 1)");
  add("Trias_3^4", 3, {}, {}, DimClaim::absent(), DimClaim::of(2), false, R"(
      left   3 3 1 1
      right  3 3 1 1
      middle 3 2 1 1
      middle 3 2 2 1
      middle 3 3 1 1
      middle 3 3 2 1)");
  add("Trias_3^5", 3, {}, {}, DimClaim::of(2), DimClaim::of(3), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      right  2 2 1 1
      right  2 2 3 1
      middle 2 2 1 1
      middle 2 2 2 1)");
  add("Trias_3^6", 3, {}, {}, DimClaim::of(1), DimClaim::of(2), false, R"(
      left   1 3 2 1
      left   3 1 2 1
      left   3 3 2 1
      right  1 1 2 1
      right  1 3 2 1
      right  3 1 2 1
      right  3 3 2 1
      middle 3 1 2 1
      middle 3 3 2 1)");
  add("Trias_3^7", 3, {}, {}, DimClaim::absent(), DimClaim::of(1), false, R"(
      left   1 1 2 1
      left   1 1 3 1
      right  1 1 2 1
      right  1 1 3 1
      middle 1 1 2 1
      middle 1 1 3 1)");
  add("Trias_3^8", 3, {}, {}, DimClaim::of(3), DimClaim::of(4), false, R"(
      left   2 2 1 1
      left   2 3 1 1
      left   3 2 1 1
      left   3 3 1 1
      right  2 2 1 1
      right  2 3 1 1
      right  3 2 1 1
      middle 2 2 1 1
      middle 2 3 1 1
      middle 3 2 1 1)");
  add("Trias_3^9", 3, {}, {}, DimClaim::of(3), DimClaim::of(1), false, R"(
      left   2 2 3 1
      right  2 2 3 1
      middle 2 1 1 1
      middle 2 1 3 1
      middle 2 2 1 1
      middle 2 2 3 1)");
  add("Trias_3^10", 3, {}, {}, DimClaim::of(5), DimClaim::of(2), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      right  2 2 1 1
      right  2 2 3 1
      middle 2 2 1 1
      middle 2 2 3 1)");
  add("Trias_3^11", 3, {}, {}, DimClaim::unreadable(), DimClaim::of(5), false, R"(
      left   2 1 3 1
      left   2 2 3 1
      right  2 1 3 1
      right  2 2 3 1
      middle 2 1 3 1
      middle 2 2 3 1)");
  // The source prints a trailing product block after the right-product block
  // already closed; encoded literally and flagged ambiguous.
  add("Trias_3^12", 3, {}, {}, DimClaim::of(3), DimClaim::of(3), true, R"(
      left   1 1 3 1
      left   1 2 3 1
      left   2 1 3 1
      right  1 2 3 1
      right  2 1 3 1
      right  2 2 3 1
      middle 2 1 3 1
      middle 2 2 3 1)");

  // --- dimension 4 -------------------------------------------------------
  add("Trias_4^1", 4, {}, {}, DimClaim::of(5), DimClaim::of(3), false, R"(
      left   1 1 2 1
      left   1 1 4 1
      left   1 3 2 1
      left   1 3 4 1
      left   3 1 4 1
      right  1 1 2 1
      right  1 1 4 1
      right  1 3 2 1
      right  1 3 4 1
      right  3 1 4 1
      middle 1 1 2 1
      middle 1 1 4 1
      middle 1 3 4 1
      middle 3 3 2 1)");
  add("Trias_4^2", 4, {}, {}, DimClaim::of(2), DimClaim::of(5), false, R"(
      left   1 1 2 1
      left   1 1 4 1
      left   1 3 2 1
      left   1 3 4 1
      left   3 1 2 1
      left   3 1 4 1
      right  1 1 2 1
      right  1 1 4 1
      right  1 3 2 1
      right  1 3 4 1
      right  3 1 2 1
      right  3 1 4 1
      middle 1 1 2 1
      middle 1 1 4 1
      middle 1 3 2 1
      middle 1 3 4 1
      middle 3 1 2 1
      middle 3 1 4 1
      middle 3 3 2 1)");
  add("Trias_4^3", 4, {}, {}, DimClaim::of(5), DimClaim::of(5), false, R"(
      left   1 1 2 1
      left   1 1 4 1
      left   1 3 2 1
      left   1 3 4 1
      left   3 1 2 1
      left   3 1 4 1
      right  1 1 2 1
      right  1 1 4 1
      right  1 3 2 1
      right  1 3 4 1
      right  3 1 2 1
      right  3 1 4 1
      middle 1 1 2 1
      middle 1 1 4 1
      middle 1 3 2 1
      middle 1 3 4 1
      middle 3 3 4 1)");
  // The source repeats the middle-product block verbatim; identical
  // duplicates collapse.
  add("Trias_4^4", 4, {}, {}, DimClaim::of(5), DimClaim::of(4), false, R"(
      left   1 2 4 1
      left   2 1 4 1
      left   2 2 4 1
      right  2 1 4 1
      right  2 2 4 1
      right  3 1 4 1
      middle 1 2 4 1
      middle 2 1 4 1
      middle 1 2 4 1
      middle 2 1 4 1)");
  add("Trias_4^5", 4, {}, {}, DimClaim::of(5), DimClaim::of(1), false, R"(
      left   1 2 4 1
      left   2 1 4 1
      left   2 2 4 1
      right  2 1 4 1
      right  2 2 4 1
      right  3 1 4 1
      middle 1 1 4 1
      middle 2 1 4 1
      middle 3 3 4 1)");
  add("Trias_4^6", 4, {}, {}, DimClaim::of(5), DimClaim::of(7), false, R"(
      left   3 4 1 1
      left   3 4 2 1
      left   4 3 1 1
      left   4 3 2 1
      left   4 4 1 1
      left   4 4 2 1
      right  3 4 1 1
      right  3 4 2 1
      right  4 3 1 1
      right  4 3 2 1
      right  4 4 1 1
      right  4 4 2 1
      middle 3 4 1 1
      middle 3 4 2 1
      middle 4 3 1 1
      middle 4 3 2 1
      middle 4 4 1 1
      middle 4 4 2 1)");
  add("Trias_4^7", 4, {}, {}, DimClaim::of(2), DimClaim::of(6), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1)");
  add("Trias_4^8", 4, {}, {}, DimClaim::of(6), DimClaim::of(7), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      left   4 4 1 1
      left   4 4 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 4 1 1
      middle 4 4 3 1)");
  add("Trias_4^9", 4, {}, {}, DimClaim::of(5), DimClaim::of(6), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      left   4 4 1 1
      left   4 4 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      right  4 4 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1
      middle 4 4 1 1)");
  add("Trias_4^10", 4, {}, {}, DimClaim::of(5), DimClaim::of(5), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 4 1 1
      left   4 4 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  4 2 1 1
      right  4 2 3 1
      right  4 4 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1
      middle 4 4 1 1)");
  add("Trias_4^11", 4, {}, {}, DimClaim::of(5), DimClaim::of(5), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1)");
  add("Trias_4^12", 4, {}, {}, DimClaim::of(5), DimClaim::of(5), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      left   4 4 1 1
      left   4 4 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1)");
  add("Trias_4^13", 4, {}, {}, DimClaim::of(4), DimClaim::of(4), false, R"(
      left   2 1 4 1
      left   2 2 4 1
      left   3 3 4 1
      right  1 3 4 1
      right  2 2 4 1
      right  3 1 4 1
      middle 1 1 4 1
      middle 1 3 4 1
      middle 3 3 4 1)");
  add("Trias_4^14", 4, {}, {}, DimClaim::of(4), DimClaim::of(5), false, R"(
      left   2 2 1 1
      left   2 2 3 1
      left   2 4 1 1
      left   2 4 3 1
      left   4 2 1 1
      left   4 2 3 1
      left   4 4 1 1
      left   4 4 3 1
      right  2 2 1 1
      right  2 2 3 1
      right  2 4 1 1
      right  2 4 3 1
      right  4 2 1 1
      right  4 2 3 1
      right  4 4 3 1
      middle 2 2 1 1
      middle 2 2 3 1
      middle 2 4 1 1
      middle 2 4 3 1
      middle 4 2 1 1
      middle 4 2 3 1
      middle 4 4 1 1)");
  add("Trias_4^15", 4, {}, {}, DimClaim::of(4), DimClaim::of(1), false, R"(
      left   2 1 3 1
      left   2 2 3 1
      left   4 1 3 1
      left   4 2 3 1
      right  1 1 3 1
      right  1 4 3 1
      right  2 1 3 1
      right  2 4 3 1
      middle 2 1 3 1
      middle 2 2 3 1
      middle 4 1 3 1
      middle 4 4 3 1)");
  add("Trias_4^16", 4, {}, {}, DimClaim::of(5), DimClaim::of(5), false, R"(
      left   1 1 2 1
      left   1 1 4 1
      left   3 1 2 1
      left   3 1 4 1
      left   3 3 2 1
      left   3 3 4 1
      right  1 1 2 1
      right  1 1 4 1
      right  1 3 2 1
      right  1 3 4 1
      right  3 1 2 1
      right  3 1 4 1
      right  3 3 4 1
      middle 1 1 2 1
      middle 1 3 4 1
      middle 3 1 2 1
      middle 3 3 2 1
      middle 3 3 4 1)");

  return entries;
}

}  // namespace detail

/// All 36 classified entries in fixed order: dimension ascending, index
/// ascending.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry* find_entry(std::string_view id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

inline const CatalogEntry& catalog_entry(std::string_view id) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw PreconditionError("unknown catalog id: " + std::string(id));
  return *e;
}

/// Concrete algebra from an entry. `overrides` replaces parameter defaults;
/// unknown names and constraint violations are precondition errors.
inline Trialgebra instantiate(const CatalogEntry& entry,
                              const std::map<std::string, Rational>& overrides = {}) {
  std::map<std::string, Rational> binding;
  for (const ParamSpec& p : entry.params) binding[p.name] = p.default_value;
  for (const auto& [name, value] : overrides) {
    if (!binding.count(name))
      throw PreconditionError(entry.id + " has no parameter named '" + name + "'");
    binding[name] = value;
  }
  for (const ParamConstraint& c : entry.constraints)
    if (binding.at(c.param) == c.forbidden)
      throw PreconditionError(entry.id + " requires " + c.param +
                              " != " + format_rational(c.forbidden));

  Trialgebra t(entry.dim);
  t.name = entry.id;
  t.params = binding;
  for (const CatalogLine& line : entry.table) {
    const Rational value = line.param.empty() ? line.constant : line.constant * binding.at(line.param);
    t.tensor(line.product).at(line.i - 1, line.j - 1, line.k - 1) = value;
  }
  return t;
}

inline Trialgebra instantiate(std::string_view id, const std::map<std::string, Rational>& overrides = {}) {
  return instantiate(catalog_entry(id), overrides);
}

struct EntrySummary {
  std::string id;
  std::size_t dim = 0;
  std::vector<std::string> param_names;
  bool ambiguous_source = false;
};

inline std::vector<EntrySummary> list_entries() {
  std::vector<EntrySummary> out;
  for (const CatalogEntry& e : catalog()) {
    EntrySummary s;
    s.id = e.id;
    s.dim = e.dim;
    for (const ParamSpec& p : e.params) s.param_names.push_back(p.name);
    s.ambiguous_source = e.ambiguous_source;
    out.push_back(std::move(s));
  }
  return out;
}

/// Human-readable product table of an entry, one product per group, in the
/// layout `e_i • e_j = <combination>`.
inline std::vector<std::string> format_entry_table(const CatalogEntry& entry) {
  std::vector<std::string> out;
  for (Product p : kAllProducts) {
    for (std::size_t i = 1; i <= entry.dim; ++i)
      for (std::size_t j = 1; j <= entry.dim; ++j) {
        std::string combo;
        for (const CatalogLine& line : entry.table) {
          if (line.product != p || line.i != i || line.j != j) continue;
          std::string term;
          if (!line.param.empty())
            term = line.param + "*";
          else if (line.constant != 1)
            term = format_rational(line.constant) + "*";
          term += "e" + std::to_string(line.k);
          combo += combo.empty() ? term : " + " + term;
        }
        if (!combo.empty())
          out.push_back("e" + std::to_string(i) + " " + std::string(product_name(p)) + " e" +
                        std::to_string(j) + " = " + combo);
      }
  }
  return out;
}

}  // namespace trias
