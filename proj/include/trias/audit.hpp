#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trias/catalog.hpp"
#include "trias/centroids.hpp"
#include "trias/derivations.hpp"
#include "trias/fingerprint.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

/// Computed-versus-claimed record for one catalog entry. Match flags are
/// empty when the source table gives no usable claim.
struct EntryAuditRecord {
  std::string id;
  std::size_t dim = 0;
  std::map<std::string, Rational> params_used;
  bool axiom_pass = false;
  std::vector<AxiomViolation> violated_axioms;  // first witness per axiom
  std::size_t computed_der_dim = 0;
  DimClaim claimed_der_dim;
  std::optional<bool> der_match;
  std::size_t computed_centroid_dim = 0;
  DimClaim claimed_centroid_dim;
  std::optional<bool> centroid_match;
  Fingerprint fp;
  bool ambiguous_source = false;
};

struct ClaimTally {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t unreadable = 0;
  std::size_t unlisted = 0;
};

struct AuditSummary {
  std::size_t total = 0;
  std::size_t axiom_pass = 0;
  std::size_t axiom_fail = 0;
  ClaimTally derivations;
  ClaimTally centroids;
};

struct AuditReport {
  std::vector<EntryAuditRecord> entries;
  AuditSummary summary;
};

/// Per-entry parameter overrides, keyed by catalog id.
using ParamOverrides = std::map<std::string, std::map<std::string, Rational>>;

inline AuditReport run_audit(const ParamOverrides& overrides = {}) {
  AuditReport report;
  for (const CatalogEntry& entry : catalog()) {
    EntryAuditRecord rec;
    rec.id = entry.id;
    rec.dim = entry.dim;
    rec.ambiguous_source = entry.ambiguous_source;
    rec.claimed_der_dim = entry.claimed_der_dim;
    rec.claimed_centroid_dim = entry.claimed_centroid_dim;

    std::map<std::string, Rational> entry_overrides;
    if (auto it = overrides.find(entry.id); it != overrides.end()) entry_overrides = it->second;
    const Trialgebra t = instantiate(entry, entry_overrides);
    rec.params_used = t.params;

    const AxiomReport axioms = check_trialgebra(t);
    rec.axiom_pass = axioms.passed();
    rec.violated_axioms = axioms.first_witness_per_axiom();

    rec.computed_der_dim = derivation_basis(t).dim();
    rec.computed_centroid_dim = centroid_basis(t).dim();
    rec.fp = fingerprint(t);

    if (rec.claimed_der_dim.kind == ClaimKind::value)
      rec.der_match = rec.computed_der_dim == rec.claimed_der_dim.value;
    if (rec.claimed_centroid_dim.kind == ClaimKind::value)
      rec.centroid_match = rec.computed_centroid_dim == rec.claimed_centroid_dim.value;

    ++report.summary.total;
    (rec.axiom_pass ? report.summary.axiom_pass : report.summary.axiom_fail)++;
    const auto tally = [](ClaimTally& tally, const DimClaim& claim, const std::optional<bool>& match) {
      switch (claim.kind) {
        case ClaimKind::value: (*match ? tally.match : tally.mismatch)++; break;
        case ClaimKind::unreadable: ++tally.unreadable; break;
        case ClaimKind::absent: ++tally.unlisted; break;
      }
    };
    tally(report.summary.derivations, rec.claimed_der_dim, rec.der_match);
    tally(report.summary.centroids, rec.claimed_centroid_dim, rec.centroid_match);

    report.entries.push_back(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline nlohmann::ordered_json claim_to_json(const DimClaim& claim) {
  switch (claim.kind) {
    case ClaimKind::value: return claim.value;
    case ClaimKind::unreadable: return "unreadable";
    case ClaimKind::absent: return nullptr;
  }
  return nullptr;
}

inline nlohmann::ordered_json fingerprint_to_json(const Fingerprint& fp) {
  nlohmann::ordered_json j;
  j["dim"] = fp.dim;
  j["dim_der"] = fp.dim_der;
  j["dim_centroid"] = fp.dim_centroid;
  j["dim_square"] = fp.dim_square;
  j["dim_centralizer"] = fp.dim_centralizer;
  nlohmann::ordered_json lu, ru;
  for (std::size_t p = 0; p < kAllProducts.size(); ++p) {
    lu[std::string(product_name(kAllProducts[p]))] = fp.left_unital[p];
    ru[std::string(product_name(kAllProducts[p]))] = fp.right_unital[p];
  }
  j["left_unital"] = lu;
  j["right_unital"] = ru;
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json audit_to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "trias.audit/1";
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const EntryAuditRecord& rec : report.entries) {
    nlohmann::ordered_json e;
    e["id"] = rec.id;
    e["dim"] = rec.dim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.params_used) params[name] = format_rational(value);
    e["params"] = params;
    e["axiom_pass"] = rec.axiom_pass;
    nlohmann::ordered_json violated = nlohmann::ordered_json::array();
    for (const AxiomViolation& v : rec.violated_axioms) {
      nlohmann::ordered_json w;
      w["axiom"] = v.axiom;
      w["witness"] = {v.triple[0], v.triple[1], v.triple[2]};
      violated.push_back(w);
    }
    e["violated_axioms"] = violated;
    e["computed_der_dim"] = rec.computed_der_dim;
    e["claimed_der_dim"] = detail::claim_to_json(rec.claimed_der_dim);
    e["der_match"] = rec.der_match ? nlohmann::ordered_json(*rec.der_match)
                                   : nlohmann::ordered_json(nullptr);
    e["computed_centroid_dim"] = rec.computed_centroid_dim;
    e["claimed_centroid_dim"] = detail::claim_to_json(rec.claimed_centroid_dim);
    e["centroid_match"] = rec.centroid_match ? nlohmann::ordered_json(*rec.centroid_match)
                                             : nlohmann::ordered_json(nullptr);
    e["ambiguous_source"] = rec.ambiguous_source;
    e["fingerprint"] = detail::fingerprint_to_json(rec.fp);
    entries.push_back(e);
  }
  j["entries"] = entries;
  nlohmann::ordered_json summary;
  summary["total"] = report.summary.total;
  summary["axiom_pass"] = report.summary.axiom_pass;
  summary["axiom_fail"] = report.summary.axiom_fail;
  const auto tally_json = [](const ClaimTally& t) {
    nlohmann::ordered_json j2;
    j2["match"] = t.match;
    j2["mismatch"] = t.mismatch;
    j2["unreadable"] = t.unreadable;
    j2["unlisted"] = t.unlisted;
    return j2;
  };
  summary["derivations"] = tally_json(report.summary.derivations);
  summary["centroids"] = tally_json(report.summary.centroids);
  j["summary"] = summary;
  return j;
}

/// Canonical byte representation used for golden-file comparison.
inline std::string audit_json_text(const AuditReport& report) {
  return audit_to_json(report).dump(2) + "\n";
}

inline void write_audit_table(std::ostream& os, const AuditReport& report) {
  os << "id            dim  axioms  der (computed/claimed)  centroid (computed/claimed)\n";
  const auto claim_text = [](const DimClaim& c) -> std::string {
    switch (c.kind) {
      case ClaimKind::value: return std::to_string(c.value);
      case ClaimKind::unreadable: return "unreadable";
      case ClaimKind::absent: return "-";
    }
    return "-";
  };
  const auto match_text = [](const std::optional<bool>& m) {
    return !m ? "" : (*m ? "  ok" : "  MISMATCH");
  };
  for (const EntryAuditRecord& rec : report.entries) {
    os << rec.id;
    for (std::size_t pad = rec.id.size(); pad < 14; ++pad) os << ' ';
    os << rec.dim << "    " << (rec.axiom_pass ? "pass" : "FAIL") << "    " << rec.computed_der_dim
       << "/" << claim_text(rec.claimed_der_dim) << match_text(rec.der_match) << "    "
       << rec.computed_centroid_dim << "/" << claim_text(rec.claimed_centroid_dim)
       << match_text(rec.centroid_match);
    if (!rec.violated_axioms.empty()) {
      os << "    violated:";
      for (const AxiomViolation& v : rec.violated_axioms)
        os << " " << v.axiom << "(" << v.triple[0] << "," << v.triple[1] << "," << v.triple[2] << ")";
    }
    if (rec.ambiguous_source) os << "    [ambiguous source]";
    os << "\n";
  }
  os << "total " << report.summary.total << ", axioms pass " << report.summary.axiom_pass << ", fail "
     << report.summary.axiom_fail << "; der match " << report.summary.derivations.match
     << ", mismatch " << report.summary.derivations.mismatch << ", unreadable "
     << report.summary.derivations.unreadable << ", unlisted " << report.summary.derivations.unlisted
     << "; centroid match " << report.summary.centroids.match << ", mismatch "
     << report.summary.centroids.mismatch << "\n";
}

}  // namespace trias
