// Command-line front door: parse .trias / .mat files, run the exact solvers,
// print tables or --json machine output.
//
// Exit codes: 0 success (including "algebra fails axioms" reports),
// 1 usage error, 2 file parse error, 3 precondition/constraint error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trias/trias.hpp"

namespace {

using nlohmann::ordered_json;
using namespace trias;

Trialgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return parse_trialgebra(in, path);
}

EndoMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return parse_endo_matrix(in, path);
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto value = try_parse_rational(text);
  if (!value) throw CLI::ValidationError(what, "'" + text + "' is not a rational literal");
  return *value;
}

ordered_json matrix_json(const EndoMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(format_rational(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json vector_json(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& x : v) out.push_back(format_rational(x));
  return out;
}

void print_matrix(std::ostream& os, const EndoMatrix& m, const std::string& indent = "  ") {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) os << " ";
      os << m.at(r, c);
    }
    os << "\n";
  }
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string algebra_label(const Trialgebra& t) {
  return (t.name.empty() ? std::string("<unnamed>") : t.name) + " (dim " + std::to_string(t.dim) + ")";
}

// --- subcommand bodies ------------------------------------------------------

int cmd_verify(const std::string& path, bool dialgebra_only, bool json) {
  const Trialgebra t = load_algebra(path);
  const AxiomReport report = dialgebra_only ? check_dialgebra(t) : check_trialgebra(t);
  const std::size_t violated = report.first_witness_per_axiom().size();
  const std::size_t held = report.checked.size() - violated;
  if (json) {
    ordered_json j;
    j["schema"] = "trias.verify/1";
    j["name"] = t.name;
    j["dim"] = t.dim;
    j["checked"] = report.checked;
    j["pass"] = report.passed();
    ordered_json violations = ordered_json::array();
    for (const AxiomViolation& v : report.violations) {
      ordered_json w;
      w["axiom"] = v.axiom;
      w["triple"] = {v.triple[0], v.triple[1], v.triple[2]};
      w["lhs"] = vector_json(v.lhs);
      w["rhs"] = vector_json(v.rhs);
      violations.push_back(w);
    }
    j["violations"] = violations;
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  std::cout << held << "/" << report.checked.size() << " axioms hold\n";
  for (const AxiomViolation& v : report.first_witness_per_axiom())
    std::cout << "violated: " << v.axiom << " at (e" << v.triple[0] << ", e" << v.triple[1] << ", e"
              << v.triple[2] << "): lhs = " << format_combination(v.lhs)
              << ", rhs = " << format_combination(v.rhs) << "\n";
  if (!report.violations.empty())
    std::cout << "violating (axiom, triple) pairs: " << report.violations.size() << "\n";
  return 0;
}

void print_endo_subspace(const std::string& title, const EndoSubspace& space) {
  std::cout << "dim " << title << " = " << space.dim() << "\n";
  std::size_t index = 1;
  for (const EndoMatrix& b : space.basis()) {
    std::cout << "basis " << index++ << ":\n";
    print_matrix(std::cout, b);
  }
}

ordered_json endo_subspace_json(const EndoSubspace& space) {
  ordered_json basis = ordered_json::array();
  for (const EndoMatrix& b : space.basis()) basis.push_back(matrix_json(b));
  return basis;
}

int cmd_der(const std::string& path, bool json) {
  const Trialgebra t = load_algebra(path);
  const EndoSubspace der = derivation_basis(t);
  if (json) {
    ordered_json j;
    j["schema"] = "trias.der/1";
    j["name"] = t.name;
    j["dim"] = t.dim;
    j["dim_der"] = der.dim();
    j["basis"] = endo_subspace_json(der);
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  print_endo_subspace("Der", der);
  return 0;
}

int cmd_cent(const std::string& path, bool json) {
  const Trialgebra t = load_algebra(path);
  const EndoSubspace gamma = centroid_basis(t);
  std::array<std::size_t, 3> per_product{};
  for (std::size_t p = 0; p < kAllProducts.size(); ++p)
    per_product[p] = product_centroid_basis(t, kAllProducts[p]).dim();
  if (json) {
    ordered_json j;
    j["schema"] = "trias.cent/1";
    j["name"] = t.name;
    j["dim"] = t.dim;
    for (std::size_t p = 0; p < kAllProducts.size(); ++p)
      j["dim_centroid_" + std::string(product_name(kAllProducts[p]))] = per_product[p];
    j["dim_centroid"] = gamma.dim();
    j["basis"] = endo_subspace_json(gamma);
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  for (std::size_t p = 0; p < kAllProducts.size(); ++p)
    std::cout << "dim centroid(" << product_name(kAllProducts[p]) << ") = " << per_product[p] << "\n";
  print_endo_subspace("centroid", gamma);
  return 0;
}

int cmd_centralizer(const std::string& path, bool json) {
  const Trialgebra t = load_algebra(path);
  const Subspace z = centralizer(t);
  if (json) {
    ordered_json j;
    j["schema"] = "trias.centralizer/1";
    j["name"] = t.name;
    j["dim"] = t.dim;
    j["dim_centralizer"] = z.dim();
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < z.dim(); ++i) basis.push_back(vector_json(z.basis_vector(i)));
    j["basis"] = basis;
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  std::cout << "dim Z = " << z.dim() << "\n";
  for (std::size_t i = 0; i < z.dim(); ++i)
    std::cout << "basis " << i + 1 << ": " << format_combination(z.basis_vector(i)) << "\n";
  return 0;
}

int cmd_star(const std::string& path, bool json) {
  const Trialgebra t = load_algebra(path);
  const StructureTensor star = star_product(t);
  const auto failure = find_associativity_failure(star);
  if (json) {
    ordered_json j;
    j["schema"] = "trias.star/1";
    j["name"] = t.name;
    j["dim"] = t.dim;
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j2 = 0; j2 < t.dim; ++j2)
        for (std::size_t k = 0; k < t.dim; ++k)
          if (star.at(i, j2, k) != 0)
            entries.push_back({i + 1, j2 + 1, k + 1, format_rational(star.at(i, j2, k))});
    j["entries"] = entries;
    j["associative"] = !failure.has_value();
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  bool any = false;
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) {
      const std::vector<Rational> value = star.basis_product(i, j);
      if (is_zero_vector(value)) continue;
      any = true;
      std::cout << "e" << i + 1 << " * e" << j + 1 << " = " << format_combination(value) << "\n";
    }
  if (!any) std::cout << "star product is zero\n";
  std::cout << "associative: " << (failure ? "no" : "yes") << "\n";
  if (failure)
    std::cout << "first failure at (e" << failure->i << ", e" << failure->j << ", e" << failure->k
              << ")\n";
  return 0;
}

int cmd_fingerprint(const std::string& path, bool json) {
  const Trialgebra t = load_algebra(path);
  const Fingerprint fp = fingerprint(t);
  if (json) {
    ordered_json j;
    j["schema"] = "trias.fingerprint/1";
    j["name"] = t.name;
    ordered_json f;
    f["dim"] = fp.dim;
    f["dim_der"] = fp.dim_der;
    f["dim_centroid"] = fp.dim_centroid;
    f["dim_square"] = fp.dim_square;
    f["dim_centralizer"] = fp.dim_centralizer;
    for (std::size_t p = 0; p < kAllProducts.size(); ++p) {
      f["left_unital_" + std::string(product_name(kAllProducts[p]))] = fp.left_unital[p];
      f["right_unital_" + std::string(product_name(kAllProducts[p]))] = fp.right_unital[p];
    }
    j["fingerprint"] = f;
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  std::cout << "dim            = " << fp.dim << "\n";
  std::cout << "dim Der        = " << fp.dim_der << "\n";
  std::cout << "dim centroid   = " << fp.dim_centroid << "\n";
  std::cout << "dim T^2        = " << fp.dim_square << "\n";
  std::cout << "dim Z          = " << fp.dim_centralizer << "\n";
  for (std::size_t p = 0; p < kAllProducts.size(); ++p)
    std::cout << "unital(" << product_name(kAllProducts[p]) << ")  left: "
              << (fp.left_unital[p] ? "yes" : "no")
              << "  right: " << (fp.right_unital[p] ? "yes" : "no") << "\n";
  return 0;
}

int cmd_rb_check(const std::string& path, const std::string& matrix_path, const std::string& weight_text,
                 const std::string& formula_name, bool json) {
  const Trialgebra t = load_algebra(path);
  const EndoMatrix r = load_matrix(matrix_path);
  const Rational weight = parse_rational_arg(weight_text, "--weight");
  if (r.dim() != t.dim)
    throw PreconditionError("operator dimension " + std::to_string(r.dim()) +
                            " does not match algebra dimension " + std::to_string(t.dim));
  const InducedFormula formula =
      formula_name == "standard" ? InducedFormula::standard : InducedFormula::paper;

  const RotaBaxterCheck check = is_rota_baxter(t, r, weight);
  std::string induced_kind = "none";
  bool induced_pass = false;
  std::size_t wi = 0, wj = 0, wk = 0;
  if (weight == 0) {
    induced_kind = "left-symmetric";
    const StructureTensor prod = induced_product_weight0(t, r, weight);
    const auto failure = find_left_symmetry_failure(prod);
    induced_pass = !failure.has_value();
    if (failure) wi = failure->i, wj = failure->j, wk = failure->k;
  } else if (weight == -1) {
    induced_kind = "associative";
    const StructureTensor prod = induced_product_weight_minus1(t, r, weight, formula);
    const auto failure = find_associativity_failure(prod);
    induced_pass = !failure.has_value();
    if (failure) wi = failure->i, wj = failure->j, wk = failure->k;
  }

  if (json) {
    ordered_json j;
    j["schema"] = "trias.rb-check/1";
    j["name"] = t.name;
    j["weight"] = format_rational(weight);
    j["rota_baxter"] = check.ok;
    if (!check.ok && check.counterexample)
      j["counterexample"] = {check.counterexample->i, check.counterexample->j};
    j["formula"] = formula == InducedFormula::standard ? "standard" : "paper";
    j["induced_check"] = induced_kind;
    j["induced_pass"] = induced_kind == "none" ? ordered_json(nullptr) : ordered_json(induced_pass);
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  std::cout << "weight: " << weight << "\n";
  std::cout << "Rota-Baxter: " << (check.ok ? "yes" : "no") << "\n";
  if (!check.ok && check.counterexample)
    std::cout << "counterexample pair: (e" << check.counterexample->i << ", e"
              << check.counterexample->j
              << "), lhs = " << format_combination(check.counterexample->lhs)
              << ", rhs = " << format_combination(check.counterexample->rhs) << "\n";
  if (induced_kind == "none") {
    std::cout << "no induced-product audit for weight " << weight << "\n";
  } else {
    std::cout << "induced product " << induced_kind << " ("
              << (formula == InducedFormula::standard ? "standard" : "paper")
              << " formula): " << (induced_pass ? "yes" : "no") << "\n";
    if (!induced_pass)
      std::cout << "first failure at (e" << wi << ", e" << wj << ", e" << wk << ")\n";
  }
  return 0;
}

int cmd_rb_search(const std::string& path, const std::string& weight_text, const std::string& entries_text,
                  std::size_t limit, bool json) {
  const Trialgebra t = load_algebra(path);
  const Rational weight = parse_rational_arg(weight_text, "--weight");
  std::vector<Rational> entry_set;
  std::stringstream ss(entries_text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) entry_set.push_back(parse_rational_arg(item, "--entries"));
  if (entry_set.empty()) throw CLI::ValidationError("--entries", "needs at least one rational");

  const GridSearchResult result = grid_search_rota_baxter(t, weight, entry_set, limit);
  if (json) {
    ordered_json j;
    j["schema"] = "trias.rb-search/1";
    j["name"] = t.name;
    j["weight"] = format_rational(weight);
    j["examined"] = result.examined;
    j["complete"] = result.complete;
    ordered_json found = ordered_json::array();
    for (const EndoMatrix& m : result.found) found.push_back(matrix_json(m));
    j["found"] = found;
    emit(j);
    return 0;
  }
  std::cout << "algebra: " << algebra_label(t) << "\n";
  std::cout << "examined " << result.examined << " candidates ("
            << (result.complete ? "complete" : "aborted at limit, partial results") << ")\n";
  std::cout << "found " << result.found.size() << " Rota-Baxter operators of weight " << weight
            << "\n";
  std::size_t index = 1;
  for (const EndoMatrix& m : result.found) {
    std::cout << "operator " << index++ << ":\n";
    print_matrix(std::cout, m);
  }
  return 0;
}

int cmd_hom_check(const std::string& src_path, const std::string& dst_path,
                  const std::string& matrix_path, bool json) {
  const Trialgebra src = load_algebra(src_path);
  const Trialgebra dst = load_algebra(dst_path);
  std::ifstream in(matrix_path);
  if (!in) throw ParseError(matrix_path, 0, 0, "cannot open file");
  // Homomorphism matrices may be rectangular; reuse the square parser only
  // when shapes agree, otherwise read the generic grid.
  const EndoMatrix f_square = parse_endo_matrix(in, matrix_path);
  if (f_square.dim() != dst.dim || f_square.dim() != src.dim)
    throw PreconditionError("hom-check currently requires src.dim == dst.dim == matrix dim");
  const HomCheckResult result = check_homomorphism(src, dst, f_square.matrix());
  if (json) {
    ordered_json j;
    j["schema"] = "trias.hom-check/1";
    j["src"] = src.name;
    j["dst"] = dst.name;
    j["homomorphism"] = result.ok;
    if (!result.ok && result.counterexample) {
      j["counterexample_product"] = std::string(product_name(result.counterexample->product));
      j["counterexample_pair"] = {result.counterexample->i, result.counterexample->j};
    }
    emit(j);
    return 0;
  }
  std::cout << "homomorphism: " << (result.ok ? "yes" : "no") << "\n";
  if (!result.ok && result.counterexample)
    std::cout << "counterexample: product " << product_name(result.counterexample->product) << " at (e"
              << result.counterexample->i << ", e" << result.counterexample->j
              << "): f(x•y) = " << format_combination(result.counterexample->lhs)
              << ", f(x)•f(y) = " << format_combination(result.counterexample->rhs) << "\n";
  return 0;
}

std::string export_file_name(const std::string& id) {
  std::string name = id;
  for (char& ch : name)
    if (ch == '^') ch = '_';
  return name + ".trias";
}

int cmd_catalog_list(bool json) {
  const auto entries = list_entries();
  if (json) {
    ordered_json j;
    j["schema"] = "trias.catalog-list/1";
    ordered_json list = ordered_json::array();
    for (const EntrySummary& e : entries) {
      ordered_json rec;
      rec["id"] = e.id;
      rec["dim"] = e.dim;
      rec["params"] = e.param_names;
      rec["ambiguous_source"] = e.ambiguous_source;
      list.push_back(rec);
    }
    j["entries"] = list;
    j["total"] = entries.size();
    emit(j);
    return 0;
  }
  for (const EntrySummary& e : entries) {
    std::cout << e.id << "  dim " << e.dim;
    if (!e.param_names.empty()) {
      std::cout << "  params:";
      for (const std::string& p : e.param_names) std::cout << " " << p;
    }
    if (e.ambiguous_source) std::cout << "  [ambiguous source]";
    std::cout << "\n";
  }
  std::cout << "total: " << entries.size() << "\n";
  return 0;
}

int cmd_catalog_show(const std::string& id, bool json) {
  const CatalogEntry& entry = catalog_entry(id);
  const auto claim_text = [](const DimClaim& c) -> std::string {
    switch (c.kind) {
      case ClaimKind::value: return std::to_string(c.value);
      case ClaimKind::unreadable: return "unreadable";
      case ClaimKind::absent: return "(not listed)";
    }
    return "";
  };
  if (json) {
    ordered_json j;
    j["schema"] = "trias.catalog-show/1";
    j["id"] = entry.id;
    j["dim"] = entry.dim;
    ordered_json params = ordered_json::object();
    for (const ParamSpec& p : entry.params) params[p.name] = format_rational(p.default_value);
    j["param_defaults"] = params;
    ordered_json constraints = ordered_json::array();
    for (const ParamConstraint& c : entry.constraints)
      constraints.push_back(c.param + " != " + format_rational(c.forbidden));
    j["param_constraints"] = constraints;
    j["claimed_der_dim"] = trias::detail::claim_to_json(entry.claimed_der_dim);
    j["claimed_centroid_dim"] = trias::detail::claim_to_json(entry.claimed_centroid_dim);
    j["ambiguous_source"] = entry.ambiguous_source;
    j["table"] = format_entry_table(entry);
    emit(j);
    return 0;
  }
  std::cout << entry.id << "  dim " << entry.dim << "\n";
  for (const ParamSpec& p : entry.params)
    std::cout << "param " << p.name << " (default " << p.default_value << ")\n";
  for (const ParamConstraint& c : entry.constraints)
    std::cout << "constraint: " << c.param << " != " << c.forbidden << "\n";
  for (const std::string& line : format_entry_table(entry)) std::cout << "  " << line << "\n";
  std::cout << "claimed dim Der = " << claim_text(entry.claimed_der_dim) << "\n";
  std::cout << "claimed dim centroid = " << claim_text(entry.claimed_centroid_dim) << "\n";
  if (entry.ambiguous_source) std::cout << "flag: ambiguous source table\n";
  return 0;
}

int cmd_catalog_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::size_t count = 0;
  for (const CatalogEntry& entry : catalog()) {
    const Trialgebra t = instantiate(entry);
    const std::filesystem::path path = std::filesystem::path(dir) / export_file_name(entry.id);
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path.string());
    write_trialgebra(out, t);
    ++count;
  }
  std::cout << "exported " << count << " entries to " << dir << "\n";
  return 0;
}

ParamOverrides parse_param_overrides(const std::vector<std::string>& specs) {
  // Each spec is "<id>:<name>=<rational>".
  ParamOverrides overrides;
  for (const std::string& spec : specs) {
    const std::size_t colon = spec.rfind(':');
    const std::size_t eq = spec.find('=', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw CLI::ValidationError("--param", "expected <id>:<name>=<rational>, got '" + spec + "'");
    const std::string id = spec.substr(0, colon);
    const std::string name = spec.substr(colon + 1, eq - colon - 1);
    overrides[id][name] = parse_rational_arg(spec.substr(eq + 1), "--param");
  }
  return overrides;
}

int cmd_audit(const std::vector<std::string>& param_specs, const std::string& out_path, bool json) {
  const AuditReport report = run_audit(parse_param_overrides(param_specs));
  const std::string text = audit_json_text(report);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + out_path);
    out << text;
  }
  if (json)
    std::cout << text;
  else
    write_audit_table(std::cout, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for associative trialgebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string file, file2, matrix_path, weight_text = "0", formula = "paper", entries_text = "-1,0,1";
  std::string out_path, show_id, export_dir;
  std::vector<std::string> param_specs;
  std::size_t limit = 1000000;
  bool dialgebra_only = false;

  CLI::App* verify = app.add_subcommand("verify", "check the trialgebra axioms on a .trias file");
  verify->add_option("file", file, "algebra file")->required();
  verify->add_flag("--dialgebra", dialgebra_only, "check only the five dialgebra axioms");

  CLI::App* der = app.add_subcommand("der", "derivation algebra basis");
  der->add_option("file", file, "algebra file")->required();

  CLI::App* cent = app.add_subcommand("cent", "centroid basis and per-product dimensions");
  cent->add_option("file", file, "algebra file")->required();

  CLI::App* centralizer_cmd = app.add_subcommand("centralizer", "two-sided annihilator Z(T)");
  centralizer_cmd->add_option("file", file, "algebra file")->required();

  CLI::App* star = app.add_subcommand("star", "induced star product and associativity audit");
  star->add_option("file", file, "algebra file")->required();

  CLI::App* fingerprint_cmd = app.add_subcommand("fingerprint", "isomorphism-invariant summary");
  fingerprint_cmd->add_option("file", file, "algebra file")->required();

  CLI::App* rb_check = app.add_subcommand("rb-check", "verify a Rota-Baxter operator");
  rb_check->add_option("file", file, "algebra file")->required();
  rb_check->add_option("--matrix", matrix_path, "operator .mat file")->required();
  rb_check->add_option("--weight", weight_text, "rational weight")->required();
  rb_check->add_option("--formula", formula, "induced-product formula at weight -1")
      ->check(CLI::IsMember({"paper", "standard"}));

  CLI::App* rb_search = app.add_subcommand("rb-search", "grid search for Rota-Baxter operators");
  rb_search->add_option("file", file, "algebra file")->required();
  rb_search->add_option("--weight", weight_text, "rational weight")->required();
  rb_search->add_option("--entries", entries_text, "comma-separated entry set (default -1,0,1)");
  rb_search->add_option("--limit", limit, "candidate limit before aborting");

  CLI::App* hom_check = app.add_subcommand("hom-check", "check a map between two algebras");
  hom_check->add_option("src", file, "source algebra file")->required();
  hom_check->add_option("dst", file2, "target algebra file")->required();
  hom_check->add_option("--matrix", matrix_path, "map .mat file")->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in classification catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "list all entries");
  CLI::App* show = catalog_cmd->add_subcommand("show", "show one entry");
  show->add_option("id", show_id, "entry id, e.g. Trias_2^6")->required();
  CLI::App* export_cmd = catalog_cmd->add_subcommand("export", "write every entry as a .trias file");
  export_cmd->add_option("dir", export_dir, "output directory")->required();

  CLI::App* audit = app.add_subcommand("audit", "full catalog audit against the recorded claims");
  audit->add_option("--param", param_specs, "override, format <id>:<name>=<rational>");
  audit->add_option("--out", out_path, "write the JSON report to a file");

  // Let the global --json flag appear after the subcommand name as well.
  const auto all = [](const CLI::App*) { return true; };
  for (CLI::App* sub : app.get_subcommands(all)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(all)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*verify) return cmd_verify(file, dialgebra_only, json);
    if (*der) return cmd_der(file, json);
    if (*cent) return cmd_cent(file, json);
    if (*centralizer_cmd) return cmd_centralizer(file, json);
    if (*star) return cmd_star(file, json);
    if (*fingerprint_cmd) return cmd_fingerprint(file, json);
    if (*rb_check) return cmd_rb_check(file, matrix_path, weight_text, formula, json);
    if (*rb_search) return cmd_rb_search(file, weight_text, entries_text, limit, json);
    if (*hom_check) return cmd_hom_check(file, file2, matrix_path, json);
    if (*catalog_cmd) {
      if (catalog_cmd->get_subcommand("list")->parsed()) return cmd_catalog_list(json);
      if (catalog_cmd->get_subcommand("show")->parsed()) return cmd_catalog_show(show_id, json);
      if (catalog_cmd->get_subcommand("export")->parsed()) return cmd_catalog_export(export_dir);
    }
    if (*audit) return cmd_audit(param_specs, out_path, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
