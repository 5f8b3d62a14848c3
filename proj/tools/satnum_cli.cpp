// Command-line front end: exact, verify, construct, audit, lemmas, table.
//
// Exit codes: 0 success, 2 usage or parse error, 3 refused precondition,
// 4 a proven statement failed on the input (or a table excursion).

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satnum/satnum.hpp"

using namespace satnum;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitViolation = 4;

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw InputError("");
      return {v, v};
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw InputError("");
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw InputError("");
    if (lo > hi) throw InputError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw InputError("bad range '" + text + "' (expected N or A..B)");
  }
}

// Rows of strings rendered as aligned text, CSV or JSON objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  void print(std::ostream& out, const std::string& format, const json& meta) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_field(header[i]);
      out << "\r\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
        out << "\r\n";
      }
    } else if (format == "json") {
      json j = meta;
      j["rows"] = json::array();
      for (const auto& r : rows) {
        json o;
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
        j["rows"].push_back(o);
      }
      out << j.dump(2) << "\n";
    } else {
      std::vector<std::size_t> w(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      out << "# satnum " << kToolkitVersion;
      for (auto& [k, v] : meta.items()) if (k != "version") out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      out << "\n";
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        out << "\n";
      };
      line(header);
      std::vector<std::string> rule;
      for (auto x : w) rule.push_back(std::string(x, '-'));
      line(rule);
      for (const auto& r : rows) line(r);
    }
  }
};

Graph read_graph_from(const std::string& path) {
  if (path.empty() || path == "-") return read_graph_auto(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph_auto(in);
}

std::string graph_json(const Graph& g) {
  json j{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"edges", json::array()}};
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "graph6") {
    out << to_graph6(g) << "\n";
  } else if (format == "edges") {
    out << to_edge_list(g);
  } else if (format == "dot") {
    out << violations_to_dot(g, {});
  } else if (format == "json") {
    out << graph_json(g) << "\n";
  } else {
    throw InputError("unknown graph format '" + format + "'");
  }
}

std::string formula_cell(const std::optional<FormulaValue>& fv) {
  if (!fv) return "";
  switch (fv->kind) {
    case FormulaValue::Kind::exact:
      return std::to_string(fv->value);
    case FormulaValue::Kind::bounds: {
      auto [lo, hi] = fv->integer_window();
      return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
    case FormulaValue::Kind::slope:
      return "slope " + to_string(fv->slope);
  }
  return "";
}

json meta_for(const std::string& command, const std::string& pattern, std::uint64_t seed) {
  return {{"command", command}, {"pattern", pattern}, {"seed", seed}, {"version", kToolkitVersion}};
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  return &file;
}

// ---------------------------------------------------------------------------

struct ExactOptions {
  std::string pattern, range, format = "text";
  double seconds = 300;
  long long nodes = 100'000'000;
  bool structural_filter = false;
};

int cmd_exact(const ExactOptions& o) {
  Pattern f = parse_pattern(o.pattern);
  auto [lo, hi] = parse_range(o.range);
  Table t{{"n", "sat", "lower", "upper", "exact", "method", "formula", "agrees", "nodes", "witness"}, {}};
  int code = kExitOk;
  for (int n = lo; n <= hi; ++n) {
    SearchBudget b;
    b.max_seconds = o.seconds;
    b.max_nodes = o.nodes;
    b.structural_filter = o.structural_filter;
    SatRecord r = sat_exact(n, f, b);
    auto fv = known_formula(n, f);
    std::string agrees;
    if (r.exact && fv && fv->kind != FormulaValue::Kind::slope) {
      agrees = fv->admits(r.upper) ? "yes" : "no";
      if (agrees == "no") code = kExitViolation;
    }
    t.rows.push_back({std::to_string(n), r.exact ? std::to_string(r.upper) : "", std::to_string(r.lower),
                      std::to_string(r.upper), r.exact ? "yes" : (r.budget_exhausted ? "budget" : "no"), r.method,
                      formula_cell(fv), agrees, std::to_string(r.nodes), r.witness ? to_graph6(*r.witness) : ""});
  }
  t.print(std::cout, o.format, meta_for("exact", f.name(), 0));
  return code;
}

struct VerifyOptions {
  std::string pattern, input = "-", format = "text";
  bool witnesses = false;
};

int cmd_verify(const VerifyOptions& o) {
  Pattern f = parse_pattern(o.pattern);
  Graph g = read_graph_from(o.input);
  auto cert = verify_saturated(g, f, o.witnesses);
  if (o.format == "json") {
    json j = meta_for("verify", f.name(), 0);
    j["n"] = g.order();
    j["edges"] = g.size();
    j["certificate"] = to_json(cert);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(cert.status) << ", " << g.size() << " edges";
    if (cert.pair) std::cout << ", pair " << cert.pair->first << " " << cert.pair->second;
    if (cert.embedding) std::cout << ", copy at " << to_json(*cert.embedding).dump();
    std::cout << "\n";
  }
  return kExitOk;
}

struct ConstructOptions {
  std::string kind, pattern, format = "graph6";
  int n = 0, s = 0;
  std::uint64_t seed = 0;
};

int cmd_construct(const ConstructOptions& o) {
  Graph g;
  if (o.kind == "ehm") {
    if (o.s == 0 && !o.pattern.empty()) {
      Pattern f = parse_pattern(o.pattern);
      if (!f.is_complete()) throw InputError("ehm needs a complete pattern or --s");
      g = ehm_graph(o.n, f.order());
    } else {
      g = ehm_graph(o.n, o.s);
    }
  } else if (o.kind == "kt") {
    auto c = kt_construction(o.n, parse_pattern(o.pattern));
    if (!c) throw PreconditionError("the independent-set seed already contains the pattern");
    std::cerr << "bound " << to_string(c->bound) << ", " << c->graph.size() << " edges, "
              << (c->within_bound ? "within" : "above") << " bound\n";
    g = c->graph;
  } else if (o.kind == "greedy") {
    g = greedy_saturate(Graph(o.n), parse_pattern(o.pattern), PairOrder::random(o.seed));
  } else if (o.kind == "paths") {
    Pattern f = parse_pattern(o.pattern);
    if (!f.is_cycle()) throw InputError("paths construction needs a cycle pattern");
    auto inst = long_path_instance(o.n, f.cycle_length(), o.seed);
    if (!inst) throw PreconditionError("no parallel-path split fits n = " + std::to_string(o.n));
    g = *inst;
  } else if (o.kind == "best") {
    UpperSearchOptions opt;
    opt.seed = o.seed;
    auto ub = best_upper_bound(o.n, parse_pattern(o.pattern), opt);
    std::cerr << "strategy " << ub.strategy << ", " << ub.edges() << " edges\n";
    g = ub.graph;
  } else {
    throw InputError("unknown construction '" + o.kind + "'");
  }
  write_graph(std::cout, g, o.format);
  return kExitOk;
}

struct AuditOptions {
  std::string pattern, range, input, format = "json", output, order = "lex", construction = "auto";
  std::uint64_t seed = 0;
  bool assume_saturated = false, allow_small_ell = false, contract = false;
};

Graph audit_instance(const AuditOptions& o, const Pattern& f, int n) {
  if (!o.input.empty()) return read_graph_from(o.input);
  if (o.range.empty()) throw InputError("audit needs --n or --input");
  if (f.is_cycle() && o.construction != "greedy") {
    if (auto g = long_path_instance(n, f.cycle_length(), o.seed)) return *g;
    if (o.construction == "paths") throw PreconditionError("no parallel-path split fits n = " + std::to_string(n));
  }
  return greedy_saturate(Graph(n), f, PairOrder::random(o.seed));
}

int audit_multipartite(const AuditOptions& o, const Pattern& f) {
  PartSizes parts(f.part_sizes());
  std::vector<int> ns;
  if (!o.input.empty()) {
    ns.push_back(-1);
  } else {
    auto [lo, hi] = parse_range(o.range);
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
  }
  int code = kExitOk;
  Table t{{"n", "edges", "A", "M", "N", "X", "Y", "Z", "D", "y_margin", "edge_margin", "passed"}, {}};
  json all = meta_for("audit", f.name(), o.seed);
  all["ledgers"] = json::array();
  for (int n : ns) {
    Graph g = audit_instance(o, f, n);
    auto L = theorem11_audit(g, parts, o.assume_saturated);
    if (!L.passed()) code = kExitViolation;
    std::string row = csv_row(L, g.order());
    std::vector<std::string> cells;
    std::stringstream ss(row);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    while (cells.size() < t.header.size()) cells.push_back("");
    t.rows.push_back(cells);
    json j = to_json(L);
    j["n"] = g.order();
    all["ledgers"].push_back(j);
  }
  std::ofstream file;
  std::ostream* out = open_output(o.output, file);
  if (o.format == "json")
    *out << all.dump(2) << "\n";
  else
    t.print(*out, o.format, meta_for("audit", f.name(), o.seed));
  return code;
}

int cmd_audit(const AuditOptions& o) {
  Pattern f = parse_pattern(o.pattern);
  if (f.is_multipartite()) return audit_multipartite(o, f);
  if (!f.is_cycle() || f.cycle_length() % 2 != 0 || f.cycle_length() < 6)
    throw InputError("audit needs an even cycle C_{2l} with l >= 3, or a complete multipartite pattern");
  const auto p = DischargeParams::make(f.cycle_length() / 2, o.allow_small_ell);
  int n = 0;
  if (!o.range.empty()) {
    auto [lo, hi] = parse_range(o.range);
    if (lo != hi) throw InputError("cycle audits take a single n");
    n = lo;
  }
  const auto start = std::chrono::steady_clock::now();
  Graph g = audit_instance(o, f, n);
  if (!o.assume_saturated) {
    auto cert = verify_saturated(g, f);
    if (!cert.saturated())
      throw PreconditionError("graph is not " + f.name() + "-saturated (" + to_string(cert.status) +
                              "); pass --assume-saturated to audit anyway");
  }
  json contraction;
  if (o.contract) {
    auto r = path_contraction_reduce(g, p, !o.assume_saturated);
    contraction = {{"removed_paths", r.removed_paths}, {"order_before", g.order()}, {"order_after", r.graph.order()},
                   {"excess", to_string(r.excess_before)}};
    g = r.graph;
  }
  std::vector<Vertex> order;
  if (o.order == "peripheral")
    order = peripheral_order(g);
  else if (o.order != "lex")
    throw InputError("unknown order '" + o.order + "' (lex or peripheral)");
  AuditReport R = audit(build_partition(g, p, order));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  std::ostream* out = open_output(o.output, file);
  if (o.format == "json") {
    json j = meta_for("audit", f.name(), o.seed);
    j["n"] = g.order();
    j["graph6"] = to_graph6(g);
    j["seconds"] = seconds;
    if (!contraction.is_null()) j["contraction"] = contraction;
    j["report"] = to_json(R);
    *out << j.dump(2) << "\n";
  } else if (o.format == "dot") {
    *out << ledger_to_dot(R.ledger);
  } else {
    Table t{{"check", "level", "result", "failures", "detail"}, {}};
    for (const auto& c : R.checks)
      t.rows.push_back({c.name, c.level, c.passed ? "pass" : (c.hard ? "FAIL" : "warn"), std::to_string(c.failures), c.detail});
    json meta = meta_for("audit", f.name(), o.seed);
    meta["n"] = g.order();
    meta["M"] = R.size_M;
    meta["A"] = R.size_A;
    meta["B"] = R.size_B;
    meta["D0"] = R.size_D0;
    meta["D"] = R.size_D;
    meta["trees"] = R.trees;
    meta["slack"] = to_string(R.global_slack);
    t.print(*out, o.format, meta);
  }
  if (!R.ok()) {
    for (const auto* c : R.hard_failures()) std::cerr << "violation: " << c->name << ": " << c->detail << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct LemmaOptions {
  std::string pattern, input, format = "text";
  int n = 0;
  std::uint64_t seed = 0;
  bool assume_saturated = false;
};

int cmd_lemmas(const LemmaOptions& o) {
  Pattern f = parse_pattern(o.pattern);
  if (!f.is_cycle()) throw InputError("lemmas needs a cycle pattern");
  const int k = f.cycle_length();
  Graph g;
  if (!o.input.empty())
    g = read_graph_from(o.input);
  else if (o.n > 0)
    g = greedy_saturate(Graph(o.n), f, PairOrder::random(o.seed));
  else
    throw InputError("lemmas needs --input or --n");
  if (!o.assume_saturated) {
    auto cert = verify_saturated(g, f);
    if (!cert.saturated()) throw PreconditionError("graph is not " + f.name() + "-saturated (" + to_string(cert.status) + ")");
  }
  auto vs = check_all_lemmas(g, k);
  if (o.format == "json") {
    json j = meta_for("lemmas", f.name(), o.seed);
    j["n"] = g.order();
    j["violations"] = to_json(vs);
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << violations_to_dot(g, vs);
  } else {
    std::cout << g.order() << " vertices, " << g.size() << " edges, " << vs.size() << " violations\n";
    for (const auto& v : vs) std::cout << v.lemma << ": " << v.description << "\n";
  }
  return vs.empty() ? kExitOk : kExitViolation;
}

struct TableOptions {
  std::string pattern, range, format = "text";
  int exact_max = 0;
  int trials = 20;
  std::uint64_t seed = 0;
};

int cmd_table(const TableOptions& o) {
  Pattern f = parse_pattern(o.pattern);
  auto [lo, hi] = parse_range(o.range);
  Table t{{"n", "kind", "lower", "upper", "formula", "kt_bound", "construction", "strategy", "inside", "exact"}, {}};
  int code = kExitOk;
  for (int n = lo; n <= hi; ++n) {
    auto fv = known_formula(n, f);
    std::string kind, lower, upper;
    if (fv) {
      kind = to_string(fv->kind);
      if (fv->kind != FormulaValue::Kind::slope) {
        auto [a, b] = fv->integer_window();
        lower = std::to_string(a);
        upper = std::to_string(b);
      }
    }
    std::string kt = f.edge_count() > 0 && n >= f.order() ? to_string(kt_bound(n, f)) : "";
    UpperSearchOptions opt;
    opt.seed = o.seed + static_cast<std::uint64_t>(n);
    opt.random_trials = o.trials;
    auto ub = best_upper_bound(n, f, opt);
    std::string inside = "-";
    if (fv && fv->kind != FormulaValue::Kind::slope) {
      inside = fv->admits(ub.edges()) ? "yes" : "no";
      if (inside == "no") code = kExitViolation;
    }
    std::string exact;
    if (n <= o.exact_max) {
      SatRecord r = sat_exact(n, f);
      exact = r.exact ? std::to_string(r.upper) : "budget";
    }
    t.rows.push_back({std::to_string(n), kind, lower, upper, fv ? fv->source : "", kt, std::to_string(ub.edges()), ub.strategy,
                      inside, exact});
  }
  t.print(std::cout, o.format, meta_for("table", f.name(), o.seed));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturation numbers: exact values, constructions, structural checks and weight audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));
  const std::vector<std::string> table_formats{"text", "csv", "json"};

  ExactOptions ex;
  auto* exact = app.add_subcommand("exact", "sat(n, F) by canonical enumeration");
  exact->add_option("pattern", ex.pattern, "K5, K{2,3,3}, C28, @file or g6:...")->required();
  exact->add_option("--n", ex.range, "n or A..B")->required();
  exact->add_option("--max-seconds", ex.seconds, "time budget per n");
  exact->add_option("--max-nodes", ex.nodes, "node budget per n");
  exact->add_flag("--structural-filter", ex.structural_filter, "cycles: skip candidates failing a structural check");
  exact->add_option("--format", ex.format)->check(CLI::IsMember(table_formats));

  VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "certificate for F-saturation of a graph");
  verify->add_option("pattern", ve.pattern)->required();
  verify->add_option("--input", ve.input, "graph6 or edge list file, - for stdin");
  verify->add_option("--format", ve.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--witnesses", ve.witnesses, "list an embedding for every non-edge");

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "emit a saturated graph");
  construct->add_option("kind", co.kind, "ehm, kt, greedy, paths or best")->required();
  construct->add_option("--n", co.n)->required();
  construct->add_option("--s", co.s, "clique order for ehm");
  construct->add_option("--pattern", co.pattern);
  construct->add_option("--seed", co.seed);
  construct->add_option("--format", co.format)->check(CLI::IsMember({"graph6", "edges", "dot", "json"}));

  AuditOptions au;
  auto* auditc = app.add_subcommand("audit", "weight audit (even cycles) or lower-bound ledger (multipartite)");
  auditc->add_option("--pattern", au.pattern)->required();
  auditc->add_option("--n", au.range, "instance order (multipartite: A..B)");
  auditc->add_option("--input", au.input, "graph file instead of a generated instance");
  auditc->add_option("--seed", au.seed);
  auditc->add_option("--order", au.order, "centre scan order: lex or peripheral");
  auditc->add_option("--construction", au.construction)->check(CLI::IsMember({"auto", "greedy", "paths"}));
  auditc->add_option("--format", au.format)->check(CLI::IsMember({"json", "text", "csv", "dot"}));
  auditc->add_option("--output", au.output);
  auditc->add_flag("--assume-saturated", au.assume_saturated);
  auditc->add_flag("--allow-small-ell", au.allow_small_ell);
  auditc->add_flag("--contract", au.contract, "drop surplus parallel degree-two paths first");

  LemmaOptions le;
  auto* lemmas = app.add_subcommand("lemmas", "structural checks on a C_k-saturated graph");
  lemmas->add_option("pattern", le.pattern)->required();
  lemmas->add_option("--input", le.input);
  lemmas->add_option("--n", le.n, "order of a greedy instance");
  lemmas->add_option("--seed", le.seed);
  lemmas->add_option("--format", le.format)->check(CLI::IsMember({"text", "json", "dot"}));
  lemmas->add_flag("--assume-saturated", le.assume_saturated);

  TableOptions ta;
  auto* table = app.add_subcommand("table", "formula, bound and construction comparison");
  table->add_option("pattern", ta.pattern)->required();
  table->add_option("--n", ta.range)->required();
  table->add_option("--exact-max", ta.exact_max, "also run the exact solver up to this n");
  table->add_option("--trials", ta.trials, "random greedy completions per n");
  table->add_option("--seed", ta.seed);
  table->add_option("--format", ta.format)->check(CLI::IsMember(table_formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*exact) return cmd_exact(ex);
    if (*verify) return cmd_verify(ve);
    if (*construct) return cmd_construct(co);
    if (*auditc) return cmd_audit(au);
    if (*lemmas) return cmd_lemmas(le);
    if (*table) return cmd_table(ta);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const TheoremViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
