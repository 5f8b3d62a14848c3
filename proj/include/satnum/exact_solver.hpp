#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "satnum/cycle_lemmas.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/graph_io.hpp"
#include "satnum/parallel.hpp"
#include "satnum/pattern.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

struct SearchBudget {
  long long max_nodes = 100'000'000;
  double max_seconds = 300.0;
  int parallel_width = thread_count();
  /// Cycle patterns only: candidates failing a structural check skip the
  /// saturation test. Off by default.
  bool structural_filter = false;
};

/// What is known about sat(n, F) from one computation.
struct SatRecord {
  int n = 0;
  Pattern pattern = Pattern::complete(3);
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  /// "enumeration", "formula", "greedy" or "kt-bound".
  std::string method;
  std::optional<Graph> witness;
  long long nodes = 0;
  /// Budget ran out before the answer was certified.
  bool budget_exhausted = false;
};

/// Saved state of an interrupted enumeration: every F-free class with m edges.
struct Checkpoint {
  static constexpr int kVersion = 1;
  int n = 0;
  std::string pattern;
  int m = 0;
  std::vector<std::string> frontier;
  long long nodes = 0;

  nlohmann::json to_json() const {
    return {{"version", kVersion}, {"n", n}, {"pattern", pattern}, {"m", m}, {"frontier", frontier}, {"nodes", nodes}};
  }
  static Checkpoint from_json(const nlohmann::json& j) {
    if (j.value("version", 0) != kVersion) throw InputError("checkpoint: unsupported version");
    Checkpoint c;
    c.n = j.at("n").get<int>();
    c.pattern = j.at("pattern").get<std::string>();
    c.m = j.at("m").get<int>();
    c.frontier = j.at("frontier").get<std::vector<std::string>>();
    c.nodes = j.value("nodes", 0LL);
    return c;
  }
  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write checkpoint '" + path + "'");
    out << to_json().dump() << "\n";
  }
  static Checkpoint load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read checkpoint '" + path + "'");
    return from_json(nlohmann::json::parse(in));
  }
};

/// Minimum edge count over `trials` greedy completions of the empty graph in
/// random orders, cycling through uniform, vertex-sequential and hub-first
/// shuffles. Trial i uses the i-th draw of a generator seeded with rng_seed.
inline SatRecord sat_upper_randomized(int n, const Pattern& f, int trials, std::uint64_t rng_seed) {
  if (trials < 1) throw InputError("sat_upper_randomized needs at least one trial");
  if (n < 1) throw InputError("sat_upper_randomized needs n >= 1");
  std::mt19937_64 rng(rng_seed);
  SatRecord rec;
  rec.n = n;
  rec.pattern = f;
  rec.method = "greedy";
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t draw = rng();
    const PairOrder order = t % 3 == 0   ? PairOrder::random(draw)
                            : t % 3 == 1 ? PairOrder::vertex_sequential(draw)
                                         : PairOrder::hub_first(draw);
    Graph g = greedy_saturate(Graph(n), f, order);
    if (!rec.witness || g.size() < rec.witness->size()) rec.witness = std::move(g);
  }
  rec.upper = rec.witness->size();
  rec.lower = 0;
  return rec;
}

namespace detail {
inline Graph smallest_by_certificate(const std::vector<Graph>& gs) {
  std::size_t best = 0;
  std::string best_cert;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    std::string c = canonical_form(gs[i]).certificate;
    if (i == 0 || c < best_cert) {
      best = i;
      best_cert = std::move(c);
    }
  }
  return gs[best];
}
}  // namespace detail

/// sat(n, F) by canonical enumeration in increasing edge count. Level m holds
/// every F-free class with m edges; the first level containing a saturated
/// graph gives the answer. On budget exhaustion the record carries the
/// certified lower bound and a greedy upper bound. `on_level` receives a
/// checkpoint after each fully expanded level; `resume` restarts from one.
inline SatRecord sat_exact(int n, const Pattern& f, SearchBudget budget = {},
                           const std::optional<Checkpoint>& resume = std::nullopt,
                           const std::function<void(const Checkpoint&)>& on_level = {}) {
  if (n < 1) throw InputError("sat_exact needs n >= 1");
  if (budget.max_nodes < 1 || budget.max_seconds <= 0 || budget.parallel_width < 1)
    throw InputError("search budget fields must be positive");
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  SatRecord rec;
  rec.n = n;
  rec.pattern = f;
  rec.method = "enumeration";

  std::vector<Graph> level;
  int m = 0;
  std::atomic<long long> nodes{0};
  if (resume) {
    if (resume->n != n || resume->pattern != f.name()) throw InputError("checkpoint does not match n and pattern");
    m = resume->m;
    nodes = resume->nodes;
    for (const auto& s : resume->frontier) level.push_back(from_graph6(s));
  } else {
    level.push_back(Graph(n));
  }

  auto give_up = [&](int certified_lower) {
    SatRecord up = sat_upper_randomized(n, f, 20, 0);
    rec.lower = certified_lower;
    rec.upper = up.upper;
    rec.witness = up.witness;
    rec.exact = false;
    rec.budget_exhausted = true;
    rec.method = "greedy";
    rec.nodes = nodes;
    return rec;
  };

  const int max_m = n * (n - 1) / 2;
  for (; m <= max_m; ++m) {
    if (level.empty()) break;
    std::vector<char> saturated(level.size(), 0);
    const bool filter = budget.structural_filter && f.is_cycle();
    parallel_for(level.size(), [&](std::size_t i) {
      if (filter && !check_all_lemmas(level[i], f.cycle_length()).empty()) return;
      saturated[i] = verify_saturated(level[i], f).saturated();
    }, budget.parallel_width);
    std::vector<Graph> hits;
    for (std::size_t i = 0; i < level.size(); ++i)
      if (saturated[i]) hits.push_back(level[i]);
    if (!hits.empty()) {
      rec.lower = rec.upper = m;
      rec.exact = true;
      rec.witness = detail::smallest_by_certificate(hits);
      rec.nodes = nodes;
      return rec;
    }
    if (m == max_m) break;
    std::vector<std::vector<Graph>> children(level.size());
    std::atomic<bool> out_of_budget{false};
    parallel_for(level.size(), [&](std::size_t i) {
      if (out_of_budget.load()) return;
      long long local = 0;
      children[i] = canonical_children(level[i], &f, &local);
      long long total = nodes.fetch_add(local) + local;
      if (total > budget.max_nodes || elapsed() > budget.max_seconds) out_of_budget = true;
    }, budget.parallel_width);
    // Level m itself was fully checked, so every saturated graph has > m edges.
    if (out_of_budget) return give_up(m + 1);
    std::vector<Graph> next;
    for (auto& kids : children) next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    level = std::move(next);
    if (on_level) {
      Checkpoint cp;
      cp.n = n;
      cp.pattern = f.name();
      cp.m = m + 1;
      cp.nodes = nodes;
      for (const auto& g : level) cp.frontier.push_back(to_graph6(g));
      on_level(cp);
    }
  }
  // Every maximal F-free graph is saturated, so some level must hit.
  throw std::logic_error("enumeration ended without finding a saturated graph");
}

}  // namespace satnum
