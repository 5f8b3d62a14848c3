#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

namespace detail {
inline void shuffle_pairs(std::vector<Edge>& pairs, std::mt19937_64& rng) {
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(rng() % i)]);
}
}  // namespace detail

/// Greedy completion of `seed` that first examines pairs inside vertices
/// 0..core-1 (random order), then every other pair (random order).
inline Graph core_first_greedy(const Graph& seed, const Pattern& f, int core, std::uint64_t rng_seed) {
  if (!is_free(seed, f)) throw InputError("core_first_greedy: seed graph already contains " + f.name());
  std::mt19937_64 rng(rng_seed);
  std::vector<Edge> inner, outer;
  for (auto e : seed.non_edges()) (e.second < core ? inner : outer).push_back(e);
  detail::shuffle_pairs(inner, rng);
  detail::shuffle_pairs(outer, rng);
  Graph g = seed;
  for (const auto* list : {&inner, &outer})
    for (auto [x, y] : *list)
      if (!creates_on_edge(g, x, y, f)) g.add_edge(x, y);
  return g;
}

/// Vertices 0 and 1 joined by `paths` internally disjoint paths with
/// `path_edges` edges each; vertices 2..core-1 are left isolated for the
/// completion step. Returns nullopt when the sizes do not fit n.
inline std::optional<Graph> parallel_path_seed(int n, int core, int paths, int path_edges) {
  if (core < 2 || paths < 0 || path_edges < 2) return std::nullopt;
  const int inner = path_edges - 1;
  if (core + paths * inner != n) return std::nullopt;
  Graph g(n);
  for (int q = 0; q < paths; ++q) {
    Vertex prev = 0;
    for (int i = 0; i < inner; ++i) {
      Vertex v = core + q * inner + i;
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

/// g with vertex v renamed to a seeded random label.
inline Graph shuffle_labels(const Graph& g, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) label[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = label.size(); i > 1; --i) std::swap(label[i - 1], label[static_cast<std::size_t>(rng() % i)]);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return h;
}

/// Parallel-path seed for C_k with paths of k - 3 or k - 4 edges, whichever
/// leaves the smallest core of at least 5 vertices, completed core first.
/// Labels are shuffled afterwards so that the two hubs are not the first
/// vertices of every scan. nullopt when no split of n fits.
inline std::optional<Graph> long_path_instance(int n, int k, std::uint64_t rng_seed) {
  if (k < 7) return std::nullopt;
  const Pattern f = Pattern::cycle(k);
  std::optional<Graph> seed;
  int best_core = -1;
  for (int path_edges : {k - 3, k - 4}) {
    const int inner = path_edges - 1;
    const int paths = (n - 5) / inner;
    if (paths < 2) continue;
    const int core = n - paths * inner;
    if (best_core >= 0 && core >= best_core) continue;
    auto candidate = parallel_path_seed(n, core, paths, path_edges);
    if (!candidate || !is_free(*candidate, f)) continue;
    best_core = core;
    seed = std::move(candidate);
  }
  if (!seed) return std::nullopt;
  return shuffle_labels(core_first_greedy(*seed, f, best_core, rng_seed), rng_seed ^ 0x9e3779b97f4a7c15ULL);
}

/// A block glued to a shared hub (vertex 0 of the block). Vertices 1..size of
/// the block are private to each copy.
struct HubBlock {
  int size = 0;
  std::vector<Edge> edges;
};

/// Blocks known to compose into C_k-saturated graphs when at least three
/// copies share the hub. Empty for other k.
inline std::vector<HubBlock> hub_blocks(int k) {
  if (k == 5)
    return {
        {7, {{0, 1}, {0, 2}, {0, 5}, {0, 7}, {1, 3}, {1, 5}, {2, 5}, {2, 6}, {4, 7}, {5, 7}}},
        {6, {{0, 2}, {0, 4}, {0, 5}, {0, 6}, {1, 5}, {2, 4}, {3, 6}, {4, 5}, {4, 6}}},
    };
  return {};
}

/// Hub plus block copies covering all n-1 other vertices, using the fewest
/// edges over all block multisets. nullopt when no multiset fits exactly.
inline std::optional<Graph> hub_block_seed(int n, const std::vector<HubBlock>& blocks, int min_copies = 3) {
  if (blocks.empty() || n < 2) return std::nullopt;
  const int target = n - 1;
  // best[t]: fewest edges covering t vertices; choice[t]: last block used.
  const int inf = 1 << 29;
  std::vector<int> best(static_cast<std::size_t>(target + 1), inf), copies(best.size(), 0), choice(best.size(), -1);
  best[0] = 0;
  for (int t = 1; t <= target; ++t)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int s = blocks[b].size;
      if (s > t || best[static_cast<std::size_t>(t - s)] >= inf) continue;
      int e = best[static_cast<std::size_t>(t - s)] + static_cast<int>(blocks[b].edges.size());
      if (e < best[static_cast<std::size_t>(t)]) {
        best[static_cast<std::size_t>(t)] = e;
        copies[static_cast<std::size_t>(t)] = copies[static_cast<std::size_t>(t - s)] + 1;
        choice[static_cast<std::size_t>(t)] = static_cast<int>(b);
      }
    }
  if (best[static_cast<std::size_t>(target)] >= inf || copies[static_cast<std::size_t>(target)] < min_copies) return std::nullopt;
  Graph g(n);
  Vertex next = 1;
  for (int t = target; t > 0;) {
    const HubBlock& b = blocks[static_cast<std::size_t>(choice[static_cast<std::size_t>(t)])];
    auto map = [&](Vertex v) { return v == 0 ? 0 : next + v - 1; };
    for (auto [u, v] : b.edges) g.add_edge(map(u), map(v));
    next += b.size;
    t -= b.size;
  }
  return g;
}

/// A core graph on vertices 0..core-1 whose hubs 0 and 1 get joined by any
/// number of internally disjoint paths with `path_edges` edges each.
struct PathBundle {
  int core = 0;
  int path_edges = 0;
  std::vector<Edge> edges;
};

/// Bundles known to give C_k-saturated graphs for every number of paths >= 1.
inline std::vector<PathBundle> path_bundles(int k) {
  if (k == 6) {
    std::vector<Edge> base{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
    PathBundle six{6, 4, base}, seven{7, 4, base}, eight{8, 4, base};
    seven.edges.push_back({4, 6});
    for (Edge e : {Edge{0, 6}, Edge{0, 7}, Edge{6, 7}}) eight.edges.push_back(e);
    return {six, seven, eight};
  }
  return {};
}

/// The sparsest bundle graph on exactly n vertices, if any bundle fits.
inline std::optional<Graph> path_bundle_seed(int n, const std::vector<PathBundle>& bundles) {
  std::optional<Graph> best;
  for (const auto& b : bundles) {
    const int inner = b.path_edges - 1;
    if (n <= b.core || (n - b.core) % inner != 0) continue;
    auto g = parallel_path_seed(n, b.core, (n - b.core) / inner, b.path_edges);
    for (auto [u, v] : b.edges) g->add_edge(u, v);
    if (!best || g->size() < best->size()) best = std::move(g);
  }
  return best;
}

/// Repeatedly deletes 1-3 random edges and re-completes greedily, keeping
/// the result whenever it is no larger.
inline Graph local_search(Graph start, const Pattern& f, int iterations, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  Graph best = start, cur = std::move(start);
  for (int it = 0; it < iterations && cur.size() > 0; ++it) {
    Graph h = cur;
    auto es = h.edges();
    int drops = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < drops && h.size() > 0; ++j) {
      auto e = es[static_cast<std::size_t>(rng() % es.size())];
      h.remove_edge(e.first, e.second);
    }
    Graph g = greedy_saturate(h, f, PairOrder::random(rng()));
    if (g.size() <= cur.size()) {
      cur = std::move(g);
      if (cur.size() < best.size()) best = cur;
    }
  }
  return best;
}

struct UpperSearchOptions {
  int random_trials = 20;
  int seeded_trials = 8;
  int local_iterations = 400;
  /// Local search is skipped above this order (each step is a full completion).
  int local_max_order = 40;
  /// Largest core tried by the parallel-path strategy is k + core_slack.
  int core_slack = 6;
  std::uint64_t seed = 0;
};

struct UpperBound {
  Graph graph;
  std::string strategy;
  long long edges() const { return graph.size(); }
};

/// Smallest verified F-saturated graph found by: random greedy completion,
/// parallel-path seeds, fixed path bundles and hub-block composition (the
/// last three for cycles only), then local search from the best graph so far.
inline UpperBound best_upper_bound(int n, const Pattern& f, const UpperSearchOptions& opt = {}) {
  if (n < 1) throw InputError("best_upper_bound needs n >= 1");
  std::mt19937_64 rng(opt.seed);
  std::optional<UpperBound> best;
  auto offer = [&](Graph g, const std::string& strategy) {
    if (best && g.size() >= best->graph.size()) return;
    if (!verify_saturated(g, f).saturated()) return;
    best = UpperBound{std::move(g), strategy};
  };
  for (int t = 0; t < opt.random_trials; ++t) offer(greedy_saturate(Graph(n), f, PairOrder::random(rng())), "random-greedy");
  if (f.is_cycle()) {
    const int k = f.cycle_length();
    for (int path_edges : {k - 3, k - 2}) {
      if (path_edges < 3) continue;
      for (int paths = 2; 2 + paths * (path_edges - 1) <= n; ++paths) {
        int core = n - paths * (path_edges - 1);
        if (core > k + opt.core_slack) continue;
        auto seed = parallel_path_seed(n, core, paths, path_edges);
        if (!seed || !is_free(*seed, f)) continue;
        for (int t = 0; t < opt.seeded_trials; ++t) offer(core_first_greedy(*seed, f, core, rng()), "parallel-paths");
      }
    }
    if (auto seed = path_bundle_seed(n, path_bundles(k)); seed && is_free(*seed, f))
      offer(greedy_saturate(*seed, f, PairOrder::lexicographic()), "path-bundle");
    if (auto seed = hub_block_seed(n, hub_blocks(k)); seed && is_free(*seed, f))
      offer(greedy_saturate(*seed, f, PairOrder::lexicographic()), "hub-blocks");
  }
  if (opt.local_iterations > 0 && n <= opt.local_max_order) offer(local_search(best->graph, f, opt.local_iterations, rng()), "local-search");
  return *best;
}

}  // namespace satnum
