#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "satnum/canonical.hpp"
#include "satnum/containment.hpp"
#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"

namespace satnum {

/// The edge removed by canonical deletion: the edge whose endpoints have the
/// largest canonical positions (compared as (max, min)).
inline Edge canonical_edge(const Graph& g, const CanonicalForm& cf) {
  Edge best{-1, -1};
  std::pair<int, int> key{-1, -1};
  for (auto [u, v] : g.edges()) {
    int a = cf.position[static_cast<std::size_t>(u)];
    int b = cf.position[static_cast<std::size_t>(v)];
    std::pair<int, int> k{std::max(a, b), std::min(a, b)};
    if (k > key) {
      key = k;
      best = {u, v};
    }
  }
  return best;
}

namespace detail {
inline std::string edge_orbit_certificate(const Graph& g, Edge e) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  colors[static_cast<std::size_t>(e.first)] = 1;
  colors[static_cast<std::size_t>(e.second)] = 1;
  return canonical_form(g, colors).certificate;
}
}  // namespace detail

/// One-edge extensions of g accepted by canonical deletion, one per
/// isomorphism class. Running this level by level from the empty graph
/// produces every graph on n vertices exactly once up to isomorphism.
/// With `forbid`, children containing the pattern are dropped; subgraphs of
/// F-free graphs are F-free, so every F-free class is still reached.
inline std::vector<Graph> canonical_children(const Graph& g, const Pattern* forbid = nullptr, long long* nodes = nullptr) {
  std::map<std::string, Graph> kept;
  for (auto [x, y] : g.non_edges()) {
    if (nodes) ++*nodes;
    if (forbid && creates_on_edge(g, x, y, *forbid)) continue;
    Graph child = g.with_edge(x, y);
    CanonicalForm cf = canonical_form(child);
    if (kept.count(cf.certificate)) continue;
    Edge star = canonical_edge(child, cf);
    bool same = (star == Edge{x, y}) || (star == Edge{y, x});
    if (!same && detail::edge_orbit_certificate(child, {x, y}) != detail::edge_orbit_certificate(child, star)) continue;
    kept.emplace(cf.certificate, relabel(child, cf.position));
  }
  std::vector<Graph> out;
  out.reserve(kept.size());
  for (auto& [cert, h] : kept) out.push_back(std::move(h));
  return out;
}

/// Number of isomorphism classes of graphs on n vertices with m edges, for
/// m = 0..n(n-1)/2, by canonical augmentation.
inline std::vector<long long> count_graphs_by_edges(int n, const Pattern* forbid = nullptr) {
  std::vector<long long> counts;
  std::vector<Graph> level{Graph(n)};
  const int max_m = n * (n - 1) / 2;
  for (int m = 0; m <= max_m && !level.empty(); ++m) {
    counts.push_back(static_cast<long long>(level.size()));
    std::vector<Graph> next;
    for (const auto& g : level) {
      auto kids = canonical_children(g, forbid);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }
  return counts;
}

}  // namespace satnum
