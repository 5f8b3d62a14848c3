#pragma once
// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"

namespace oracle {

using satnum::Graph;
using satnum::Vertex;

// Every injective map of F's vertices into G's, checked edge by edge.
inline bool contains(const Graph& g, const Graph& f) {
  const int n = g.order(), k = f.order();
  if (k > n) return false;
  if (f.size() > g.size()) return false;
  std::vector<Vertex> image(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) {
      for (auto [a, b] : f.edges())
        if (!g.has_edge(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)])) return false;
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      image[static_cast<std::size_t>(i)] = v;
      bool hit = place(i + 1);
      used[static_cast<std::size_t>(v)] = 0;
      if (hit) return true;
    }
    return false;
  };
  return place(0);
}

inline bool saturated(const Graph& g, const Graph& f) {
  if (contains(g, f)) return false;
  for (auto [u, v] : g.non_edges())
    if (!contains(g.with_edge(u, v), f)) return false;
  return true;
}

// Labelled graph on n vertices from the bits of mask over pairs (0,1),(0,2)...
inline Graph from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1ULL) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Floyd-Warshall distances; -1 for unreachable.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (Vertex v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (auto [u, v] : g.edges()) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto& dij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        dij = std::min(dij, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      }
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Number of labelled copies of F in G divided by |Aut(F)|, by brute force.
inline long long count_copies(const Graph& g, const Graph& f) {
  const int n = g.order(), k = f.order();
  auto count_maps = [&](const Graph& host) {
    long long maps = 0;
    std::vector<Vertex> image(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
    std::function<void(int)> place = [&](int i) {
      if (i == k) {
        for (auto [a, b] : f.edges())
          if (!host.has_edge(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)])) return;
        ++maps;
        return;
      }
      for (Vertex v = 0; v < host.order(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = 1;
        image[static_cast<std::size_t>(i)] = v;
        place(i + 1);
        used[static_cast<std::size_t>(v)] = 0;
      }
    };
    place(0);
    return maps;
  };
  (void)n;
  return count_maps(g) / count_maps(f);
}

}  // namespace oracle
