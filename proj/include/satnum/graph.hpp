#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/vertex_set.hpp"

namespace satnum {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graph is a value type. Algorithms take it by const reference and never
/// mutate it, so a built graph can be shared freely between threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 65536;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return rows_[static_cast<std::size_t>(u)].contains(v);
  }
  /// Adds uv; returns false when it was already present. Loops are rejected.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return false;
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
    return true;
  }
  bool remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) return false;
    rows_[static_cast<std::size_t>(u)].erase(v);
    rows_[static_cast<std::size_t>(v)].erase(u);
    --m_;
    return true;
  }
  Graph with_edge(Vertex u, Vertex v) const {
    Graph h = *this;
    h.add_edge(u, v);
    return h;
  }
  Graph without_edge(Vertex u, Vertex v) const {
    Graph h = *this;
    h.remove_edge(u, v);
    return h;
  }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return rows_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].size();
    return d;
  }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
        if (v > u) out.emplace_back(u, v);
      });
    return out;
  }
  /// Nonadjacent pairs (u, v), u < v, lexicographic.
  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (!rows_[static_cast<std::size_t>(u)].contains(v)) out.emplace_back(u, v);
    return out;
  }

  void check(Vertex v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

/// Ordered list of distinct vertices with consecutive vertices adjacent.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      Vertex v = vertices[i];
      if (v < 0 || v >= g.order() || seen.contains(v)) return false;
      seen.insert(v);
      if (i > 0 && !g.has_edge(vertices[i - 1], v)) return false;
    }
    return true;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

// ---------------------------------------------------------------------------
// Neighbourhoods and distances

/// Vertices adjacent to every member of W; all of V(G) when W is empty.
inline VertexSet common_neighborhood(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  VertexSet out = VertexSet::full(g.order());
  w.for_each([&](Vertex v) { out &= g.neighbors(v); });
  return out;
}

inline VertexSet common_neighborhood(const Graph& g, std::initializer_list<Vertex> w) {
  for (Vertex v : w) g.check(v);
  return common_neighborhood(g, VertexSet(g.order(), w));
}

inline constexpr int kUnreachable = -1;

/// BFS distances from every member of `sources`, restricted to `allowed`
/// (sources are always admitted). Unreached vertices get kUnreachable.
inline std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet& allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  VertexSet seen = sources;
  VertexSet frontier = sources;
  int d = 0;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) {
      dist[static_cast<std::size_t>(v)] = d;
      next |= g.neighbors(v);
    });
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
    ++d;
  }
  return dist;
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  g.check(source);
  return bfs_distances(g, VertexSet(g.order(), {source}), VertexSet::full(g.order()));
}

/// Shortest-path edge count; std::nullopt when u and v lie in different components.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

inline std::optional<int> set_distance(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) throw InputError("set_distance needs two nonempty vertex sets");
  if (s.universe() != g.order() || t.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
  auto dist = bfs_distances(g, s, VertexSet::full(g.order()));
  std::optional<int> best;
  t.for_each([&](Vertex v) {
    int d = dist[static_cast<std::size_t>(v)];
    if (d != kUnreachable && (!best || d < *best)) best = d;
  });
  return best;
}

/// E_G(S, T): edges with one endpoint in S and the other in T, each listed once.
inline std::vector<Edge> edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if ((s.contains(u) && t.contains(v)) || (s.contains(v) && t.contains(u))) out.emplace_back(u, v);
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

/// Largest finite distance; std::nullopt for disconnected graphs.
inline std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Connected component labels (0-based, in order of smallest member).
inline std::vector<int> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[static_cast<std::size_t>(v)] != -1) continue;
    auto d = bfs_distances(g, v);
    for (Vertex u = 0; u < g.order(); ++u)
      if (d[static_cast<std::size_t>(u)] != kUnreachable) label[static_cast<std::size_t>(u)] = next;
    ++next;
  }
  return label;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

// ---------------------------------------------------------------------------
// Degree-two structure

struct DegreeTwoDecomposition {
  /// Maximal runs of degree-two vertices, smallest endpoint first, sorted by smallest vertex.
  std::vector<Path> paths;
  /// Components that are cycles of degree-two vertices; each starts at its
  /// smallest vertex and continues towards the smaller neighbour.
  std::vector<std::vector<Vertex>> cycles;
};

inline DegreeTwoDecomposition degree_two_paths(const Graph& g) {
  DegreeTwoDecomposition out;
  const int n = g.order();
  std::vector<char> two(static_cast<std::size_t>(n)), done(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) two[static_cast<std::size_t>(v)] = g.degree(v) == 2;
  auto is_two = [&](Vertex v) { return two[static_cast<std::size_t>(v)] != 0; };

  // Walk from v away from `from` along unvisited degree-two vertices; returns
  // the vertex where the walk stopped.
  auto walk = [&](Vertex from, Vertex v, std::vector<Vertex>& acc) {
    Vertex prev = from;
    Vertex cur = v;
    while (is_two(cur) && !done[static_cast<std::size_t>(cur)]) {
      acc.push_back(cur);
      done[static_cast<std::size_t>(cur)] = 1;
      Vertex nxt = g.neighbors(cur).first();
      if (nxt == prev) nxt = g.neighbors(cur).next(nxt);
      prev = cur;
      cur = nxt;
    }
    return cur;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (!is_two(v) || done[static_cast<std::size_t>(v)]) continue;
    auto nb = g.neighbors(v).to_vector();
    done[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> left, right;
    if (walk(v, nb[1], right) == v) {
      std::vector<Vertex> cyc{v};
      cyc.insert(cyc.end(), right.begin(), right.end());
      auto it = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), it, cyc.end());
      if (cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
      out.cycles.push_back(std::move(cyc));
      continue;
    }
    walk(v, nb[0], left);
    std::vector<Vertex> run(left.rbegin(), left.rend());
    run.push_back(v);
    run.insert(run.end(), right.begin(), right.end());
    if (run.back() < run.front()) std::reverse(run.begin(), run.end());
    out.paths.push_back(Path{std::move(run)});
  }
  auto smallest = [](const std::vector<Vertex>& vs) { return *std::min_element(vs.begin(), vs.end()); };
  std::sort(out.paths.begin(), out.paths.end(),
            [&](const Path& a, const Path& b) { return smallest(a.vertices) < smallest(b.vertices); });
  std::sort(out.cycles.begin(), out.cycles.end(),
            [&](const auto& a, const auto& b) { return smallest(a) < smallest(b); });
  return out;
}

struct StarlikeResult {
  std::optional<Vertex> center;
  /// "starlike", "path" or "not starlike".
  std::string reason;
};

inline bool is_tree(const Graph& t) { return t.order() >= 1 && t.size() == t.order() - 1 && is_connected(t); }

/// Centre of a starlike tree (a tree with exactly one vertex of degree >= 3).
inline StarlikeResult is_starlike(const Graph& t) {
  if (!is_tree(t)) throw InputError("is_starlike expects a tree");
  std::vector<Vertex> big;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 3) big.push_back(v);
  if (big.empty()) return {std::nullopt, "path"};
  if (big.size() == 1) return {big.front(), "starlike"};
  return {std::nullopt, "not starlike"};
}

}  // namespace satnum
