#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/path_search.hpp"

namespace satnum {

/// One falsified conclusion of a structural statement about C_k-saturated graphs.
struct LemmaViolation {
  /// pendant-neighbourhood, degree-two-closure, two-path-link,
  /// disjoint-long-paths or connectivity-diameter.
  std::string lemma;
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> paths;
  std::string description;
};

/// Every path all of whose vertices have degree two, as a vertex sequence
/// with exactly `count` vertices, in both orientations.
inline std::vector<std::vector<Vertex>> degree_two_windows(const Graph& g, int count) {
  std::vector<std::vector<Vertex>> out;
  if (count < 1) return out;
  auto dec = degree_two_paths(g);
  auto emit = [&](const std::vector<Vertex>& run, bool cyclic) {
    const int m = static_cast<int>(run.size());
    if (count > m) return;
    const int starts = cyclic ? m : m - count + 1;
    for (int i = 0; i < starts; ++i) {
      std::vector<Vertex> w;
      for (int j = 0; j < count; ++j) w.push_back(run[static_cast<std::size_t>((i + j) % m)]);
      out.push_back(w);
      if (count > 1) out.emplace_back(w.rbegin(), w.rend());
    }
  };
  for (const auto& p : dec.paths) emit(p.vertices, false);
  for (const auto& c : dec.cycles) emit(c, true);
  return out;
}

namespace detail {
inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "-" : "") + std::to_string(vs[i]);
  return s;
}

// Longest run of degree-two vertices starting at v0 (itself degree two) and
// leaving through `first`, avoiding `blocked`. Returns the number of edges.
inline int degree_two_reach(const Graph& g, Vertex v0, Vertex first, const VertexSet& blocked) {
  if (g.degree(first) != 2 || blocked.contains(first) || first == v0) return 0;
  int steps = 1;
  Vertex prev = v0, cur = first;
  while (true) {
    Vertex nxt = -1;
    g.neighbors(cur).for_each([&](Vertex x) {
      if (x != prev) nxt = x;
    });
    if (nxt < 0 || nxt == v0 || g.degree(nxt) != 2 || blocked.contains(nxt)) return steps;
    prev = cur;
    cur = nxt;
    ++steps;
    if (steps > g.order()) return steps;
  }
}
}  // namespace detail

/// For every degree-one x with neighbour y: every v in N[y] - {x} must have
/// degree at least 3; when two such y, y' are adjacent, y needs degree >= 4.
inline std::vector<LemmaViolation> check_pendant_neighborhoods(const Graph& g, int k) {
  if (k < 5) throw PreconditionError("pendant-neighbourhood check needs k >= 5");
  if (g.order() < 3) throw PreconditionError("pendant-neighbourhood check needs at least 3 vertices");
  std::vector<LemmaViolation> out;
  VertexSet carriers(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 1) continue;
    Vertex y = g.neighbors(x).first();
    carriers.insert(y);
    VertexSet closed = g.neighbors(y);
    closed.insert(y);
    closed.erase(x);
    closed.for_each([&](Vertex v) {
      if (g.degree(v) <= 2)
        out.push_back({"pendant-neighbourhood", {x, y, v}, {},
                       "vertex " + std::to_string(v) + " in N[" + std::to_string(y) + "] has degree " +
                           std::to_string(g.degree(v)) + " next to pendant " + std::to_string(x)});
    });
  }
  carriers.for_each([&](Vertex y) {
    (g.neighbors(y) & carriers).for_each([&](Vertex y2) {
      if (g.degree(y) <= 3)
        out.push_back({"pendant-neighbourhood", {y, y2}, {},
                       "adjacent pendant carriers " + std::to_string(y) + "," + std::to_string(y2) + " but deg(" +
                           std::to_string(y) + ") = " + std::to_string(g.degree(y))});
    });
  });
  return out;
}

/// For every degree-two path u_0..u_l with l >= 2: u_0 and u_l have no common
/// neighbour off the path.
inline std::vector<LemmaViolation> check_degree_two_path_closure(const Graph& g, int k) {
  if (k < 5) throw PreconditionError("degree-two closure check needs k >= 5");
  std::vector<LemmaViolation> out;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (int count = 3; count <= g.order(); ++count) {
    auto windows = degree_two_windows(g, count);
    if (windows.empty()) break;
    for (const auto& w : windows) {
      Vertex a = w.front(), b = w.back();
      if (a > b) continue;  // each unordered path once
      VertexSet on = VertexSet::of(g.order(), w);
      VertexSet common = (g.neighbors(a) & g.neighbors(b)) - on;
      if (common.empty()) continue;
      out.push_back({"degree-two-closure", common.to_vector(), {w},
                     "ends of degree-two path " + detail::join(w) + " share off-path neighbour " +
                         std::to_string(common.first())});
    }
  }
  return out;
}

/// For vertex-disjoint degree-two paths u_0..u_r and v_0..v_s (r, s >= 1,
/// r + s >= k - 1) whose starts share a neighbour w: some w-u_r path of
/// length k - r - 3 avoids u_0.
inline std::vector<LemmaViolation> check_two_path_link(const Graph& g, int k) {
  if (k < 5) throw PreconditionError("two-path link check needs k >= 5");
  std::vector<LemmaViolation> out;
  ExactPathSearch search(g);
  for (int count = 2; count <= g.order(); ++count) {
    auto windows = degree_two_windows(g, count);
    if (windows.empty()) break;
    const int r = count - 1;
    const int need_s = std::max(1, k - 1 - r);
    for (const auto& u : windows) {
      const Vertex u0 = u.front(), ur = u.back();
      VertexSet on_u = VertexSet::of(g.order(), u);
      std::set<Vertex> checked_w;
      g.neighbors(u0).for_each([&](Vertex w) {
        if (checked_w.count(w)) return;
        bool premise = false;
        std::vector<Vertex> witness_v0;
        g.neighbors(w).for_each([&](Vertex v0) {
          if (premise || v0 == u0 || g.degree(v0) != 2 || on_u.contains(v0)) return;
          g.neighbors(v0).for_each([&](Vertex v1) {
            if (!premise && detail::degree_two_reach(g, v0, v1, on_u) >= need_s) {
              premise = true;
              witness_v0 = {v0, v1};
            }
          });
        });
        if (!premise) return;
        checked_w.insert(w);
        const int len = k - r - 3;
        bool ok;
        if (len < 0)
          ok = false;
        else if (len == 0)
          ok = (w == ur);
        else {
          VertexSet allowed = g.vertices();
          allowed.erase(u0);
          ok = w != ur && search.find(w, ur, len, allowed).has_value();
        }
        if (!ok)
          out.push_back({"two-path-link", {w, u0, witness_v0[0]}, {u},
                         "no path of length " + std::to_string(len) + " from " + std::to_string(w) + " to " +
                             std::to_string(ur) + " avoiding " + std::to_string(u0)});
      });
    }
  }
  return out;
}

/// Starts of two vertex-disjoint degree-two paths with k - 4 edges each have
/// no common neighbour.
inline std::vector<LemmaViolation> check_disjoint_long_paths(const Graph& g, int k) {
  if (k < 7) throw PreconditionError("disjoint long path check needs k >= 7");
  std::vector<LemmaViolation> out;
  auto windows = degree_two_windows(g, k - 3);
  std::vector<std::vector<std::size_t>> by_start(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < windows.size(); ++i) by_start[static_cast<std::size_t>(windows[i].front())].push_back(i);
  for (Vertex a = 0; a < g.order(); ++a) {
    if (by_start[static_cast<std::size_t>(a)].empty()) continue;
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (by_start[static_cast<std::size_t>(b)].empty()) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      if (common.empty()) continue;
      bool found = false;
      for (std::size_t i : by_start[static_cast<std::size_t>(a)]) {
        VertexSet on = VertexSet::of(g.order(), windows[i]);
        for (std::size_t j : by_start[static_cast<std::size_t>(b)]) {
          if (VertexSet::of(g.order(), windows[j]).intersects(on)) continue;
          out.push_back({"disjoint-long-paths", {a, b, common.first()}, {windows[i], windows[j]},
                         "starts " + std::to_string(a) + "," + std::to_string(b) + " of disjoint degree-two paths share neighbour " +
                             std::to_string(common.first())});
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }
  return out;
}

/// Disconnection, or any pair at distance more than k - 1.
inline std::vector<LemmaViolation> check_connectivity_diameter(const Graph& g, int k) {
  std::vector<LemmaViolation> out;
  if (g.order() == 0) return out;
  if (!is_connected(g)) {
    auto comp = components(g);
    std::vector<Vertex> reps;
    std::set<int> seen;
    for (Vertex v = 0; v < g.order(); ++v)
      if (seen.insert(comp[static_cast<std::size_t>(v)]).second) reps.push_back(v);
    out.push_back({"connectivity-diameter", reps, {}, std::to_string(reps.size()) + " components"});
    return out;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    auto d = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (d[static_cast<std::size_t>(v)] > k - 1)
        out.push_back({"connectivity-diameter", {u, v}, {},
                       "distance " + std::to_string(d[static_cast<std::size_t>(v)]) + " exceeds " + std::to_string(k - 1)});
  }
  return out;
}

/// All checkers whose premises on k and |V| hold.
inline std::vector<LemmaViolation> check_all_lemmas(const Graph& g, int k) {
  std::vector<LemmaViolation> out;
  auto add = [&](std::vector<LemmaViolation> v) { out.insert(out.end(), v.begin(), v.end()); };
  add(check_connectivity_diameter(g, k));
  if (k >= 5) {
    if (g.order() >= 3) add(check_pendant_neighborhoods(g, k));
    add(check_degree_two_path_closure(g, k));
    add(check_two_path_link(g, k));
  }
  if (k >= 7) add(check_disjoint_long_paths(g, k));
  return out;
}

inline nlohmann::json to_json(const LemmaViolation& v) {
  return {{"lemma", v.lemma}, {"vertices", v.vertices}, {"paths", v.paths}, {"description", v.description}};
}

inline nlohmann::json to_json(const std::vector<LemmaViolation>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

/// DOT drawing of g with vertices and path edges named by violations highlighted.
inline std::string violations_to_dot(const Graph& g, const std::vector<LemmaViolation>& vs) {
  VertexSet marked(g.order());
  std::set<std::pair<Vertex, Vertex>> path_edges;
  for (const auto& v : vs) {
    for (Vertex x : v.vertices) marked.insert(x);
    for (const auto& p : v.paths)
      for (std::size_t i = 0; i + 1 < p.size(); ++i) path_edges.insert(std::minmax(p[i], p[i + 1]));
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    out << "  " << v << (marked.contains(v) ? " [style=filled, fillcolor=red]" : "") << ";\n";
  for (auto [a, b] : g.edges())
    out << "  " << a << " -- " << b << (path_edges.count({a, b}) ? " [color=red, penwidth=2]" : "") << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace satnum
