#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satnum/cycle_lemmas.hpp"
#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"
#include "satnum/rational.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

/// Parameters of the weight-distribution argument for C_{2l}-saturated graphs.
struct DischargeParams {
  int ell = 14;
  int k = 28;
  /// Degree threshold for the big-vertex class: 6l - 5.
  int c = 79;
  /// 1/(2l - 4).
  Rational alpha{1, 24};
  /// Set when l < 14 was accepted through the override; lemma-level checks
  /// then become warnings.
  bool premise_violated = false;

  static DischargeParams make(int ell, bool allow_small_ell = false) {
    if (ell < 3) throw InputError("discharging needs ell >= 3, got " + std::to_string(ell));
    if (ell < 14 && !allow_small_ell)
      throw PreconditionError("ell = " + std::to_string(ell) + " is below 14; use the small-ell override to explore");
    DischargeParams p;
    p.ell = ell;
    p.k = 2 * ell;
    p.c = 6 * ell - 5;
    p.alpha = Rational(1, 2 * ell - 4);
    p.premise_violated = ell < 14;
    return p;
  }
};

// Layer codes; values >= 0 mean D_i.
inline constexpr int kLayerM = -3;
inline constexpr int kLayerA = -2;
inline constexpr int kLayerB = -1;
inline constexpr int kLayerUnset = -4;

inline std::string layer_name(int layer) {
  switch (layer) {
    case kLayerM:
      return "M";
    case kLayerA:
      return "A";
    case kLayerB:
      return "B";
    default:
      return "D" + std::to_string(layer);
  }
}

/// A lemma-level conclusion that failed while building or classifying.
struct Finding {
  std::string check;
  std::string detail;
};

/// The black-edge forest below one D_1 vertex.
struct TreeRecord {
  enum class Status { pendant, null_tree, positive };
  Vertex top = -1;   // the D_1 vertex
  Vertex root = -1;  // its black neighbour in B or D_0
  std::vector<Vertex> members;
  int gray = 0;
  Rational beta{0};
  Status status = Status::null_tree;
  std::string shape;
  /// Layers of the childless members that carry a gray half-edge.
  std::vector<int> end_layers;
  /// Null trees joined to this one by a gray edge.
  std::vector<int> linked;
  bool in_G = false, in_F = false, in_N = false;
  int mate = -1;
  std::optional<Rational> gamma_initial;
  std::optional<Rational> gamma;
};

inline const char* to_string(TreeRecord::Status s) {
  switch (s) {
    case TreeRecord::Status::pendant:
      return "pendant";
    case TreeRecord::Status::null_tree:
      return "null";
    case TreeRecord::Status::positive:
      return "positive";
  }
  return "?";
}

struct DischargeLedger {
  DischargeParams params;
  Graph graph;
  /// Disjoint degree-two paths with 2l - 4 edges, their middles, and the
  /// maximal set of centres with pairwise disjoint balls.
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> s0, s;
  VertexSet M, A, B;
  std::vector<int> layer;
  /// Designated black neighbour; -1 outside D_0 u D.
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<int> g, eps;

  bool weighted = false, classified = false, mated = false;
  std::vector<int> tree_gray;         // g(T_v) by the bottom-up recursion
  std::vector<int> tree_gray_direct;  // g(T_v) summed over members
  std::vector<Rational> wt, wt_direct, beta;
  std::vector<int> tree_of;
  std::vector<TreeRecord> trees;

  bool settled = false;
  std::vector<Rational> income, final_weight, final_weight_dedup;
  std::vector<Rational> tree_leftover;
  std::vector<Finding> findings;

  int n() const { return graph.order(); }
  bool in_D(Vertex v) const { return layer[static_cast<std::size_t>(v)] >= 1; }
  bool is_root_class(Vertex v) const {
    int l = layer[static_cast<std::size_t>(v)];
    return l == kLayerB || l == 0;
  }
  bool is_black(Vertex u, Vertex v) const {
    return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
  }
  /// P_v: v, its black parent, ... up to the D_1 vertex.
  std::vector<Vertex> black_path(Vertex v) const {
    std::vector<Vertex> p;
    while (v >= 0 && in_D(v)) {
      p.push_back(v);
      v = parent[static_cast<std::size_t>(v)];
    }
    return p;
  }
  /// Vertices of T_v.
  std::vector<Vertex> subtree(Vertex v) const {
    std::vector<Vertex> out{v};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (Vertex c : children[static_cast<std::size_t>(out[i])]) out.push_back(c);
    return out;
  }
};

/// Ball of radius l - 1 around v, provided every vertex within l - 2 of v has degree below c.
inline std::optional<VertexSet> eligible_ball(const Graph& g, Vertex v, const DischargeParams& p) {
  g.check(v);
  auto dist = bfs_distances(g, v);
  VertexSet ball(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    int d = dist[static_cast<std::size_t>(x)];
    if (d == kUnreachable || d > p.ell - 1) continue;
    if (d <= p.ell - 2 && g.degree(x) >= p.c) return std::nullopt;
    ball.insert(x);
  }
  return ball;
}

/// Vertices by decreasing eccentricity, ties by index. Scanning centres in
/// this order starts the ball packing at the periphery.
inline std::vector<Vertex> peripheral_order(const Graph& g) {
  std::vector<std::pair<int, Vertex>> ecc;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    ecc.push_back({-*std::max_element(d.begin(), d.end()), v});
  }
  std::sort(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (auto [e, v] : ecc) out.push_back(v);
  return out;
}

/// Partition into M, A, B, D_0, ..., D_{l-2} and black-edge designation.
/// `order` is the scan order used to extend the middles to a maximal centre
/// set (vertex order when empty).
inline DischargeLedger build_partition(const Graph& g, const DischargeParams& p, const std::vector<Vertex>& order = {}) {
  DischargeLedger L;
  L.params = p;
  L.graph = g;
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);

  // Greedy disjoint degree-two paths with 2l - 4 edges, smallest vertex first.
  auto windows = [&] {
    std::vector<std::vector<Vertex>> out;
    for (auto& w : degree_two_windows(g, 2 * p.ell - 3))
      if (w.front() < w.back()) out.push_back(std::move(w));
    return out;
  }();
  std::sort(windows.begin(), windows.end(), [](const auto& a, const auto& b) {
    Vertex ma = *std::min_element(a.begin(), a.end()), mb = *std::min_element(b.begin(), b.end());
    return ma != mb ? ma < mb : a < b;
  });
  VertexSet used(n);
  for (const auto& w : windows) {
    VertexSet on = VertexSet::of(n, w);
    if (on.intersects(used)) continue;
    used |= on;
    L.paths.push_back(w);
    L.s0.push_back(w[static_cast<std::size_t>(p.ell - 2)]);
  }

  VertexSet covered(n);
  for (Vertex m : L.s0) {
    auto ball = eligible_ball(g, m, p);
    if (!ball || ball->intersects(covered)) {
      L.findings.push_back({"middle-balls-disjoint", "ball around path middle " + std::to_string(m) +
                                                         (ball ? " meets an earlier ball" : " is not eligible")});
      continue;
    }
    covered |= *ball;
    L.s.push_back(m);
  }
  std::vector<Vertex> scan = order;
  for (Vertex v = 0; v < n; ++v) scan.push_back(v);
  for (Vertex v : scan) {
    g.check(v);
    if (covered.contains(v)) continue;
    auto ball = eligible_ball(g, v, p);
    if (!ball || ball->intersects(covered)) continue;
    covered |= *ball;
    L.s.push_back(v);
  }
  L.M = covered;

  L.A = VertexSet(n);
  L.B = VertexSet(n);
  L.layer.assign(un, kLayerUnset);
  for (Vertex v = 0; v < n; ++v) {
    if (L.M.contains(v)) {
      L.layer[static_cast<std::size_t>(v)] = kLayerM;
    } else if (g.degree(v) == 1 && g.neighbors(v).intersects(L.M)) {
      L.A.insert(v);
      L.layer[static_cast<std::size_t>(v)] = kLayerA;
    } else if (g.degree(v) >= p.c) {
      L.B.insert(v);
      L.layer[static_cast<std::size_t>(v)] = kLayerB;
    }
  }
  VertexSet roots = L.B;
  for (Vertex v = 0; v < n; ++v)
    if (L.layer[static_cast<std::size_t>(v)] == kLayerUnset && g.neighbors(v).intersects(L.M)) roots.insert(v);
  VertexSet rest = g.vertices() - L.M - L.A;
  auto dist = bfs_distances(g, roots, rest);
  for (Vertex v = 0; v < n; ++v) {
    if (L.layer[static_cast<std::size_t>(v)] != kLayerUnset) continue;
    int d = dist[static_cast<std::size_t>(v)];
    if (d == kUnreachable || d > p.ell - 2)
      throw TheoremViolation("vertex " + std::to_string(v) + " lies at distance " +
                             (d == kUnreachable ? std::string("infinity") : std::to_string(d)) +
                             " from B u D_0, so D_{l-1} is nonempty and the centre set is not maximal");
    L.layer[static_cast<std::size_t>(v)] = d;
  }

  // Black designation: smallest-index neighbour in M for D_0, in B u D_{i-1} for D_i.
  L.parent.assign(un, -1);
  L.children.assign(un, {});
  for (Vertex v = 0; v < n; ++v) {
    const int i = L.layer[static_cast<std::size_t>(v)];
    if (i < 0) continue;
    Vertex pick = -1;
    g.neighbors(v).for_each([&](Vertex x) {
      if (pick >= 0) return;
      int lx = L.layer[static_cast<std::size_t>(x)];
      if (i == 0 ? lx == kLayerM : (lx == kLayerB || lx == i - 1)) pick = x;
    });
    if (pick < 0) throw std::logic_error("build_partition: no black edge available at " + std::to_string(v));
    L.parent[static_cast<std::size_t>(v)] = pick;
    if (i >= 1 && L.in_D(pick)) L.children[static_cast<std::size_t>(pick)].push_back(v);
  }
  L.g.assign(un, 0);
  L.eps.assign(un, 0);
  for (Vertex v = 0; v < n; ++v) {
    int black = 0;
    g.neighbors(v).for_each([&](Vertex x) { black += L.is_black(v, x) ? 1 : 0; });
    L.g[static_cast<std::size_t>(v)] = g.degree(v) - black;
    if (g.degree(v) <= 1) {
      L.eps[static_cast<std::size_t>(v)] = 0;
    } else {
      bool pendant_nb = false;
      g.neighbors(v).for_each([&](Vertex x) { pendant_nb = pendant_nb || g.degree(x) == 1; });
      L.eps[static_cast<std::size_t>(v)] = pendant_nb ? 2 : 1;
    }
  }
  return L;
}

/// g(T_v), wt and beta for every D vertex, each computed two ways.
inline DischargeLedger compute_weights(DischargeLedger L) {
  const auto& p = L.params;
  const int n = L.n();
  const auto un = static_cast<std::size_t>(n);
  L.tree_gray.assign(un, 0);
  L.tree_gray_direct.assign(un, 0);
  L.wt.assign(un, Rational(0));
  L.wt_direct.assign(un, Rational(0));
  L.beta.assign(un, Rational(0));

  std::vector<Vertex> by_depth;
  for (Vertex v = 0; v < n; ++v)
    if (L.in_D(v)) by_depth.push_back(v);
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](Vertex a, Vertex b) { return L.layer[static_cast<std::size_t>(a)] > L.layer[static_cast<std::size_t>(b)]; });

  for (Vertex v : by_depth) {
    int t = L.g[static_cast<std::size_t>(v)];
    for (Vertex c : L.children[static_cast<std::size_t>(v)]) t += L.tree_gray[static_cast<std::size_t>(c)];
    L.tree_gray[static_cast<std::size_t>(v)] = t;
    int direct = 0;
    for (Vertex x : L.subtree(v)) direct += L.g[static_cast<std::size_t>(x)];
    L.tree_gray_direct[static_cast<std::size_t>(v)] = direct;
    const int i = L.layer[static_cast<std::size_t>(v)];
    L.wt[static_cast<std::size_t>(v)] =
        Rational(t + (p.ell - 2 - i) * L.g[static_cast<std::size_t>(v)]) * p.alpha;
  }
  // Each gray half-edge at x sends alpha to every vertex of P_x; x keeps the rest of its 1/2.
  for (Vertex x : by_depth) {
    const int gx = L.g[static_cast<std::size_t>(x)];
    if (gx == 0) continue;
    auto path = L.black_path(x);
    for (Vertex y : path) L.wt_direct[static_cast<std::size_t>(y)] += p.alpha * gx;
    L.wt_direct[static_cast<std::size_t>(x)] += Rational(gx) * (Rational(1, 2) - p.alpha * static_cast<long long>(path.size()));
  }
  for (Vertex v : by_depth) {
    Rational b = L.wt[static_cast<std::size_t>(v)] - p.alpha;
    for (Vertex c : L.children[static_cast<std::size_t>(v)]) b += L.beta[static_cast<std::size_t>(c)];
    L.beta[static_cast<std::size_t>(v)] = b;
  }

  L.tree_of.assign(un, -1);
  L.trees.clear();
  for (Vertex u = 0; u < n; ++u) {
    if (L.layer[static_cast<std::size_t>(u)] != 1) continue;
    TreeRecord t;
    t.top = u;
    t.root = L.parent[static_cast<std::size_t>(u)];
    t.members = L.subtree(u);
    t.gray = L.tree_gray[static_cast<std::size_t>(u)];
    t.beta = L.beta[static_cast<std::size_t>(u)];
    if (L.graph.degree(u) == 1)
      t.status = TreeRecord::Status::pendant;
    else
      t.status = t.beta > 0 ? TreeRecord::Status::positive : TreeRecord::Status::null_tree;
    for (Vertex x : t.members) {
      L.tree_of[static_cast<std::size_t>(x)] = static_cast<int>(L.trees.size());
      if (L.children[static_cast<std::size_t>(x)].empty() && L.g[static_cast<std::size_t>(x)] > 0)
        t.end_layers.push_back(L.layer[static_cast<std::size_t>(x)]);
    }
    std::sort(t.end_layers.begin(), t.end_layers.end());
    L.trees.push_back(std::move(t));
  }
  L.weighted = true;
  return L;
}

namespace detail {

// Shape predicates on T_x, written against the ledger.
struct Shapes {
  const DischargeLedger& L;

  int layer(Vertex v) const { return L.layer[static_cast<std::size_t>(v)]; }
  int gray(Vertex v) const { return L.g[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& kids(Vertex v) const { return L.children[static_cast<std::size_t>(v)]; }
  bool pendant(Vertex v) const { return L.graph.degree(v) == 1; }

  /// T_x is a path down from x whose only gray half-edge sits at its far end.
  std::optional<Vertex> path_end(Vertex x) const {
    while (true) {
      if (kids(x).empty()) return gray(x) == 1 ? std::optional<Vertex>(x) : std::nullopt;
      if (kids(x).size() != 1 || gray(x) != 0) return std::nullopt;
      x = kids(x).front();
    }
  }
  bool path_to(Vertex x, int depth) const {
    auto e = path_end(x);
    return e && layer(*e) == depth;
  }
  bool strict_path_to(Vertex x, int depth) const {
    auto e = path_end(x);
    return e && *e != x && layer(*e) == depth;
  }
  int top() const { return L.params.ell - 2; }

  bool fig1(Vertex x) const { return path_to(x, top()); }
  bool fig2_i(Vertex x) const { return strict_path_to(x, top() - 1); }
  bool fig2_ii(Vertex x) const {
    return gray(x) == 0 && kids(x).size() == 2 && fig1(kids(x)[0]) && fig1(kids(x)[1]);
  }
  // One pendant child and one child w with g(w) = 0 whose two branches end in the last layer.
  bool fig2_iii(Vertex x) const {
    if (gray(x) != 0 || kids(x).size() != 2) return false;
    for (int j = 0; j < 2; ++j) {
      Vertex v = kids(x)[static_cast<std::size_t>(j)], w = kids(x)[static_cast<std::size_t>(1 - j)];
      if (pendant(v) && fig2_ii(w)) return true;
    }
    return false;
  }
  bool two_mixed(Vertex x) const {
    if (gray(x) != 0 || kids(x).size() != 2) return false;
    Vertex a = kids(x)[0], b = kids(x)[1];
    return (path_to(a, top()) && path_to(b, top() - 1)) || (path_to(a, top() - 1) && path_to(b, top()));
  }
  /// The five shapes with beta = 2 alpha; 0 when none applies.
  int beta2_class(Vertex x) const {
    if (strict_path_to(x, top() - 2)) return 1;
    if (gray(x) == 0 && kids(x).size() == 3 && std::all_of(kids(x).begin(), kids(x).end(), [&](Vertex c) { return fig1(c); }))
      return 2;
    if (L.eps[static_cast<std::size_t>(x)] == 1 && two_mixed(x)) return 3;
    if (gray(x) == 0 && kids(x).size() == 1 && fig2_ii(kids(x)[0])) return 4;
    if (gray(x) == 0 && kids(x).size() == 2)
      for (int j = 0; j < 2; ++j) {
        Vertex v = kids(x)[static_cast<std::size_t>(j)], w = kids(x)[static_cast<std::size_t>(1 - j)];
        if (pendant(v) && two_mixed(w)) return 5;
      }
    return 0;
  }
  /// Gray neighbour of a childless vertex with one gray half-edge.
  Vertex gray_neighbor(Vertex e) const {
    Vertex out = -1;
    L.graph.neighbors(e).for_each([&](Vertex y) {
      if (!L.is_black(e, y)) out = y;
    });
    return out;
  }
  bool joined_to_null(Vertex e) const {
    Vertex y = gray_neighbor(e);
    if (y < 0) return false;
    int t = L.tree_of[static_cast<std::size_t>(y)];
    return t >= 0 && L.trees[static_cast<std::size_t>(t)].status == TreeRecord::Status::null_tree;
  }
  /// Two-branch tree at a degree-3 top whose branch ends lie in the last two
  /// layers, each joined to a null tree exactly when it lies in the earlier one.
  bool family_F(const TreeRecord& t) const {
    Vertex u = t.top;
    if (t.status != TreeRecord::Status::positive || gray(u) != 0 || L.graph.degree(u) != 3 || kids(u).size() != 2) return false;
    if (gray(t.root) != 0 || L.eps[static_cast<std::size_t>(t.root)] != 2) return false;
    for (Vertex c : kids(u)) {
      auto e = path_end(c);
      if (!e || (layer(*e) != top() && layer(*e) != top() - 1)) return false;
      if (joined_to_null(*e) != (layer(*e) == top() - 1)) return false;
    }
    return true;
  }
};

}  // namespace detail

/// Gamma of a positive tree, read off its root.
inline Rational positive_gamma(const DischargeLedger& L, Vertex x, bool* defined = nullptr) {
  const Rational a = L.params.alpha;
  const int g = L.g[static_cast<std::size_t>(x)], e = L.eps[static_cast<std::size_t>(x)], d = L.graph.degree(x);
  if (defined) *defined = true;
  if (g > 0) return a / 3;
  if (e == 1) return a;
  if (e == 2 && d == 3) return 2 * a;
  if (e == 2 && d >= 4) return a;
  if (defined) *defined = false;
  return Rational(0);
}

inline Rational null_gamma(const DischargeLedger& L, Vertex y) {
  return L.g[static_cast<std::size_t>(y)] == 0 ? L.params.alpha : L.params.alpha / 3;
}

/// Shape tags, gray links between trees, gamma and the G/F/N families, plus
/// the shape statements checked on every subtree of the first layers.
inline DischargeLedger classify_trees(DischargeLedger L) {
  if (!L.weighted) L = compute_weights(std::move(L));
  const auto& p = L.params;
  const Rational a = p.alpha;
  detail::Shapes sh{L};

  for (Vertex v = 0; v < L.n(); ++v) {
    if (!L.in_D(v)) continue;
    const int i = L.layer[static_cast<std::size_t>(v)];
    const int gt = L.tree_gray[static_cast<std::size_t>(v)];
    const Rational b = L.beta[static_cast<std::size_t>(v)];
    const bool pend = L.graph.degree(v) == 1;
    if ((gt == 0) != pend)
      L.findings.push_back({"gray-free-subtree", "T_" + std::to_string(v) + " has g = " + std::to_string(gt) +
                                                     " but deg = " + std::to_string(L.graph.degree(v))});
    if (gt == 1 && !sh.path_end(v))
      L.findings.push_back({"single-gray-subtree", "T_" + std::to_string(v) + " has one gray half-edge but is not a path to it"});
    if (i <= 4 && b == Rational(0) && !sh.fig1(v))
      L.findings.push_back({"null-shape", "T_" + std::to_string(v) + " in " + layer_name(i) + " has beta 0 but is not a path to the last layer"});
    if ((i == 2 || i == 3) && b == a && !(sh.fig2_i(v) || sh.fig2_ii(v) || sh.fig2_iii(v)))
      L.findings.push_back({"beta-alpha-shape", "T_" + std::to_string(v) + " in " + layer_name(i) + " has beta alpha and no listed shape"});
    if (i == 2 && b == 2 * a && sh.beta2_class(v) == 0)
      L.findings.push_back({"beta-2alpha-shape", "T_" + std::to_string(v) + " in D2 has beta 2 alpha and no listed shape"});
  }

  for (std::size_t t = 0; t < L.trees.size(); ++t) {
    auto& T = L.trees[t];
    std::set<int> linked;
    for (Vertex x : T.members)
      L.graph.neighbors(x).for_each([&](Vertex y) {
        if (L.is_black(x, y)) return;
        int o = L.tree_of[static_cast<std::size_t>(y)];
        if (o >= 0 && static_cast<std::size_t>(o) != t && L.trees[static_cast<std::size_t>(o)].status == TreeRecord::Status::null_tree)
          linked.insert(o);
      });
    T.linked.assign(linked.begin(), linked.end());
  }
  for (auto& T : L.trees) {
    const Vertex u = T.top;
    if (T.status == TreeRecord::Status::pendant) {
      T.shape = "pendant";
    } else if (T.status == TreeRecord::Status::null_tree) {
      T.shape = sh.fig1(u) ? "null" : "null-irregular";
      T.in_N = !T.linked.empty();
    } else {
      T.in_F = sh.family_F(T);
      T.in_G = sh.fig2_i(u) && !T.linked.empty();
      if (T.in_F)
        T.shape = "F-family";
      else if (T.beta == a && sh.fig2_i(u))
        T.shape = "fig2-i";
      else if (T.beta == a && sh.fig2_ii(u))
        T.shape = "fig2-ii";
      else if (T.beta == a && sh.fig2_iii(u))
        T.shape = "fig2-iii";
      else if (int c = T.beta == 2 * a ? sh.beta2_class(u) : 0; c > 0)
        T.shape = "beta2-" + std::string(c == 1 ? "i" : c == 2 ? "ii" : c == 3 ? "iii" : c == 4 ? "iv" : "v");
      else
        T.shape = "other-positive";
      bool ok = true;
      T.gamma_initial = positive_gamma(L, T.root, &ok);
      if (!ok)
        L.findings.push_back({"gamma-case", "root " + std::to_string(T.root) + " of positive tree at " + std::to_string(u) +
                                                " has degree " + std::to_string(L.graph.degree(T.root)) + " and a pendant neighbour"});
    }
  }
  for (auto& T : L.trees) {
    if (T.status != TreeRecord::Status::positive) continue;
    for (int o : T.linked) {
      auto& N = L.trees[static_cast<std::size_t>(o)];
      if (!N.gamma_initial) N.gamma_initial = null_gamma(L, N.root);
    }
  }
  for (auto& T : L.trees) T.gamma = T.gamma_initial;
  L.classified = true;
  return L;
}

/// Pairs every G-tree (and every N-tree with a single link) with its mate and
/// moves gamma between G-trees and their mates by root degree.
inline DischargeLedger resolve_mates(DischargeLedger L) {
  if (!L.classified) L = classify_trees(std::move(L));
  const Rational a = L.params.alpha;
  for (std::size_t t = 0; t < L.trees.size(); ++t) {
    auto& T = L.trees[t];
    if (!(T.in_G || T.in_N) || T.linked.size() != 1) {
      if (T.in_G) L.findings.push_back({"mate-unique", "G-tree at " + std::to_string(T.top) + " has " + std::to_string(T.linked.size()) + " linked null trees"});
      continue;
    }
    auto& V = L.trees[static_cast<std::size_t>(T.linked.front())];
    T.mate = T.linked.front();
    if (V.mate < 0) V.mate = static_cast<int>(t);
    if (!T.in_G) continue;
    if (T.root == V.root) {
      L.findings.push_back({"mate-roots", "mated trees at " + std::to_string(T.top) + " and " + std::to_string(V.top) +
                                              " share root " + std::to_string(T.root)});
    }
    const int du = L.graph.degree(T.root), dv = L.graph.degree(V.root);
    if (du == 2 && dv >= 3) {
      T.gamma = a;
      V.gamma = Rational(0);
    } else if (du >= 3 && dv == 2) {
      T.gamma = Rational(0);
      V.gamma = a;
    } else if (du >= 3 && dv >= 3) {
      T.gamma = a / 2;
      V.gamma = a / 2;
    } else {
      L.findings.push_back({"mate-degrees", "mated trees at " + std::to_string(T.top) + " and " + std::to_string(V.top) +
                                                " both have roots of degree 2"});
      T.gamma = a;
      V.gamma = Rational(0);
    }
  }
  for (auto& T : L.trees)
    if (T.in_N) T.gamma = Rational(0);
  L.mated = true;
  return L;
}

inline bool is_zero_tree(const TreeRecord& t) { return t.in_N || (t.gamma && *t.gamma == Rational(0)); }

/// Final distribution: every D vertex keeps 1 + alpha (passing alpha to a
/// pendant child), trees pay gamma out of their surplus to the roots, and
/// roots collect their black edge, half of each gray edge and the payments.
inline DischargeLedger settle_weights(DischargeLedger L) {
  if (!L.mated) L = resolve_mates(std::move(L));
  const Rational a = L.params.alpha;
  const int n = L.n();
  const auto un = static_cast<std::size_t>(n);
  L.income.assign(un, Rational(0));
  L.final_weight.assign(un, Rational(0));
  L.final_weight_dedup.assign(un, Rational(0));
  L.tree_leftover.assign(L.trees.size(), Rational(0));

  auto pendant_children = [&](Vertex v) {
    int c = 0;
    L.graph.neighbors(v).for_each([&](Vertex x) {
      if (L.graph.degree(x) == 1 && L.parent[static_cast<std::size_t>(x)] == v) ++c;
    });
    return c;
  };

  std::vector<Rational> pool(L.trees.size(), Rational(0));
  for (Vertex v = 0; v < n; ++v) {
    if (!L.in_D(v)) continue;
    Rational in = 1 + L.wt[static_cast<std::size_t>(v)];
    if (L.graph.degree(v) == 1) in += a;
    L.income[static_cast<std::size_t>(v)] = in;
    Rational surplus = in - a * pendant_children(v) - (1 + a);
    L.final_weight[static_cast<std::size_t>(v)] = 1 + a + std::min(Rational(0), surplus);
    pool[static_cast<std::size_t>(L.tree_of[static_cast<std::size_t>(v)])] += std::max(Rational(0), surplus);
  }

  std::vector<Rational> received(un, Rational(0));
  for (std::size_t t = 0; t < L.trees.size(); ++t) {
    const auto& T = L.trees[t];
    if (T.status != TreeRecord::Status::positive) continue;
    std::vector<std::pair<Vertex, Rational>> due;
    if (T.in_G && T.mate >= 0) {
      const auto& V = L.trees[static_cast<std::size_t>(T.mate)];
      due.push_back({T.root, T.gamma.value_or(0)});
      due.push_back({V.root, V.gamma.value_or(0)});
    } else {
      for (int o : T.linked) {
        const auto& N = L.trees[static_cast<std::size_t>(o)];
        due.push_back({N.root, N.gamma.value_or(0)});
      }
      due.push_back({T.root, T.gamma.value_or(0)});
    }
    Rational& left = pool[t];
    for (auto [x, amount] : due) {
      Rational paid = std::min(amount, left);
      if (paid < amount && !T.in_F)
        L.findings.push_back({"tree-budget", "tree at " + std::to_string(T.top) + " cannot pay " + to_string(amount) + " to " + std::to_string(x)});
      received[static_cast<std::size_t>(x)] += paid;
      left -= paid;
    }
  }
  for (std::size_t t = 0; t < L.trees.size(); ++t) L.tree_leftover[t] = pool[t];

  for (Vertex x = 0; x < n; ++x) {
    if (!L.is_root_class(x)) continue;
    Rational base = (L.layer[static_cast<std::size_t>(x)] == 0 ? Rational(1) : Rational(0)) + received[static_cast<std::size_t>(x)];
    Rational half = Rational(L.g[static_cast<std::size_t>(x)], 2);
    Rational half_dedup = half;
    if (L.B.contains(x)) {
      // Gray edges between two B vertices counted once, at the smaller end.
      L.graph.neighbors(x).for_each([&](Vertex y) {
        if (L.B.contains(y) && y < x && !L.is_black(x, y)) half_dedup -= Rational(1, 2);
      });
    }
    const Rational out = a * pendant_children(x);
    L.income[static_cast<std::size_t>(x)] = base + half;
    L.final_weight[static_cast<std::size_t>(x)] = base + half - out;
    L.final_weight_dedup[static_cast<std::size_t>(x)] = base + half_dedup - out;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!L.is_root_class(v)) L.final_weight_dedup[static_cast<std::size_t>(v)] = L.final_weight[static_cast<std::size_t>(v)];
  L.settled = true;
  return L;
}

struct AuditCheck {
  std::string name;
  /// "invariant" checks always stop the run; "lemma" checks only with l >= 14.
  std::string level;
  bool passed = true;
  long long failures = 0;
  std::string detail;
  bool hard = true;
};

struct AuditReport {
  DischargeLedger ledger;
  std::vector<AuditCheck> checks;
  std::vector<std::string> warnings;

  std::size_t size_M = 0, size_A = 0, size_B = 0, size_D0 = 0, size_D = 0;
  std::size_t trees = 0, positive = 0, null_trees = 0, pendant = 0;
  std::size_t family_G = 0, family_F = 0, family_N = 0;
  std::vector<Vertex> f_roots;
  long long edges = 0;
  /// |E| - (1 + alpha)|V - (M u A)|.
  Rational global_slack{0};
  /// Sum over F-roots of how far each falls below 1 + alpha.
  Rational f_root_deficit{0};
  /// Smallest final weight over non-F-roots of B u D_0 u D, both B conventions.
  std::optional<Rational> min_final, min_final_dedup;
  /// Weight never handed to a vertex: half gray edges at M u A and unspent tree surplus.
  Rational unassigned{0};

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed || !c.hard; });
  }
  const AuditCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::vector<const AuditCheck*> hard_failures() const {
    std::vector<const AuditCheck*> out;
    for (const auto& c : checks)
      if (!c.passed && c.hard) out.push_back(&c);
    return out;
  }
};

/// Every per-vertex and per-tree inequality of the argument on one instance.
inline AuditReport audit(DischargeLedger L) {
  if (!L.settled) L = settle_weights(std::move(L));
  const auto& p = L.params;
  const Rational a = p.alpha;
  const int n = L.n();
  AuditReport R;

  auto add = [&](std::string name, std::string level, long long failures, std::string detail) {
    AuditCheck c;
    c.name = std::move(name);
    c.level = level;
    c.failures = failures;
    c.passed = failures == 0;
    c.detail = std::move(detail);
    c.hard = level == "invariant" || !p.premise_violated;
    if (!c.passed && !c.hard) R.warnings.push_back(c.name + ": " + c.detail);
    R.checks.push_back(std::move(c));
  };
  auto first = [](const std::string& cur, const std::string& msg) { return cur.empty() ? msg : cur; };

  // Partition and black edges.
  {
    long long bad = 0;
    std::string why;
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      int l = L.layer[static_cast<std::size_t>(v)];
      bool member = (l == kLayerM) == L.M.contains(v) && (l == kLayerA) == L.A.contains(v) && (l == kLayerB) == L.B.contains(v);
      if (!member || l < kLayerM || l > p.ell - 2) {
        ++bad;
        why = first(why, "vertex " + std::to_string(v) + " has label " + layer_name(l));
      }
      if (l == 0) ++R.size_D0;
      if (l >= 1) ++R.size_D;
      ++total;
    }
    R.size_M = static_cast<std::size_t>(L.M.size());
    R.size_A = static_cast<std::size_t>(L.A.size());
    R.size_B = static_cast<std::size_t>(L.B.size());
    if (R.size_M + R.size_A + R.size_B + R.size_D0 + R.size_D != total) ++bad;
    add("partition", "invariant", bad, first(why, std::to_string(n) + " vertices in " + std::to_string(p.ell + 2) + " classes"));
  }
  {
    long long bad = 0;
    std::string why;
    for (Vertex v = 0; v < n; ++v) {
      int l = L.layer[static_cast<std::size_t>(v)];
      Vertex q = L.parent[static_cast<std::size_t>(v)];
      if (l < 0) {
        if (q != -1) ++bad;
        continue;
      }
      int lq = q < 0 ? kLayerUnset : L.layer[static_cast<std::size_t>(q)];
      bool okq = q >= 0 && L.graph.has_edge(v, q) && (l == 0 ? lq == kLayerM : (lq == kLayerB || lq == l - 1));
      if (!okq) {
        ++bad;
        why = first(why, "vertex " + std::to_string(v) + " has no valid black edge");
      }
      if (q >= 0 && L.parent[static_cast<std::size_t>(q)] == v) {
        ++bad;
        why = first(why, "edge " + std::to_string(v) + "-" + std::to_string(q) + " designated twice");
      }
    }
    long long gray_total = 0, black_total = 0;
    for (Vertex v = 0; v < n; ++v) {
      gray_total += L.g[static_cast<std::size_t>(v)];
      black_total += L.layer[static_cast<std::size_t>(v)] >= 0;
    }
    if (gray_total != 2 * (L.graph.size() - black_total)) {
      ++bad;
      why = first(why, "gray half-edge total does not match");
    }
    add("black-edges", "invariant", bad, first(why, std::to_string(black_total) + " black edges"));
  }

  // Weight identities.
  {
    long long bad4 = 0, bad5 = 0;
    Rational sum_wt(0);
    long long gray_D = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!L.in_D(v)) continue;
      auto i = static_cast<std::size_t>(v);
      bad4 += L.tree_gray[i] != L.tree_gray_direct[i];
      bad5 += L.wt[i] != L.wt_direct[i];
      sum_wt += L.wt[i];
      gray_D += L.g[i];
    }
    add("subtree-gray-recursion", "invariant", bad4, "bottom-up g(T_v) equals the member sum");
    add("weight-closed-form", "invariant", bad5, "closed-form wt equals the half-edge distribution");
    add("conservation", "invariant", sum_wt == Rational(gray_D, 2) ? 0 : 1,
        "sum of wt over D = " + to_string(sum_wt) + ", gray half-edges at D / 2 = " + to_string(Rational(gray_D, 2)));
  }
  {
    long long bad8 = 0, badp = 0, bad7i = 0, bad7ii = 0;
    std::string w8, w7;
    for (Vertex v = 0; v < n; ++v) {
      if (!L.in_D(v)) continue;
      auto i = static_cast<std::size_t>(v);
      const int d = L.graph.degree(v), e = L.eps[i];
      if (d == 1) {
        badp += L.beta[i] != -a;
      } else {
        Rational s(0);
        for (Vertex x : L.subtree(v)) s += L.wt[static_cast<std::size_t>(x)] - a * L.eps[static_cast<std::size_t>(x)];
        if (s != L.beta[i]) {
          ++bad8;
          w8 = first(w8, "T_" + std::to_string(v));
        }
        if (L.wt[i] - a * e < 0) ++bad7ii;
      }
      if (L.wt[i] < a * static_cast<long long>((d - e) * e)) {
        ++bad7i;
        w7 = first(w7, "vertex " + std::to_string(v) + " wt " + to_string(L.wt[i]));
      }
    }
    add("beta-sum-identity", "invariant", bad8, first(w8, "beta(T_v) = sum (wt - eps alpha) for deg >= 2"));
    add("pendant-beta", "invariant", badp, "beta = -alpha on single pendant trees");
    add("weight-lower-bound", "lemma", bad7i, first(w7, "wt >= (deg - eps) eps alpha"));
    add("weight-surplus", "lemma", bad7ii, "wt - eps alpha >= 0 for deg >= 2");
  }
  {
    long long bad = 0;
    const Rational unit = a / 6;
    auto chk = [&](const Rational& x) { bad += (x / unit).denominator() != 1; };
    for (Vertex v = 0; v < n; ++v) {
      chk(L.wt[static_cast<std::size_t>(v)]);
      chk(L.final_weight[static_cast<std::size_t>(v)]);
    }
    for (const auto& t : L.trees)
      if (t.gamma) chk(*t.gamma);
    add("alpha-sixths", "invariant", bad, "weights are multiples of alpha/6");
  }

  // Findings collected while building and classifying.
  for (std::string name : {"middle-balls-disjoint", "gray-free-subtree", "single-gray-subtree", "null-shape",
                           "beta-alpha-shape", "beta-2alpha-shape", "gamma-case", "mate-unique", "mate-roots",
                           "mate-degrees", "tree-budget"}) {
    long long c = 0;
    std::string why;
    for (const auto& f : L.findings)
      if (f.check == name) {
        ++c;
        why = first(why, f.detail);
      }
    add(name, "lemma", c, why);
  }

  // Tree families and the surplus inequality.
  VertexSet f_roots(n);
  {
    long long bad = 0;
    std::string why;
    for (const auto& T : L.trees) {
      ++R.trees;
      R.positive += T.status == TreeRecord::Status::positive;
      R.null_trees += T.status == TreeRecord::Status::null_tree;
      R.pendant += T.status == TreeRecord::Status::pendant;
      R.family_G += T.in_G;
      R.family_F += T.in_F;
      R.family_N += T.in_N;
      if (T.in_F) f_roots.insert(T.root);
      if (T.status != TreeRecord::Status::positive || T.in_G || T.in_F) continue;
      Rational need = T.gamma_initial.value_or(0);
      for (int o : T.linked) need += L.trees[static_cast<std::size_t>(o)].gamma_initial.value_or(0);
      if (T.beta < need) {
        ++bad;
        why = first(why, "tree at " + std::to_string(T.top) + ": beta " + to_string(T.beta) + " < " + to_string(need));
      }
    }
    add("tree-surplus", "lemma", bad, first(why, "beta >= gamma + linked gammas outside G and F"));
    add("F-count", "lemma", R.family_F <= 3 * R.size_M ? 0 : 1,
        "|F| = " + std::to_string(R.family_F) + ", 3|M| = " + std::to_string(3 * R.size_M));
  }
  R.f_roots = f_roots.to_vector();

  // Root predicates on 0-trees.
  {
    std::map<Vertex, std::vector<const TreeRecord*>> at;
    for (const auto& T : L.trees) at[T.root].push_back(&T);
    long long bad13 = 0, bad14 = 0;
    std::string w13, w14;
    for (const auto& [x, ts] : at) {
      long long zeros = 0;
      bool half = false;
      for (const auto* t : ts) {
        zeros += is_zero_tree(*t);
        half = half || (!t->in_N && t->gamma && *t->gamma == a / 2);
      }
      if (zeros >= 2 && L.g[static_cast<std::size_t>(x)] == 0) {
        ++bad13;
        w13 = first(w13, "root " + std::to_string(x));
      }
      if (zeros >= 1 && half && L.graph.degree(x) == 3) {
        ++bad14;
        w14 = first(w14, "root " + std::to_string(x));
      }
    }
    add("zero-trees-need-gray", "lemma", bad13, first(w13, "two 0-trees on a root force a gray edge there"));
    add("zero-and-half-trees", "lemma", bad14, first(w14, "no degree-3 root carries a 0-tree and an alpha/2-tree"));
  }

  // Final weights.
  {
    long long bad = 0, badB = 0;
    std::string why, whyB;
    for (Vertex v = 0; v < n; ++v) {
      int l = L.layer[static_cast<std::size_t>(v)];
      if (l < kLayerB) continue;
      const Rational fw = L.final_weight[static_cast<std::size_t>(v)];
      const Rational fd = L.final_weight_dedup[static_cast<std::size_t>(v)];
      if (f_roots.contains(v)) {
        R.f_root_deficit += std::max(Rational(0), 1 + a - fw);
        continue;
      }
      R.min_final = R.min_final ? std::min(*R.min_final, fw) : fw;
      R.min_final_dedup = R.min_final_dedup ? std::min(*R.min_final_dedup, fd) : fd;
      if (fw < 1 + a) {
        ++bad;
        why = first(why, layer_name(l) + " vertex " + std::to_string(v) + " ends with " + to_string(fw));
      }
      if (l == kLayerB && L.income[static_cast<std::size_t>(v)] < 1 + 2 * a) {
        ++badB;
        whyB = first(whyB, "B vertex " + std::to_string(v) + " collects " + to_string(L.income[static_cast<std::size_t>(v)]));
      }
    }
    add("final-weight", "lemma", bad, first(why, "every vertex outside M, A and the F-roots ends with >= 1 + alpha"));
    add("big-vertex-weight", "lemma", badB, first(whyB, "every B vertex collects >= 1 + 2 alpha"));
  }
  {
    Rational total(0);
    for (Vertex v = 0; v < n; ++v)
      if (L.layer[static_cast<std::size_t>(v)] >= kLayerB) total += L.final_weight[static_cast<std::size_t>(v)];
    Rational gray_MA(0);
    for (Vertex v = 0; v < n; ++v)
      if (L.layer[static_cast<std::size_t>(v)] < kLayerB) gray_MA += Rational(L.g[static_cast<std::size_t>(v)], 2);
    Rational left(0);
    for (const auto& x : L.tree_leftover) left += x;
    R.unassigned = gray_MA + left;
    R.edges = L.graph.size();
    add("weight-flow", "invariant", total + R.unassigned == Rational(R.edges) ? 0 : 1,
        "assigned " + to_string(total) + " + unassigned " + to_string(R.unassigned) + " = |E| = " + std::to_string(R.edges));
    const long long outside = n - static_cast<long long>(R.size_M + R.size_A);
    R.global_slack = Rational(R.edges) - (1 + a) * outside;
    add("edge-count", "lemma", R.global_slack >= 0 ? 0 : 1,
        "|E| - (1 + alpha)|V - (M u A)| = " + to_string(R.global_slack) + ", F-root deficit " + to_string(R.f_root_deficit));
  }
  R.ledger = std::move(L);
  return R;
}

/// Saturation check (unless assumed) followed by every phase of the audit.
inline AuditReport run_discharging(const Graph& g, const DischargeParams& p, bool assume_saturated = false,
                                   const std::vector<Vertex>& order = {}) {
  if (!assume_saturated) {
    auto cert = verify_saturated(g, Pattern::cycle(p.k));
    if (!cert.saturated())
      throw PreconditionError("graph is not C" + std::to_string(p.k) + "-saturated (" + to_string(cert.status) + ")");
  }
  return audit(build_partition(g, p, order));
}

// ---------------------------------------------------------------------------
// Removing surplus parallel paths

struct ContractionResult {
  Graph graph;
  int removed_paths = 0;
  /// Original index of every vertex kept, in new-index order.
  std::vector<Vertex> kept;
  Rational excess_before{0}, excess_after{0};
};

/// |E| - (1 + alpha)|V|.
inline Rational edge_excess(const Graph& g, const DischargeParams& p) {
  return Rational(g.size()) - (1 + p.alpha) * static_cast<long long>(g.order());
}

/// Where more than two maximal degree-two paths with 2l - 5 edges join the
/// same pair of vertices, deletes all but the two with smallest vertices.
/// The result must still be C_{2l}-saturated.
inline ContractionResult path_contraction_reduce(const Graph& g, const DischargeParams& p, bool verify = true) {
  const int count = 2 * p.ell - 4;
  std::map<std::pair<Vertex, Vertex>, std::vector<const Path*>> groups;
  auto dec = degree_two_paths(g);
  for (const auto& path : dec.paths) {
    if (static_cast<int>(path.vertices.size()) != count) continue;
    auto outer = [&](Vertex end, Vertex inner) {
      Vertex o = -1;
      g.neighbors(end).for_each([&](Vertex y) {
        if (y != inner) o = y;
      });
      return o;
    };
    Vertex a = path.front(), b = path.back();
    Vertex x, y;
    if (count == 1) {
      auto nb = g.neighbors(a).to_vector();
      x = nb[0];
      y = nb[1];
    } else {
      x = outer(a, path.vertices[1]);
      y = outer(b, path.vertices[path.vertices.size() - 2]);
    }
    groups[std::minmax(x, y)].push_back(&path);
  }
  VertexSet drop(g.order());
  int removed = 0;
  for (auto& [pair, list] : groups) {
    if (list.size() <= 2) continue;
    for (std::size_t i = 2; i < list.size(); ++i) {
      for (Vertex v : list[i]->vertices) drop.insert(v);
      ++removed;
    }
  }
  ContractionResult out;
  out.removed_paths = removed;
  out.kept = (g.vertices() - drop).to_vector();
  out.graph = removed ? induced_subgraph(g, out.kept) : g;
  out.excess_before = edge_excess(g, p);
  out.excess_after = edge_excess(out.graph, p);
  if (out.excess_before != out.excess_after)
    throw TheoremViolation("path removal changed |E| - (1 + alpha)|V| from " + to_string(out.excess_before) + " to " +
                           to_string(out.excess_after));
  if (verify && removed) {
    auto cert = verify_saturated(out.graph, Pattern::cycle(p.k));
    if (!cert.saturated())
      throw TheoremViolation("graph is no longer C" + std::to_string(p.k) + "-saturated after removing " +
                             std::to_string(removed) + " paths (" + to_string(cert.status) + ")");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Export

inline nlohmann::json to_json(const DischargeLedger& L) {
  using nlohmann::json;
  json j;
  j["ell"] = L.params.ell;
  j["k"] = L.params.k;
  j["c"] = L.params.c;
  j["alpha"] = to_string(L.params.alpha);
  j["premise_violated"] = L.params.premise_violated;
  j["paths"] = L.paths;
  j["centres"] = L.s;
  json vs = json::array();
  for (Vertex v = 0; v < L.n(); ++v) {
    auto i = static_cast<std::size_t>(v);
    json x{{"vertex", v}, {"label", layer_name(L.layer[i])}, {"eps", L.eps[i]}, {"g", L.g[i]}};
    if (L.parent[i] >= 0) x["black"] = L.parent[i];
    if (L.weighted && L.in_D(v)) {
      x["wt"] = to_string(L.wt[i]);
      x["beta"] = to_string(L.beta[i]);
    }
    if (L.settled && L.layer[i] >= kLayerB) x["final_weight"] = to_string(L.final_weight[i]);
    vs.push_back(x);
  }
  j["vertices"] = vs;
  json ts = json::array();
  for (const auto& t : L.trees) {
    json x{{"top", t.top},
           {"root", t.root},
           {"status", to_string(t.status)},
           {"beta", to_string(t.beta)},
           {"shape", t.shape},
           {"size", t.members.size()},
           {"end_layers", t.end_layers},
           {"linked", t.linked}};
    std::vector<std::string> fam;
    if (t.in_G) fam.push_back("G");
    if (t.in_F) fam.push_back("F");
    if (t.in_N) fam.push_back("N");
    x["family"] = fam;
    x["gamma"] = t.gamma ? json(to_string(*t.gamma)) : json(nullptr);
    x["mate"] = t.mate >= 0 ? json(L.trees[static_cast<std::size_t>(t.mate)].top) : json(nullptr);
    ts.push_back(x);
  }
  j["trees"] = ts;
  json fs = json::array();
  for (const auto& f : L.findings) fs.push_back({{"check", f.check}, {"detail", f.detail}});
  j["findings"] = fs;
  return j;
}

inline nlohmann::json to_json(const AuditReport& R) {
  using nlohmann::json;
  json j;
  j["ok"] = R.ok();
  json cs = json::array();
  for (const auto& c : R.checks)
    cs.push_back({{"name", c.name}, {"level", c.level}, {"passed", c.passed}, {"hard", c.hard}, {"failures", c.failures}, {"detail", c.detail}});
  j["checks"] = cs;
  j["warnings"] = R.warnings;
  j["sizes"] = {{"M", R.size_M}, {"A", R.size_A}, {"B", R.size_B}, {"D0", R.size_D0}, {"D", R.size_D}};
  j["trees"] = {{"total", R.trees}, {"positive", R.positive}, {"null", R.null_trees}, {"pendant", R.pendant},
                {"G", R.family_G}, {"F", R.family_F}, {"N", R.family_N}};
  j["F_roots"] = R.f_roots;
  j["edges"] = R.edges;
  j["global_slack"] = to_string(R.global_slack);
  j["F_root_deficit"] = to_string(R.f_root_deficit);
  j["unassigned"] = to_string(R.unassigned);
  j["min_final_weight"] = R.min_final ? json(to_string(*R.min_final)) : json(nullptr);
  j["min_final_weight_dedup"] = R.min_final_dedup ? json(to_string(*R.min_final_dedup)) : json(nullptr);
  j["ledger"] = to_json(R.ledger);
  return j;
}

/// DOT drawing: black and gray edges, vertices labelled by class.
inline std::string ledger_to_dot(const DischargeLedger& L) {
  std::ostringstream out;
  out << "graph ledger {\n";
  for (Vertex v = 0; v < L.n(); ++v) {
    int l = L.layer[static_cast<std::size_t>(v)];
    const char* fill = l == kLayerM ? "lightblue" : l == kLayerA ? "lightyellow" : l == kLayerB ? "salmon" : l == 0 ? "palegreen" : "white";
    out << "  " << v << " [label=\"" << v << "\\n" << layer_name(l) << "\", style=filled, fillcolor=" << fill << "];\n";
  }
  for (auto [a, b] : L.graph.edges())
    out << "  " << a << " -- " << b << (L.is_black(a, b) ? " [color=black, penwidth=2]" : " [color=gray]") << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace satnum
