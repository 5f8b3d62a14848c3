#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"
#include "satnum/rational.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

/// Part sizes of a complete multipartite pattern, sorted, with the derived
/// thresholds used throughout the lower-bound argument.
struct PartSizes {
  std::vector<int> sizes;
  int s = 0;        // total order
  int largest = 0;  // s_r

  explicit PartSizes(std::vector<int> parts) : sizes(std::move(parts)) {
    if (sizes.size() < 2) throw InputError("a complete multipartite pattern needs at least two parts");
    if (std::any_of(sizes.begin(), sizes.end(), [](int x) { return x < 1; })) throw InputError("part sizes must be positive");
    std::sort(sizes.begin(), sizes.end());
    s = std::accumulate(sizes.begin(), sizes.end(), 0);
    largest = sizes.back();
  }
  /// Degree cap defining the low-degree set: 2s - s_r - 4.
  int low_degree_cap() const { return 2 * s - largest - 4; }
  /// Largest allowed common neighbourhood inside M: s - s_r - 2.
  int pair_cap() const { return s - largest - 2; }
  /// Neighbours in N every Y vertex must have: s - s_r - 1.
  int y_demand() const { return s - largest - 1; }
  /// (2s - s_r - 3)/2.
  Rational slope() const { return Rational(2 * s - largest - 3, 2); }
  Pattern pattern() const { return Pattern::multipartite(sizes); }
};

/// Vertices of degree at most 2s - s_r - 4.
inline VertexSet low_degree_set(const Graph& h, const PartSizes& p) {
  VertexSet a(h.order());
  const int cap = p.low_degree_cap();
  if (cap < 0) return a;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) <= cap) a.insert(v);
  return a;
}

/// Vertices of degree at most s - 3.
inline VertexSet small_degree_set(const Graph& h, const PartSizes& p) {
  VertexSet d(h.order());
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) <= p.s - 3) d.insert(v);
  return d;
}

/// True iff m lies in the low-degree set and every two of its vertices have
/// at most s - s_r - 2 common neighbours.
inline bool family_A_member(const Graph& h, const VertexSet& m, const PartSizes& p) {
  if (!m.is_subset_of(low_degree_set(h, p))) return false;
  auto verts = m.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (h.neighbors(verts[i]).intersection_size(h.neighbors(verts[j])) > p.pair_cap()) return false;
  return true;
}

/// Greedy maximal member of the family, scanning low-degree vertices in
/// `order` (vertex order when empty). Maximality is re-checked before returning.
inline VertexSet maximal_M(const Graph& h, const PartSizes& p, const std::vector<Vertex>& order = {}) {
  VertexSet a = low_degree_set(h, p);
  std::vector<Vertex> scan = order.empty() ? a.to_vector() : order;
  VertexSet m(h.order());
  auto fits = [&](Vertex v) {
    if (!a.contains(v) || m.contains(v)) return false;
    bool ok = true;
    m.for_each([&](Vertex u) {
      if (h.neighbors(u).intersection_size(h.neighbors(v)) > p.pair_cap()) ok = false;
    });
    return ok;
  };
  for (Vertex v : scan) {
    h.check(v);
    if (fits(v)) m.insert(v);
  }
  // Low-degree vertices missing from a partial order are scanned last.
  a.for_each([&](Vertex v) {
    if (fits(v)) m.insert(v);
  });
  bool maximal = true;
  a.for_each([&](Vertex v) {
    if (fits(v)) maximal = false;
  });
  if (!maximal) throw std::logic_error("maximal_M: scan order missed a vertex of the low-degree set");
  return m;
}

struct MultipartiteLedger {
  std::vector<int> sizes;
  VertexSet A, M, N, X, Y, Z, D;
  long long edges = 0;
  /// min over Y of |N(v) cap N| - (s - s_r - 1); nullopt when Y is empty.
  std::optional<int> y_margin;
  /// |E| - ((2s - s_r - 3)/2)(|X| + |Y|).
  Rational edge_margin{0};
  /// (2s - s_r - 3)|M| - |N|.
  long long n_margin = 0;
  bool m_in_family = false;
  bool forced = false;

  bool passed() const { return m_in_family && (!y_margin || *y_margin >= 0) && edge_margin >= 0 && n_margin >= 0; }
};

/// Lower-bound accounting on a saturated graph: builds M, N and the X/Y/Z
/// split of V - (M u N), then checks that every Y vertex has enough
/// neighbours in N and that |E| covers the X/Y contribution. Refuses graphs
/// that are not saturated unless `force` is set.
inline MultipartiteLedger theorem11_audit(const Graph& h, const PartSizes& p, bool force = false,
                                          const std::vector<Vertex>& order = {}) {
  if (!force) {
    auto cert = verify_saturated(h, p.pattern());
    if (!cert.saturated()) {
      std::string msg = "graph is not " + p.pattern().name() + "-saturated (" + to_string(cert.status) + ")";
      if (cert.pair) msg += ": pair " + std::to_string(cert.pair->first) + "," + std::to_string(cert.pair->second);
      throw PreconditionError(msg);
    }
  }
  MultipartiteLedger L;
  L.sizes = p.sizes;
  L.forced = force;
  L.edges = h.size();
  L.A = low_degree_set(h, p);
  L.M = maximal_M(h, p, order);
  L.m_in_family = family_A_member(h, L.M, p);
  L.N = VertexSet(h.order());
  L.M.for_each([&](Vertex v) { L.N |= h.neighbors(v); });
  L.X = L.Y = L.Z = VertexSet(h.order());
  L.D = small_degree_set(h, p);
  for (Vertex v = 0; v < h.order(); ++v) {
    if (L.M.contains(v) || L.N.contains(v)) continue;
    int d = h.degree(v);
    if (d >= 2 * p.s - p.largest - 3)
      L.X.insert(v);
    else if (d >= p.s - 2)
      L.Y.insert(v);
    else
      L.Z.insert(v);
  }
  L.Y.for_each([&](Vertex v) {
    int margin = h.neighbors(v).intersection_size(L.N) - p.y_demand();
    L.y_margin = L.y_margin ? std::min(*L.y_margin, margin) : margin;
  });
  L.edge_margin = Rational(L.edges) - p.slope() * static_cast<long long>(L.X.size() + L.Y.size());
  L.n_margin = static_cast<long long>(2 * p.s - p.largest - 3) * L.M.size() - L.N.size();
  return L;
}

struct BigneibQuery {
  VertexSet B;
  int a = 0;
  int c = 0;
  std::optional<VertexSet> result;
  long long subsets_tried = 0;
};

inline constexpr int kBigneibMaxSet = 24;

/// Exhaustive search for a c-subset C of the independent set B whose common
/// neighbourhood has at least s - s_r - 1 vertices. Subsets are tried in
/// lexicographic order; the first hit is returned.
inline BigneibQuery bigneib_search(const Graph& h, const VertexSet& b, int c, const PartSizes& p) {
  if (!is_independent(h, b)) throw InputError("bigneib_search: B must be independent");
  if (b.size() > kBigneibMaxSet)
    throw PreconditionError("bigneib_search: |B| = " + std::to_string(b.size()) + " exceeds the exhaustive limit " +
                            std::to_string(kBigneibMaxSet));
  if (c < 1 || c > b.size()) throw InputError("bigneib_search: need 1 <= c <= |B|");
  BigneibQuery q;
  q.B = b;
  q.c = c;
  b.for_each([&](Vertex v) { q.a = std::max(q.a, h.degree(v)); });
  auto verts = b.to_vector();
  std::vector<int> idx(static_cast<std::size_t>(c));
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(verts.size());
  while (true) {
    ++q.subsets_tried;
    VertexSet common = VertexSet::full(h.order());
    for (int i : idx) common &= h.neighbors(verts[static_cast<std::size_t>(i)]);
    if (common.size() >= p.y_demand()) {
      VertexSet chosen(h.order());
      for (int i : idx) chosen.insert(verts[static_cast<std::size_t>(i)]);
      q.result = chosen;
      return q;
    }
    int i = c - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - c + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return q;
}

inline nlohmann::json to_json(const MultipartiteLedger& L) {
  nlohmann::json j;
  j["sizes"] = L.sizes;
  j["edges"] = L.edges;
  for (auto [name, set] : {std::pair<const char*, const VertexSet*>{"A", &L.A}, {"M", &L.M}, {"N", &L.N}, {"X", &L.X},
                           {"Y", &L.Y}, {"Z", &L.Z}, {"D", &L.D}})
    j["sets"][name] = set->to_vector();
  j["y_margin"] = L.y_margin ? nlohmann::json(*L.y_margin) : nlohmann::json(nullptr);
  j["edge_margin"] = to_string(L.edge_margin);
  j["n_margin"] = L.n_margin;
  j["m_in_family"] = L.m_in_family;
  j["forced"] = L.forced;
  j["passed"] = L.passed();
  return j;
}

inline std::string csv_header() { return "n,edges,A,M,N,X,Y,Z,D,y_margin,edge_margin,passed"; }

inline std::string csv_row(const MultipartiteLedger& L, int n) {
  std::ostringstream out;
  out << n << ',' << L.edges << ',' << L.A.size() << ',' << L.M.size() << ',' << L.N.size() << ',' << L.X.size() << ','
      << L.Y.size() << ',' << L.Z.size() << ',' << L.D.size() << ',' << (L.y_margin ? std::to_string(*L.y_margin) : "")
      << ',' << to_string(L.edge_margin) << ',' << (L.passed() ? "true" : "false");
  return out.str();
}

}  // namespace satnum
