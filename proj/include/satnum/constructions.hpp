#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/pattern.hpp"
#include "satnum/rational.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

/// K_{s-2} joined to an independent set of n-s+2 vertices. Clique vertices are 0..s-3.
inline Graph ehm_graph(int n, int s) {
  if (s < 2) throw InputError("ehm_graph needs s >= 2");
  if (n < s) throw InputError("ehm_graph needs n >= s");
  Graph g(n);
  for (Vertex u = 0; u < s - 2; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Independent-set bound

struct KTParams {
  /// A maximum independent set of F, lexicographically least as a sorted list.
  VertexSet S;
  int b = 0;
  int d = 0;
};

namespace detail {
// Largest independent set inside `cand` (branch and bound on a bitset graph).
inline int max_independent(const Graph& f, VertexSet cand, int best_so_far, int current) {
  if (cand.empty()) return std::max(best_so_far, current);
  if (current + cand.size() <= best_so_far) return best_so_far;
  Vertex v = cand.first();
  // Branch on v: take it, or drop it (only worth it when v has a neighbour left).
  VertexSet with = cand - f.neighbors(v);
  with.erase(v);
  best_so_far = max_independent(f, with, best_so_far, current + 1);
  if ((f.neighbors(v) & cand).empty()) return best_so_far;
  VertexSet without = cand;
  without.erase(v);
  return max_independent(f, without, best_so_far, current);
}
}  // namespace detail

inline int independence_number(const Graph& f) { return detail::max_independent(f, f.vertices(), 0, 0); }

inline KTParams kt_params(const Pattern& pattern) {
  const Graph& f = pattern.graph();
  if (f.size() == 0) throw InputError("kt_params needs a pattern with at least one edge");
  const int alpha = independence_number(f);
  // Lexicographically least maximum set: keep v whenever a maximum set
  // extending the current choice still exists.
  VertexSet chosen(f.order());
  VertexSet cand = f.vertices();
  int taken = 0;
  for (Vertex v = 0; v < f.order() && taken < alpha; ++v) {
    if (!cand.contains(v)) continue;
    VertexSet rest = cand - f.neighbors(v);
    rest.erase(v);
    if (1 + taken + detail::max_independent(f, rest, 0, 0) == alpha) {
      chosen.insert(v);
      ++taken;
      cand = std::move(rest);
    } else {
      cand.erase(v);
    }
  }
  KTParams p;
  p.S = chosen;
  p.b = f.order() - alpha - 1;
  p.d = f.order();
  for (Vertex x = 0; x < f.order(); ++x)
    if (!chosen.contains(x)) p.d = std::min(p.d, f.neighbors(x).intersection_size(chosen));
  return p;
}

/// ((2b + d - 1)/2) n - b(b + d)/2.
inline Rational kt_bound(long long n, const KTParams& p) {
  return Rational(2LL * p.b + p.d - 1, 2) * n - Rational(static_cast<long long>(p.b) * (p.b + p.d), 2);
}
inline Rational kt_bound(long long n, const Pattern& f) { return kt_bound(n, kt_params(f)); }

/// Circulant on `count` vertices starting at `offset` where every vertex has
/// degree `degree`, except one vertex of degree-1 when parity forbids it.
inline void add_near_regular(Graph& g, int offset, int count, int degree) {
  if (degree <= 0 || count < 2) return;
  for (int i = 0; i < count; ++i)
    for (int j = 1; j <= degree / 2; ++j) g.add_edge(offset + i, offset + (i + j) % count);
  if (degree % 2 == 1)
    for (int i = 0; i < count / 2; ++i) g.add_edge(offset + i, offset + i + count / 2);
}

struct KTConstruction {
  Graph graph;
  SaturationCertificate certificate;
  Rational bound;
  bool within_bound = false;
};

/// K_b joined to a near-(d-1)-regular circulant on n - b vertices, completed
/// greedily (lexicographic order) to an F-saturated graph. nullopt when the
/// starting graph already contains F.
inline std::optional<KTConstruction> kt_construction(int n, const Pattern& f) {
  if (n < f.order()) throw InputError("kt_construction needs n >= |V(F)|");
  KTParams p = kt_params(f);
  Graph seed(n);
  for (Vertex u = 0; u < p.b; ++u)
    for (Vertex v = u + 1; v < n; ++v) seed.add_edge(u, v);
  add_near_regular(seed, p.b, n - p.b, p.d - 1);
  if (!is_free(seed, f)) return std::nullopt;
  KTConstruction out;
  out.graph = greedy_saturate(seed, f, PairOrder::lexicographic());
  out.certificate = verify_saturated(out.graph, f);
  out.bound = kt_bound(n, p);
  out.within_bound = out.certificate.saturated() && Rational(out.graph.size()) <= out.bound;
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

struct FormulaValue {
  enum class Kind { exact, bounds, slope };
  Kind kind = Kind::exact;
  long long value = 0;
  Rational lower{0};
  Rational upper{0};
  bool lower_strict = false;
  bool upper_strict = false;
  Rational slope{0};
  /// Range of n on which the statement holds, as text.
  std::string validity;
  std::string source;
  /// Set when the statement's hypotheses are not met (slope given for exploration only).
  std::string warning;

  /// Smallest and largest integers consistent with the statement.
  std::pair<long long, long long> integer_window() const {
    if (kind == Kind::exact) return {value, value};
    long long lo = lower_strict ? floor_of(lower) + 1 : ceil_of(lower);
    long long hi = upper_strict ? ceil_of(upper) - 1 : floor_of(upper);
    return {lo, hi};
  }
  bool admits(long long edges) const {
    if (kind == Kind::slope) return true;
    auto [lo, hi] = integer_window();
    return lo <= edges && edges <= hi;
  }
};

/// s_1 + ... + s_{r-1} + (s_r - 3)/2 for sorted part sizes.
inline Rational multipartite_slope(std::vector<int> sizes) {
  if (sizes.size() < 2) throw InputError("multipartite_slope needs at least two parts");
  std::sort(sizes.begin(), sizes.end());
  long long head = 0;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) head += sizes[i];
  return Rational(head) + Rational(sizes.back() - 3, 2);
}

struct SlopeValue {
  Rational value;
  std::string warning;
};

/// (k-3)/(k-4). Outside even k >= 28 the value is returned with a warning.
inline SlopeValue cycle_slope(int k) {
  if (k <= 4) throw InputError("cycle_slope needs k >= 5");
  SlopeValue s{Rational(k - 3, k - 4), {}};
  if (k % 2 != 0 || k < 28) s.warning = "proved only for even k >= 28";
  return s;
}

inline std::optional<FormulaValue> known_formula(long long n, const Pattern& f) {
  FormulaValue v;
  auto exact = [&](long long value, std::string validity, std::string source) {
    v.kind = FormulaValue::Kind::exact;
    v.value = value;
    v.validity = std::move(validity);
    v.source = std::move(source);
    return v;
  };
  if (f.is_complete() || (f.is_cycle() && f.cycle_length() == 3)) {
    const long long s = f.is_cycle() ? 3 : static_cast<long long>(f.part_sizes().size());
    if (n < s) return std::nullopt;
    return exact((s - 2) * n - (s - 1) * (s - 2) / 2, "n >= " + std::to_string(s), "Erdos-Hajnal-Moon");
  }
  if (f.is_multipartite()) {
    const auto& sz = f.part_sizes();
    if (sz.size() == 2 && sz[0] == 1) {
      const long long s = sz[1];
      if (n < s + 1) return std::nullopt;
      if (2 * n <= 3 * s) return exact(s * (s - 1) / 2 + (n - s) * (n - s - 1) / 2, "s+1 <= n <= 3s/2", "Kaszonyi-Tuza");
      return exact(ceil_of(Rational(s - 1, 2) * n - Rational(s * s, 8)), "n >= 3s/2", "Kaszonyi-Tuza");
    }
    v.kind = FormulaValue::Kind::slope;
    v.slope = multipartite_slope(sz);
    v.validity = "n -> infinity, error O(1)";
    v.source = "complete multipartite slope";
    return v;
  }
  if (f.is_cycle()) {
    const long long k = f.cycle_length();
    if (k == 4) {
      if (n < 5) return std::nullopt;
      return exact(floor_of(Rational(3 * n - 5, 2)), "n >= 5", "Ollmann");
    }
    if (k == 5) {
      if (n < 21) return std::nullopt;
      return exact(ceil_of(Rational(10 * (n - 1), 7)), "n >= 21", "Chen");
    }
    if (k == 6) {
      if (n < 9) return std::nullopt;
      v.kind = FormulaValue::Kind::bounds;
      v.lower = Rational(4 * n, 3) - 2;
      v.upper = Rational(4 * n + 1, 3);
      v.validity = "n >= 9";
      v.source = "Lan-Shi-Wang-Zhang";
      return v;
    }
    if (n >= 2 * k - 5) {
      v.kind = FormulaValue::Kind::bounds;
      v.lower = Rational(k + 3, k + 2) * n - 1;
      v.upper = Rational(k - 3, k - 4) * n + Rational((k - 4) * (k - 5) / 2);
      v.lower_strict = v.upper_strict = true;
      v.validity = "k >= 7, n >= 2k-5";
      v.source = "Furedi-Kim";
      return v;
    }
    if (k % 2 == 0 && k >= 28) {
      v.kind = FormulaValue::Kind::slope;
      v.slope = cycle_slope(static_cast<int>(k)).value;
      v.validity = "n -> infinity, error O(1)";
      v.source = "even cycle slope";
      return v;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

inline const char* to_string(FormulaValue::Kind k) {
  switch (k) {
    case FormulaValue::Kind::exact:
      return "exact";
    case FormulaValue::Kind::bounds:
      return "bounds";
    case FormulaValue::Kind::slope:
      return "slope";
  }
  return "?";
}

}  // namespace satnum
