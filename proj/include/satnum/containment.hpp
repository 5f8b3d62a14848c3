#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/path_search.hpp"
#include "satnum/pattern.hpp"

namespace satnum {

/// Injective map from pattern vertices to host vertices: image[i] is the
/// host vertex playing pattern vertex i (see Pattern::graph() for labels).
struct Embedding {
  std::vector<Vertex> image;

  bool valid(const Graph& host, const Pattern& f) const {
    const Graph& p = f.graph();
    if (static_cast<int>(image.size()) != p.order()) return false;
    VertexSet seen(host.order());
    for (Vertex v : image) {
      if (v < 0 || v >= host.order() || seen.contains(v)) return false;
      seen.insert(v);
    }
    for (auto [a, b] : p.edges())
      if (!host.has_edge(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)])) return false;
    return true;
  }
  bool uses_edge(const Pattern& f, Vertex x, Vertex y) const {
    for (auto [a, b] : f.graph().edges()) {
      Vertex u = image[static_cast<std::size_t>(a)];
      Vertex v = image[static_cast<std::size_t>(b)];
      if ((u == x && v == y) || (u == y && v == x)) return true;
    }
    return false;
  }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

/// Generic backtracking subgraph search with bitset candidate filtering.
/// Calls visit for every embedding (as a full image vector) until it returns false.
class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
    const int p = pat_.order();
    // Connectivity-first order: highest degree start, then most already-placed neighbours.
    std::vector<char> placed(static_cast<std::size_t>(p), 0);
    for (int step = 0; step < p; ++step) {
      int best = -1;
      int best_key1 = -1;
      int best_key2 = -1;
      for (Vertex v = 0; v < p; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int back = 0;
        pat_.neighbors(v).for_each([&](Vertex u) { back += placed[static_cast<std::size_t>(u)]; });
        if (back > best_key1 || (back == best_key1 && pat_.degree(v) > best_key2)) {
          best = v;
          best_key1 = back;
          best_key2 = pat_.degree(v);
        }
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
    }
  }

  /// forced: pattern vertex -> host vertex, or -1.
  void run(std::vector<Vertex> forced, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const int p = pat_.order();
    image_.assign(static_cast<std::size_t>(p), -1);
    used_ = VertexSet(host_.order());
    for (Vertex a = 0; a < p; ++a) {
      Vertex h = forced.empty() ? -1 : forced[static_cast<std::size_t>(a)];
      if (h == -1) continue;
      if (used_.contains(h)) return;
      image_[static_cast<std::size_t>(a)] = h;
      used_.insert(h);
    }
    // Forced assignments must already respect pattern edges.
    for (auto [a, b] : pat_.edges()) {
      Vertex u = image_[static_cast<std::size_t>(a)];
      Vertex v = image_[static_cast<std::size_t>(b)];
      if (u != -1 && v != -1 && !host_.has_edge(u, v)) return;
    }
    visit_ = &visit;
    stopped_ = false;
    rec(0);
  }

 private:
  void rec(std::size_t depth) {
    if (depth == order_.size()) {
      if (!(*visit_)(image_)) stopped_ = true;
      return;
    }
    Vertex a = order_[depth];
    if (image_[static_cast<std::size_t>(a)] != -1) {
      rec(depth + 1);
      return;
    }
    VertexSet cand = VertexSet::full(host_.order());
    pat_.neighbors(a).for_each([&](Vertex b) {
      Vertex h = image_[static_cast<std::size_t>(b)];
      if (h != -1) cand &= host_.neighbors(h);
    });
    cand -= used_;
    const int need = pat_.degree(a);
    cand.for_each([&](Vertex h) {
      if (stopped_ || host_.degree(h) < need) return;
      image_[static_cast<std::size_t>(a)] = h;
      used_.insert(h);
      rec(depth + 1);
      used_.erase(h);
      image_[static_cast<std::size_t>(a)] = -1;
    });
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  VertexSet used_;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

/// Complete multipartite search. Parts are filled largest first; each part's
/// candidates are the common neighbourhood of everything placed in other parts.
class MultipartiteSearch {
 public:
  MultipartiteSearch(const Graph& host, std::vector<int> sizes) : host_(host), sizes_(std::move(sizes)) {
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) order_.push_back(i);
    offset_.resize(sizes_.size());
    int acc = 0;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      offset_[i] = acc;
      acc += sizes_[i];
    }
  }

  /// forced[i]: host vertices that must lie in part i (indices in sorted-size order).
  std::optional<Embedding> find(const std::vector<std::vector<Vertex>>& forced) {
    chosen_.assign(sizes_.size(), {});
    used_ = VertexSet(host_.order());
    for (std::size_t i = 0; i < forced.size() && i < sizes_.size(); ++i) {
      for (Vertex v : forced[i]) {
        if (used_.contains(v)) return std::nullopt;
        chosen_[i].push_back(v);
        used_.insert(v);
      }
      if (static_cast<int>(forced[i].size()) > sizes_[i]) return std::nullopt;
    }
    for (std::size_t i = 0; i < sizes_.size(); ++i)
      for (std::size_t j = 0; j < sizes_.size(); ++j)
        if (i != j)
          for (Vertex u : chosen_[i])
            for (Vertex v : chosen_[j])
              if (!host_.has_edge(u, v)) return std::nullopt;
    if (!rec(0, -1)) return std::nullopt;
    Embedding e;
    e.image.resize(static_cast<std::size_t>(offset_.back() + sizes_.back()));
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      auto part = chosen_[i];
      for (std::size_t j = 0; j < part.size(); ++j) e.image[static_cast<std::size_t>(offset_[i]) + j] = part[j];
    }
    return e;
  }

 private:
  VertexSet candidates(std::size_t part) const {
    VertexSet c = VertexSet::full(host_.order());
    for (std::size_t q = 0; q < sizes_.size(); ++q)
      if (q != part)
        for (Vertex u : chosen_[q]) c &= host_.neighbors(u);
    return c - used_;
  }

  // Places the next vertex of part order_[pos]; `last` enforces increasing
  // picks within a part.
  bool rec(std::size_t pos, Vertex last) {
    if (pos == order_.size()) return true;
    const auto part = static_cast<std::size_t>(order_[pos]);
    const int missing = sizes_[part] - static_cast<int>(chosen_[part].size());
    if (missing == 0) return rec(pos + 1, -1);
    VertexSet cand = candidates(part);
    // Every later part draws from vertices adjacent to all current choices.
    int later_need = 0;
    for (std::size_t q = pos + 1; q < order_.size(); ++q) {
      auto qp = static_cast<std::size_t>(order_[q]);
      later_need += sizes_[qp] - static_cast<int>(chosen_[qp].size());
    }
    if (cand.size() < missing) return false;
    for (Vertex v = cand.next(last); v != -1; v = cand.next(v)) {
      if (pos + 1 < order_.size() && later_need > 0) {
        VertexSet common = host_.neighbors(v);
        for (std::size_t q = 0; q <= pos; ++q)
          for (Vertex u : chosen_[static_cast<std::size_t>(order_[q])]) common &= host_.neighbors(u);
        if ((common - used_).size() < later_need) continue;
      }
      chosen_[part].push_back(v);
      used_.insert(v);
      if (rec(pos, v)) return true;
      used_.erase(v);
      chosen_[part].pop_back();
    }
    return false;
  }

  const Graph& host_;
  std::vector<int> sizes_;
  std::vector<int> order_;
  std::vector<int> offset_;
  std::vector<std::vector<Vertex>> chosen_;
  VertexSet used_;
};

inline std::optional<Embedding> find_cycle(const Graph& g, int k) {
  ExactPathSearch search(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.order() - s < k) break;
    VertexSet allowed(g.order());
    for (Vertex v = s; v < g.order(); ++v) allowed.insert(v);
    for (Vertex t = g.neighbors(s).next(s); t != -1; t = g.neighbors(s).next(t)) {
      if (auto p = search.find(s, t, k - 1, allowed)) return Embedding{p->vertices};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Some copy of F in G (not necessarily induced), or nullopt.
inline std::optional<Embedding> contains(const Graph& g, const Pattern& f) {
  if (f.order() > g.order() || f.edge_count() > g.size()) return std::nullopt;
  switch (f.kind()) {
    case Pattern::Kind::cycle:
      return detail::find_cycle(g, f.cycle_length());
    case Pattern::Kind::multipartite:
      return detail::MultipartiteSearch(g, f.part_sizes()).find({});
    case Pattern::Kind::explicit_graph: {
      std::optional<Embedding> out;
      detail::SubgraphSearch(g, f.graph()).run({}, [&](const std::vector<Vertex>& img) {
        out = Embedding{img};
        return false;
      });
      return out;
    }
  }
  return std::nullopt;
}

/// A copy of F in G + xy that uses the new edge xy, or nullopt.
inline std::optional<Embedding> creates_on_edge(const Graph& g, Vertex x, Vertex y, const Pattern& f) {
  g.check(x);
  g.check(y);
  if (x == y) throw InputError("creates_on_edge needs two distinct vertices");
  if (g.has_edge(x, y)) throw InputError("creates_on_edge: " + std::to_string(x) + "-" + std::to_string(y) + " is already an edge");
  if (f.order() > g.order()) return std::nullopt;
  switch (f.kind()) {
    case Pattern::Kind::cycle: {
      ExactPathSearch search(g);
      if (auto p = search.find(x, y, f.cycle_length() - 1)) return Embedding{p->vertices};
      return std::nullopt;
    }
    case Pattern::Kind::multipartite: {
      Graph h = g.with_edge(x, y);
      const auto& sizes = f.part_sizes();
      detail::MultipartiteSearch search(h, sizes);
      // x and y sit in two different parts; parts of equal size are interchangeable.
      auto first_of_size = [&](std::size_t i, std::size_t skip) {
        for (std::size_t j = 0; j < i; ++j)
          if (j != skip && sizes[j] == sizes[i]) return false;
        return true;
      };
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!first_of_size(i, sizes.size())) continue;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
          if (j == i || !first_of_size(j, i)) continue;
          std::vector<std::vector<Vertex>> forced(sizes.size());
          forced[i].push_back(x);
          forced[j].push_back(y);
          if (auto e = search.find(forced)) return e;
        }
      }
      return std::nullopt;
    }
    case Pattern::Kind::explicit_graph: {
      Graph h = g.with_edge(x, y);
      detail::SubgraphSearch search(h, f.graph());
      std::optional<Embedding> out;
      for (auto [a, b] : f.graph().edges()) {
        for (int flip = 0; flip < 2 && !out; ++flip) {
          std::vector<Vertex> forced(static_cast<std::size_t>(f.order()), -1);
          forced[static_cast<std::size_t>(a)] = flip ? y : x;
          forced[static_cast<std::size_t>(b)] = flip ? x : y;
          search.run(forced, [&](const std::vector<Vertex>& img) {
            out = Embedding{img};
            return false;
          });
        }
        if (out) break;
      }
      return out;
    }
  }
  return std::nullopt;
}

struct CopyCount {
  long long count = 0;
  /// True when counting stopped at the cap.
  bool capped = false;
};

inline constexpr long long kDefaultCopyCap = 1'000'000;

/// Number of subgraphs of G isomorphic to F, counting each copy once.
inline CopyCount count_copies(const Graph& g, const Pattern& f, long long cap = kDefaultCopyCap) {
  if (cap < 1) throw InputError("count_copies cap must be at least 1");
  CopyCount out;
  if (f.order() > g.order()) return out;
  if (f.is_cycle()) {
    const int k = f.cycle_length();
    ExactPathSearch search(g);
    for (Vertex s = 0; s < g.order() && !out.capped; ++s) {
      VertexSet allowed(g.order());
      for (Vertex v = s; v < g.order(); ++v) allowed.insert(v);
      for (Vertex t = g.neighbors(s).next(s); t != -1 && !out.capped; t = g.neighbors(s).next(t)) {
        search.for_each(s, t, k - 1, allowed, [&](const std::vector<Vertex>& p) {
          // Each cycle through s (its smallest vertex) is seen once per direction.
          if (p[1] < t) ++out.count;
          if (out.count >= cap) out.capped = true;
          return !out.capped;
        });
      }
    }
    return out;
  }
  long long automorphisms = 0;
  detail::SubgraphSearch(f.graph(), f.graph()).run({}, [&](const std::vector<Vertex>&) {
    ++automorphisms;
    return true;
  });
  long long embeddings = 0;
  const long long limit = cap * automorphisms;
  detail::SubgraphSearch(g, f.graph()).run({}, [&](const std::vector<Vertex>&) {
    ++embeddings;
    return embeddings < limit;
  });
  out.count = embeddings / automorphisms;
  out.capped = embeddings >= limit;
  return out;
}

}  // namespace satnum
