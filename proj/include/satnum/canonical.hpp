#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"

namespace satnum {

/// Canonical labelling of a (vertex-coloured) graph.
struct CanonicalForm {
  /// order[i]: the original vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// position[v]: canonical position of original vertex v.
  std::vector<int> position;
  /// Colour sequence and upper-triangle adjacency under the canonical order.
  /// Equal certificates <=> isomorphic (colour-preserving).
  std::string certificate;
};

namespace detail {

// Individualisation-refinement search for the lexicographically smallest
// leaf certificate. Automorphisms discovered from equal leaves prune
// children on the first path by orbits of the pointwise stabiliser, and a
// leaf equivalent to the first leaf sends the search back to the node where
// the two paths diverged.
class Canonizer {
 public:
  using Partition = std::vector<std::vector<Vertex>>;

  Canonizer(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()), colors_(colors) {
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(colors_.size()) != n_) throw InputError("colour vector length does not match graph order");
  }

  CanonicalForm run() {
    Partition p;
    std::vector<int> distinct(colors_.begin(), colors_.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct) {
      std::vector<Vertex> cell;
      for (Vertex v = 0; v < n_; ++v)
        if (colors_[static_cast<std::size_t>(v)] == c) cell.push_back(v);
      p.push_back(std::move(cell));
    }
    CanonicalForm out;
    if (n_ == 0) return out;
    std::vector<Vertex> seq;
    search(std::move(p), seq, 0, true);
    out.order = best_order_;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[static_cast<std::size_t>(out.order[static_cast<std::size_t>(i)])] = i;
    out.certificate = best_cert_;
    return out;
  }

  /// Automorphisms found during the search (not necessarily a full generating set).
  const std::vector<std::vector<Vertex>>& automorphisms() const { return autos_; }

 private:
  void refine(Partition& p) const {
    std::vector<int> count(static_cast<std::size_t>(n_));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        if (p.size() == static_cast<std::size_t>(n_)) return;
        VertexSet splitter = VertexSet::of(n_, p[s]);
        Partition next;
        next.reserve(p.size());
        for (const auto& cell : p) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          for (Vertex v : cell) count[static_cast<std::size_t>(v)] = g_.neighbors(v).intersection_size(splitter);
          std::vector<Vertex> sorted = cell;
          std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
            return count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(b)];
          });
          std::size_t start = 0;
          for (std::size_t i = 1; i <= sorted.size(); ++i) {
            if (i == sorted.size() ||
                count[static_cast<std::size_t>(sorted[i])] != count[static_cast<std::size_t>(sorted[start])]) {
              next.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(start),
                                sorted.begin() + static_cast<std::ptrdiff_t>(i));
              start = i;
            }
          }
        }
        if (next.size() != p.size()) {
          changed = true;
          p = std::move(next);
        }
      }
    }
  }

  std::string certificate(const std::vector<Vertex>& order) const {
    std::string cert;
    cert.reserve(static_cast<std::size_t>(n_ + n_ * (n_ - 1) / 2 + 1));
    for (Vertex v : order) cert += std::to_string(colors_[static_cast<std::size_t>(v)]) + ",";
    cert += '|';
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        cert += g_.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0';
    return cert;
  }

  std::vector<Vertex> stabiliser_orbits(const std::vector<Vertex>& seq) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const auto& a : autos_) {
      bool fixes = std::all_of(seq.begin(), seq.end(), [&](Vertex v) { return a[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex x = find(v);
        Vertex y = find(a[static_cast<std::size_t>(v)]);
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  // depth: number of individualised vertices; first: node lies on the first path.
  void search(Partition p, std::vector<Vertex>& seq, int depth, bool first) {
    refine(p);
    if (p.size() == static_cast<std::size_t>(n_)) {
      leaf(p, depth);
      return;
    }
    if (first) first_path_depth_ = depth;
    std::size_t target = 0;
    while (p[target].size() == 1) ++target;
    const std::vector<Vertex> cell = p[target];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (first && !tried.empty()) {
        auto orbit = stabiliser_orbits(seq);
        bool seen = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : p[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      seq.push_back(v);
      int saved = divergence_;
      if (!(first && tried.empty())) divergence_ = std::min(divergence_, depth);
      search(std::move(child), seq, depth + 1, first && tried.empty());
      divergence_ = saved;
      seq.pop_back();
      tried.push_back(v);
      if (jump_ >= 0) {
        if (jump_ < depth) return;
        jump_ = -1;
      }
    }
  }

  void leaf(const Partition& p, int) {
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& cell : p) order.push_back(cell.front());
    std::string cert = certificate(order);
    if (first_cert_.empty()) {
      first_cert_ = best_cert_ = cert;
      first_order_ = best_order_ = order;
      return;
    }
    auto record = [&](const std::vector<Vertex>& from) {
      std::vector<Vertex> a(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) a[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
      autos_.push_back(std::move(a));
    };
    if (cert == first_cert_) {
      record(first_order_);
      jump_ = divergence_;
      return;
    }
    if (cert == best_cert_) {
      record(best_order_);
    } else if (cert < best_cert_) {
      best_cert_ = cert;
      best_order_ = order;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  std::string first_cert_, best_cert_;
  std::vector<Vertex> first_order_, best_order_;
  std::vector<std::vector<Vertex>> autos_;
  int first_path_depth_ = 0;
  int divergence_ = 1 << 30;
  int jump_ = -1;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {}) {
  return detail::Canonizer(g, colors).run();
}

/// Graph with vertex v renamed to position[v].
inline Graph relabel(const Graph& g, const std::vector<int>& position) {
  if (static_cast<int>(position.size()) != g.order()) throw InputError("relabel: permutation length mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  return h;
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).position); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace satnum
