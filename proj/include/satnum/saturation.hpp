#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "satnum/containment.hpp"
#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/graph_io.hpp"
#include "satnum/parallel.hpp"
#include "satnum/pattern.hpp"

namespace satnum {

struct SaturationCertificate {
  enum class Status { saturated, not_free, not_saturated };

  Status status = Status::saturated;
  /// not_free: a copy of F inside G.
  std::optional<Embedding> embedding;
  /// not_saturated: the first (lexicographic) nonadjacent pair whose addition creates no F.
  std::optional<Edge> pair;
  /// With keep_witnesses: one copy of F in G + xy per nonadjacent pair xy.
  std::vector<std::pair<Edge, Embedding>> witnesses;

  bool saturated() const { return status == Status::saturated; }
};

inline const char* to_string(SaturationCertificate::Status s) {
  switch (s) {
    case SaturationCertificate::Status::saturated:
      return "saturated";
    case SaturationCertificate::Status::not_free:
      return "not_free";
    case SaturationCertificate::Status::not_saturated:
      return "not_saturated";
  }
  return "?";
}

inline bool is_free(const Graph& g, const Pattern& f) { return !contains(g, f).has_value(); }

/// F-saturation check. Non-edges are tested in parallel; the reported
/// missing pair is always the lexicographically first one.
inline SaturationCertificate verify_saturated(const Graph& g, const Pattern& f, bool keep_witnesses = false) {
  SaturationCertificate cert;
  if (auto e = contains(g, f)) {
    cert.status = SaturationCertificate::Status::not_free;
    cert.embedding = std::move(e);
    return cert;
  }
  const auto pairs = g.non_edges();
  std::atomic<std::size_t> first_bad{pairs.size()};
  std::vector<std::optional<Embedding>> found(keep_witnesses ? pairs.size() : 0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    if (!keep_witnesses && i > first_bad.load()) return;
    auto [x, y] = pairs[i];
    auto e = creates_on_edge(g, x, y, f);
    if (!e) {
      std::size_t cur = first_bad.load();
      while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
      }
    } else if (keep_witnesses) {
      found[i] = std::move(e);
    }
  });
  if (first_bad.load() < pairs.size()) {
    cert.status = SaturationCertificate::Status::not_saturated;
    cert.pair = pairs[first_bad.load()];
    return cert;
  }
  if (keep_witnesses)
    for (std::size_t i = 0; i < pairs.size(); ++i) cert.witnesses.emplace_back(pairs[i], std::move(*found[i]));
  return cert;
}

struct PairOrder {
  enum class Kind { lexicographic, random, degree_ascending, vertex_sequential, hub_first };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;

  static PairOrder lexicographic() { return {Kind::lexicographic, 0}; }
  static PairOrder random(std::uint64_t seed) { return {Kind::random, seed}; }
  /// Dynamic: always examine the unexamined pair with the smallest current
  /// degree sum (ties lexicographic).
  static PairOrder degree_ascending() { return {Kind::degree_ascending, 0}; }
  /// Vertices in a seeded random sequence; each new vertex is offered to the
  /// earlier ones in random order, so the graph grows one vertex at a time.
  static PairOrder vertex_sequential(std::uint64_t seed) { return {Kind::vertex_sequential, seed}; }
  /// Uniformly shuffled pairs, except that the pairs at one random vertex come first.
  static PairOrder hub_first(std::uint64_t seed) { return {Kind::hub_first, seed}; }
};

/// Adds edges to `seed` until it is F-saturated. Every nonadjacent pair of the
/// seed is examined exactly once, in the given order, and kept iff the graph
/// stays F-free.
inline Graph greedy_saturate(const Graph& seed, const Pattern& f, PairOrder order) {
  if (!is_free(seed, f)) throw InputError("greedy_saturate: seed graph already contains " + f.name());
  Graph g = seed;
  auto consider = [&](Vertex x, Vertex y) {
    if (!creates_on_edge(g, x, y, f)) g.add_edge(x, y);
  };
  auto pairs = seed.non_edges();
  switch (order.kind) {
    case PairOrder::Kind::lexicographic:
      for (auto [x, y] : pairs) consider(x, y);
      break;
    case PairOrder::Kind::random:
    case PairOrder::Kind::hub_first: {
      std::mt19937_64 rng(order.seed);
      // Fisher-Yates with an explicit draw so the order does not depend on the
      // standard library's shuffle.
      for (std::size_t i = pairs.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(pairs[i - 1], pairs[j]);
      }
      if (order.kind == PairOrder::Kind::hub_first && g.order() > 0) {
        const Vertex hub = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.order()));
        std::stable_partition(pairs.begin(), pairs.end(), [&](Edge e) { return e.first == hub || e.second == hub; });
      }
      for (auto [x, y] : pairs) consider(x, y);
      break;
    }
    case PairOrder::Kind::vertex_sequential: {
      std::mt19937_64 rng(order.seed);
      auto draw_shuffle = [&](auto& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
      };
      std::vector<Vertex> seq(static_cast<std::size_t>(g.order()));
      std::iota(seq.begin(), seq.end(), 0);
      draw_shuffle(seq);
      for (std::size_t j = 1; j < seq.size(); ++j) {
        std::vector<Vertex> earlier(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(j));
        draw_shuffle(earlier);
        for (Vertex u : earlier)
          if (!seed.has_edge(u, seq[j])) consider(std::min(u, seq[j]), std::max(u, seq[j]));
      }
      break;
    }
    case PairOrder::Kind::degree_ascending: {
      // Degrees only grow, so a popped entry with a stale key is re-queued.
      using Item = std::tuple<int, Vertex, Vertex>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      for (auto [x, y] : pairs) queue.emplace(g.degree(x) + g.degree(y), x, y);
      while (!queue.empty()) {
        auto [key, x, y] = queue.top();
        queue.pop();
        int now = g.degree(x) + g.degree(y);
        if (now != key) {
          queue.emplace(now, x, y);
          continue;
        }
        consider(x, y);
      }
      break;
    }
  }
  return g;
}

inline nlohmann::json to_json(const Embedding& e) { return e.image; }

inline nlohmann::json to_json(const SaturationCertificate& c) {
  nlohmann::json j;
  j["status"] = to_string(c.status);
  if (c.pair) j["pair"] = {c.pair->first, c.pair->second};
  if (c.embedding) j["embedding"] = to_json(*c.embedding);
  if (!c.witnesses.empty()) {
    auto& w = j["witnesses"] = nlohmann::json::array();
    for (const auto& [pair, emb] : c.witnesses) w.push_back({{"pair", {pair.first, pair.second}}, {"embedding", to_json(emb)}});
  }
  return j;
}

}  // namespace satnum
