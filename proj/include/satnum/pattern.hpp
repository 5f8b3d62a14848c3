#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/graph_io.hpp"

namespace satnum {

/// Forbidden graph F: complete multipartite, cycle, or an explicit small graph.
class Pattern {
 public:
  enum class Kind { multipartite, cycle, explicit_graph };

  static Pattern multipartite(std::vector<int> sizes) {
    if (sizes.size() < 2) throw InputError("complete multipartite pattern needs at least two parts");
    for (int s : sizes)
      if (s < 1) throw InputError("part sizes must be positive");
    std::sort(sizes.begin(), sizes.end());
    Pattern p;
    p.kind_ = Kind::multipartite;
    p.sizes_ = std::move(sizes);
    p.graph_ = build_multipartite(p.sizes_);
    return p;
  }
  static Pattern complete(int s) {
    if (s < 2) throw InputError("complete pattern K_s needs s >= 2");
    return multipartite(std::vector<int>(static_cast<std::size_t>(s), 1));
  }
  static Pattern star(int s) { return multipartite({1, s}); }
  static Pattern cycle(int k) {
    if (k < 3) throw InputError("cycle length must be at least 3, got " + std::to_string(k));
    Pattern p;
    p.kind_ = Kind::cycle;
    p.k_ = k;
    p.graph_ = Graph(k);
    for (int i = 0; i < k; ++i) p.graph_.add_edge(i, (i + 1) % k);
    return p;
  }
  static Pattern from_graph(Graph g) {
    if (g.size() == 0) throw InputError("explicit pattern must have at least one edge");
    Pattern p;
    p.kind_ = Kind::explicit_graph;
    p.graph_ = std::move(g);
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_cycle() const { return kind_ == Kind::cycle; }
  bool is_multipartite() const { return kind_ == Kind::multipartite; }
  /// Cycle length; 0 for other kinds.
  int cycle_length() const { return k_; }
  /// Sorted part sizes; empty for other kinds.
  const std::vector<int>& part_sizes() const { return sizes_; }
  /// True for K_s (every part a singleton).
  bool is_complete() const {
    return is_multipartite() && std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s == 1; });
  }
  /// The pattern as a labelled graph. Multipartite parts occupy consecutive
  /// index ranges in sorted order; cycles are 0-1-...-(k-1)-0.
  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  int edge_count() const { return graph_.size(); }

  std::string name() const {
    switch (kind_) {
      case Kind::cycle:
        return "C" + std::to_string(k_);
      case Kind::multipartite: {
        if (is_complete()) return "K" + std::to_string(sizes_.size());
        std::string s = "K{";
        for (std::size_t i = 0; i < sizes_.size(); ++i) s += (i ? "," : "") + std::to_string(sizes_[i]);
        return s + "}";
      }
      case Kind::explicit_graph:
        return "G6:" + to_graph6(graph_);
    }
    return {};
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_ && a.sizes_ == b.sizes_ && a.graph_ == b.graph_;
  }

 private:
  static Graph build_multipartite(const std::vector<int>& sizes) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(total);
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    for (int u = 0; u < total; ++u)
      for (int v = u + 1; v < total; ++v)
        if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
  }

  Kind kind_ = Kind::explicit_graph;
  int k_ = 0;
  std::vector<int> sizes_;
  Graph graph_;
};

namespace detail {
inline int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}
}  // namespace detail

/// Parses "K5", "K{2,3,3}", "C28", "@file" (graph6 or edge list), or a raw
/// graph6 string prefixed with "g6:".
inline Pattern parse_pattern(std::string_view text) {
  if (text.empty()) throw InputError("empty pattern");
  if (text.front() == '@') {
    std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw InputError("cannot open pattern file '" + path + "'");
    return Pattern::from_graph(read_graph_auto(in));
  }
  if (text.starts_with("g6:") || text.starts_with("G6:")) return Pattern::from_graph(from_graph6(text.substr(3)));
  if (text.front() == 'C' || text.front() == 'c') return Pattern::cycle(detail::parse_int(text.substr(1), "cycle length"));
  if (text.front() == 'K' || text.front() == 'k') {
    auto body = text.substr(1);
    if (!body.empty() && body.front() == '{') {
      if (body.back() != '}') throw InputError("unterminated part list in '" + std::string(text) + "'");
      body = body.substr(1, body.size() - 2);
      std::vector<int> sizes;
      while (true) {
        auto comma = body.find(',');
        sizes.push_back(detail::parse_int(body.substr(0, comma), "part size"));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
      }
      return Pattern::multipartite(std::move(sizes));
    }
    return Pattern::complete(detail::parse_int(body, "clique size"));
  }
  throw InputError("unrecognised pattern '" + std::string(text) + "'");
}

}  // namespace satnum
