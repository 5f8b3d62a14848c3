#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "satnum/errors.hpp"
#include "satnum/graph.hpp"

namespace satnum {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed big-endian into 6-bit groups, each group offset by 63.

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  auto put6 = [&](long long value, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    put6(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put6(n, 6);
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  std::size_t pos = 0;
  auto get = [&]() -> int {
    if (pos >= text.size()) throw InputError("graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range at offset " + std::to_string(pos - 1));
    return c - 63;
  };
  long long n = get();
  if (n == 63) {
    int groups = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | get();
  }
  if (n > Graph::kMaxVertices) throw InputError("graph6: order " + std::to_string(n) + " exceeds limit");
  Graph g(static_cast<int>(n));
  const long long total = n * (n - 1) / 2;
  const long long need = (total + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need)
    throw InputError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  long long bit = 0;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) chunk = get();
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0 && (chunk & ((1 << (6 - bit % 6)) - 1)) != 0)
    throw InputError("graph6: nonzero padding bits");
  return g;
}

/// One graph6 string per nonempty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line != "\r") out.push_back(from_graph6(line));
  return out;
}

/// "u v" per line, 0-based. An optional first line "n <order>" fixes the vertex
/// count; otherwise it is one more than the largest index seen. '#' starts a comment.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int order = -1;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> order) || order < 0) throw InputError("edge list line " + std::to_string(lineno) + ": bad order");
      continue;
    }
    long long u = 0;
    long long v = 0;
    try {
      std::size_t used = 0;
      u = std::stoll(first, &used);
      if (used != first.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("edge list line " + std::to_string(lineno) + ": expected two integers");
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw InputError("edge list line " + std::to_string(lineno) + ": expected two integers");
    if (u < 0 || v < 0 || u >= Graph::kMaxVertices || v >= Graph::kMaxVertices)
      throw InputError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(u, v)));
  }
  if (order < 0) order = max_vertex + 1;
  if (max_vertex >= order) throw InputError("edge list: vertex index exceeds declared order");
  return Graph(order, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Accepts either format: edge lists are recognised by whitespace inside a line.
inline Graph read_graph_auto(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string_view trimmed = all;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\n')) trimmed.remove_prefix(1);
  auto eol = trimmed.find('\n');
  std::string_view first_line = trimmed.substr(0, eol);
  if (first_line.find(' ') == std::string_view::npos && first_line.find('\t') == std::string_view::npos &&
      !first_line.empty() && first_line.front() != '#')
    return from_graph6(first_line);
  std::istringstream ss(all);
  return read_edge_list(ss);
}

}  // namespace satnum
