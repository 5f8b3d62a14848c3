#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "satnum/errors.hpp"

namespace satnum {

using Vertex = int;

/// Subset of a fixed vertex universe {0, ..., universe-1}, stored as 64-bit words.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>(word_count(universe)), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static constexpr int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[idx(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[idx(v)] |= Word{1} << bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[idx(v)] &= ~(Word{1} << bit(v));
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const {
    ++v;
    if (v >= universe_) return -1;
    std::size_t i = idx(v);
    Word w = words_[i] & (~Word{0} << bit(v));
    while (true) {
      if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        fn(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const {
    same_universe(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() <=> b.to_vector();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](Vertex v) {
      if (!first_item) s += ",";
      s += std::to_string(v);
      first_item = false;
    });
    return s + "}";
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
  static unsigned bit(Vertex v) { return static_cast<unsigned>(v) % kWordBits; }
  void check(Vertex v) const {
    if (v < 0 || v >= universe_)
      throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw InputError("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace satnum
