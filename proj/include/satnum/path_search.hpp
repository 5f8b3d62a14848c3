#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

/// Depth-first search for x-y paths with exactly L edges.
///
/// At every node the search knows the set of still-unused vertices and
/// prunes with three tests on the component of the target inside it:
///   - BFS distance from the current vertex to the target exceeds the budget;
///   - the component has fewer vertices than the path still needs;
///   - the longest conceivable path through the block chain from the current
///     vertex to the target is shorter than the budget.
/// Failed states are memoised by (current, budget, component). The answer
/// depends only on that triple, so the memo is exact.
class ExactPathSearch {
 public:
  using Word = std::uint64_t;

  explicit ExactPathSearch(const Graph& g) : g_(g), n_(g.order()), w_(VertexSet::word_count(g.order())) {
    adj_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(w_));
    for (Vertex v = 0; v < n_; ++v) {
      auto row = g.neighbors(v).words();
      std::copy(row.begin(), row.end(), adj_.begin() + static_cast<std::ptrdiff_t>(v) * w_);
    }
  }

  /// Limit on memo entries before the table is flushed.
  void set_memo_limit(std::size_t limit) { memo_limit_ = limit; }
  long long nodes() const { return nodes_; }

  std::optional<Path> find(Vertex x, Vertex y, int length) { return find(x, y, length, g_.vertices()); }

  std::optional<Path> find(Vertex x, Vertex y, int length, const VertexSet& allowed) {
    std::optional<Path> out;
    for_each(x, y, length, allowed, [&](const std::vector<Vertex>& p) {
      out = Path{p};
      return false;
    });
    return out;
  }

  bool exists(Vertex x, Vertex y, int length) { return find(x, y, length).has_value(); }

  /// Calls visit(path) for every x-y path of the given length inside
  /// `allowed`, until visit returns false. Returns false if stopped early.
  bool for_each(Vertex x, Vertex y, int length, const VertexSet& allowed,
                const std::function<bool(const std::vector<Vertex>&)>& visit) {
    g_.check(x);
    g_.check(y);
    if (length < 1 || x == y || !allowed.contains(x) || !allowed.contains(y)) return true;
    if (length > n_ - 1) return true;
    target_ = y;
    visit_ = &visit;
    memo_.clear();
    stack_.assign(1, x);
    used_.assign(static_cast<std::size_t>(w_), 0);
    auto aw = allowed.words();
    allowed_.assign(aw.begin(), aw.end());
    set(used_, x);
    scratch_.resize(static_cast<std::size_t>(length + 2));
    stopped_ = false;
    dfs(x, length, 0);
    visit_ = nullptr;
    return !stopped_;
  }

 private:
  struct Scratch {
    std::vector<Word> avail, seen, frontier, next;
    std::vector<int> dist;
  };
  struct MemoKey {
    Vertex cur;
    int budget;
    std::vector<Word> comp;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      std::size_t h = static_cast<std::size_t>(k.cur) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::size_t>(k.budget);
      for (Word w : k.comp) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
      return h;
    }
  };

  static void set(std::vector<Word>& s, Vertex v) { s[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63); }
  static void reset(std::vector<Word>& s, Vertex v) { s[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63)); }
  const Word* row(Vertex v) const { return adj_.data() + static_cast<std::ptrdiff_t>(v) * w_; }

  // BFS from the target through avail. Fills sc.dist for reached vertices
  // (others -1) and leaves the reached set in sc.seen. Returns its size.
  int bfs_from_target(Scratch& sc) {
    const auto W = static_cast<std::size_t>(w_);
    sc.seen.assign(W, 0);
    sc.frontier.assign(W, 0);
    sc.next.resize(W);
    sc.dist.assign(static_cast<std::size_t>(n_), -1);
    set(sc.seen, target_);
    set(sc.frontier, target_);
    int d = 0;
    int count = 0;
    while (true) {
      std::fill(sc.next.begin(), sc.next.end(), 0);
      bool any = false;
      for (std::size_t i = 0; i < W; ++i) {
        Word f = sc.frontier[i];
        while (f) {
          Vertex v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(f)));
          f &= f - 1;
          sc.dist[static_cast<std::size_t>(v)] = d;
          ++count;
          const Word* r = row(v);
          for (std::size_t j = 0; j < W; ++j) sc.next[j] |= r[j];
        }
      }
      for (std::size_t j = 0; j < W; ++j) {
        sc.next[j] &= sc.avail[j] & ~sc.seen[j];
        sc.seen[j] |= sc.next[j];
        any = any || sc.next[j] != 0;
      }
      if (!any) break;
      std::swap(sc.frontier, sc.next);
      ++d;
    }
    return count;
  }

  // Upper bound on the length of a cur-y path inside comp+cur: sum over the
  // blocks along the block-cut chain of (block size - 1).
  int chain_bound(Vertex cur, const std::vector<Word>& comp) {
    // Tarjan biconnected components restricted to comp + {cur}.
    auto& disc = bc_disc_;
    auto& low = bc_low_;
    disc.assign(static_cast<std::size_t>(n_), -1);
    low.assign(static_cast<std::size_t>(n_), 0);
    std::vector<Word> inside = comp;
    set(inside, cur);

    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t word;
      Word rest;
    };
    std::vector<Frame> st;
    std::vector<Vertex> estack;  // vertex stack for block extraction
    std::vector<Vertex> parent(static_cast<std::size_t>(n_), -1);
    // block_of[x]: the block popped when x left the edge stack. Walking the
    // tree path from y to cur changes block exactly at articulation points.
    std::vector<int> block_of(static_cast<std::size_t>(n_), -1);
    std::vector<int> block_size;
    int timer = 0;
    auto push = [&](Vertex v, Vertex p) {
      disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
      parent[static_cast<std::size_t>(v)] = p;
      estack.push_back(v);
      st.push_back({v, p, 0, row(v)[0] & inside[0]});
    };
    push(cur, -1);
    while (!st.empty()) {
      Frame& fr = st.back();
      while (fr.rest == 0 && fr.word + 1 < static_cast<std::size_t>(w_)) {
        ++fr.word;
        fr.rest = row(fr.v)[fr.word] & inside[fr.word];
      }
      if (fr.rest != 0) {
        Vertex u = static_cast<Vertex>(fr.word * 64 + static_cast<std::size_t>(std::countr_zero(fr.rest)));
        fr.rest &= fr.rest - 1;
        if (u == fr.parent) continue;
        if (disc[static_cast<std::size_t>(u)] == -1) {
          push(u, fr.v);
        } else {
          low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(u)]);
        }
        continue;
      }
      Vertex v = fr.v;
      Vertex p = fr.parent;
      st.pop_back();
      if (p == -1) break;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
        // p separates the block containing edge p-v.
        int id = static_cast<int>(block_size.size());
        int size = 1;  // p itself
        while (true) {
          Vertex x = estack.back();
          estack.pop_back();
          block_of[static_cast<std::size_t>(x)] = id;
          ++size;
          if (x == v) break;
        }
        block_size.push_back(size);
      }
    }
    if (disc[static_cast<std::size_t>(target_)] == -1) return -1;
    // Walk up the DFS tree from y: every vertex x != cur lies in the block
    // block_of[x] attached at its block's articulation. The chain of blocks
    // on the tree path y..cur is exactly the block-cut path.
    int total = 0;
    int last_block = -1;
    for (Vertex x = target_; x != cur; x = parent[static_cast<std::size_t>(x)]) {
      int b = block_of[static_cast<std::size_t>(x)];
      if (b != last_block) {
        total += block_size[static_cast<std::size_t>(b)] - 1;
        last_block = b;
      }
    }
    return total;
  }

  bool adjacent(Vertex u, Vertex v) const { return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

  // Returns true when at least one path was reported below this node.
  bool dfs(Vertex cur, int budget, int depth) {
    ++nodes_;
    if (budget == 1) {
      if (!adjacent(cur, target_)) return false;
      stack_.push_back(target_);
      if (!(*visit_)(stack_)) stopped_ = true;
      stack_.pop_back();
      return true;
    }
    Scratch& sc = scratch_[static_cast<std::size_t>(depth)];
    const auto W = static_cast<std::size_t>(w_);
    sc.avail.resize(W);
    for (std::size_t i = 0; i < W; ++i) sc.avail[i] = allowed_[i] & ~used_[i];
    if (bfs_from_target(sc) < budget) return false;
    const Word* r = row(cur);
    std::vector<Vertex> kids;
    bool reaches = false;
    for (std::size_t i = 0; i < W; ++i) {
      Word f = r[i] & sc.seen[i];
      while (f) {
        Vertex w = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(f)));
        f &= f - 1;
        reaches = true;
        if (w != target_ && sc.dist[static_cast<std::size_t>(w)] <= budget - 1) kids.push_back(w);
      }
    }
    if (!reaches || kids.empty()) return false;
    if (budget >= 3 && chain_bound(cur, sc.seen) < budget) return false;
    MemoKey key{cur, budget, sc.seen};
    if (memo_.count(key)) return false;
    bool any = false;
    for (Vertex w : kids) {
      set(used_, w);
      stack_.push_back(w);
      any = dfs(w, budget - 1, depth + 1) || any;
      stack_.pop_back();
      reset(used_, w);
      if (stopped_) return true;
    }
    if (!any) {
      if (memo_.size() >= memo_limit_) memo_.clear();
      memo_.insert(std::move(key));
    }
    return any;
  }

  const Graph& g_;
  int n_;
  int w_;
  std::vector<Word> adj_;
  std::vector<Word> allowed_;
  std::vector<Word> used_;
  std::vector<Vertex> stack_;
  std::vector<Scratch> scratch_;
  std::vector<int> bc_disc_, bc_low_;
  Vertex target_ = -1;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  std::unordered_set<MemoKey, MemoHash> memo_;
  std::size_t memo_limit_ = 1u << 20;
  long long nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace satnum
