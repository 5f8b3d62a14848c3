#include <gtest/gtest.h>

#include "oracles.hpp"
#include "satnum/constructions.hpp"
#include "satnum/exact_solver.hpp"
#include "satnum/upper_bounds.hpp"

using namespace satnum;

namespace {
long long choose2(long long x) { return x * (x - 1) / 2; }
}  // namespace

TEST(EhmGraph, EdgeCountOverFullGrid) {
  for (int s = 2; s <= 40; ++s)
    for (int n = s; n <= 200; n += (n < 60 ? 1 : 7)) EXPECT_EQ(ehm_graph(n, s).size(), (s - 2LL) * n - choose2(s - 1)) << s << " " << n;
}

TEST(EhmGraph, Examples) {
  Graph star = ehm_graph(6, 3);
  EXPECT_EQ(star.size(), 5);
  EXPECT_TRUE(isomorphic(star, oracle::star(5)));
  for (int s = 3; s <= 8; ++s) EXPECT_EQ(ehm_graph(s, s).size(), choose2(s) - 1);
  Graph g = ehm_graph(7, 4);
  EXPECT_EQ(g.size(), 11);
  EXPECT_TRUE(verify_saturated(g, Pattern::complete(4)).saturated());
  EXPECT_THROW(ehm_graph(3, 4), InputError);
}

TEST(KtParams, Examples) {
  for (int s = 2; s <= 7; ++s) {
    auto p = kt_params(Pattern::complete(s));
    EXPECT_EQ(p.S.size(), 1);
    EXPECT_EQ(p.b, s - 2);
    EXPECT_EQ(p.d, 1);
  }
  for (int k : {4, 6, 8, 10}) {
    auto p = kt_params(Pattern::cycle(k));
    EXPECT_EQ(p.S.size(), k / 2);
    EXPECT_EQ(p.b, k / 2 - 1);
    EXPECT_EQ(p.d, 2);
  }
  auto star = kt_params(Pattern::star(4));
  EXPECT_EQ(star.S.size(), 4);
  EXPECT_EQ(star.b, 0);
  EXPECT_EQ(star.d, 4);
}

TEST(KtParams, IndependentSetIsMaximum) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 30; ++round) {
    Graph f = oracle::random_graph(3 + static_cast<int>(rng() % 6), 0.4, rng);
    if (f.size() == 0) continue;
    auto p = kt_params(Pattern::from_graph(f));
    EXPECT_TRUE(is_independent(f, p.S));
    int alpha = 0;
    for (unsigned mask = 0; mask < (1U << f.order()); ++mask) {
      VertexSet s(f.order());
      for (int v = 0; v < f.order(); ++v)
        if ((mask >> v) & 1U) s.insert(v);
      if (is_independent(f, s)) alpha = std::max(alpha, s.size());
    }
    EXPECT_EQ(p.S.size(), alpha);
    EXPECT_EQ(p.b, f.order() - alpha - 1);
  }
}

TEST(KtBound, MatchesCliqueFormulaOnGrid) {
  for (int s = 2; s <= 51; ++s) {
    const KTParams p = kt_params(Pattern::complete(s));
    for (long long n = s; n < s + 50; ++n) EXPECT_EQ(kt_bound(n, p), Rational((s - 2) * n - choose2(s - 1)));
  }
}

TEST(KtBound, Examples) {
  for (int l = 2; l <= 8; ++l) {
    auto p = kt_params(Pattern::cycle(2 * l));
    for (long long n : {0LL, 10LL, 101LL})
      EXPECT_EQ(kt_bound(n, p), Rational(2 * (l - 1) + 1, 2) * n - Rational((l - 1) * (l + 1), 2));
  }
  EXPECT_EQ(kt_bound(0, kt_params(Pattern::complete(5))), Rational(-6));
  EXPECT_EQ(kt_bound(8, Pattern::cycle(4)), Rational(21, 2));
}

TEST(KtBound, DominatesExactValues) {
  for (const auto& f : {Pattern::complete(3), Pattern::complete(4), Pattern::cycle(4), Pattern::cycle(5), Pattern::star(3)})
    for (int n = f.order(); n <= 7; ++n) {
      auto r = sat_exact(n, f);
      ASSERT_TRUE(r.exact);
      EXPECT_LE(Rational(r.upper), kt_bound(n, f)) << f.name() << " " << n;
      if (auto fv = known_formula(n, f); fv && fv->kind == FormulaValue::Kind::exact) {
        EXPECT_EQ(fv->value, r.upper);
      }
    }
}

TEST(KtConstruction, Examples) {
  auto k4 = kt_construction(8, Pattern::complete(4));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(k4->certificate.saturated());
  EXPECT_EQ(k4->graph.size(), 13);
  EXPECT_EQ(k4->bound, Rational(13));
  auto c4 = kt_construction(8, Pattern::cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_TRUE(c4->certificate.saturated());
  EXPECT_LE(c4->graph.size(), 10);
  auto star = kt_construction(9, Pattern::star(3));
  ASSERT_TRUE(star);
  EXPECT_TRUE(star->certificate.saturated());
  // K_0 joined to a 2-regular circulant: C_9 with 9 edges, on the bound but
  // one above the star formula.
  EXPECT_TRUE(star->within_bound);
  EXPECT_EQ(star->bound, Rational(9));
  EXPECT_GE(star->graph.size(), known_formula(9, Pattern::star(3))->value);
  EXPECT_THROW(kt_construction(3, Pattern::complete(4)), InputError);
}

TEST(KnownFormula, Examples) {
  EXPECT_EQ(known_formula(21, Pattern::cycle(5))->value, 29);
  EXPECT_FALSE(known_formula(20, Pattern::cycle(5)).has_value());
  auto c6 = *known_formula(12, Pattern::cycle(6));
  EXPECT_EQ(c6.kind, FormulaValue::Kind::bounds);
  EXPECT_EQ(c6.integer_window(), (std::pair<long long, long long>{14, 16}));
  auto c8 = *known_formula(100, Pattern::cycle(8));
  EXPECT_EQ(c8.lower, Rational(109));
  EXPECT_EQ(c8.upper, Rational(131));
  EXPECT_EQ(c8.integer_window(), (std::pair<long long, long long>{110, 130}));
  EXPECT_EQ(known_formula(9, Pattern::star(3))->value, 8);
  EXPECT_EQ(known_formula(5, Pattern::star(4))->value, 6);
  for (int n = 5; n <= 40; ++n) EXPECT_EQ(known_formula(n, Pattern::cycle(4))->value, (3 * n - 5) / 2);
  EXPECT_EQ(known_formula(30, Pattern::complete(4))->value, 57);
  EXPECT_EQ(known_formula(50, Pattern::multipartite({2, 3}))->kind, FormulaValue::Kind::slope);
}

TEST(Slopes, Examples) {
  for (int r = 2; r <= 8; ++r) EXPECT_EQ(multipartite_slope(std::vector<int>(static_cast<std::size_t>(r), 1)), Rational(r - 2));
  EXPECT_EQ(multipartite_slope({2, 3}), Rational(2));
  EXPECT_EQ(multipartite_slope({3, 2}), Rational(2));
  EXPECT_EQ(cycle_slope(28).value, Rational(25, 24));
  EXPECT_TRUE(cycle_slope(28).warning.empty());
  EXPECT_FALSE(cycle_slope(10).warning.empty());
  EXPECT_THROW(multipartite_slope({4}), InputError);
  EXPECT_THROW(cycle_slope(4), InputError);
}

TEST(UpperBounds, BestUpperBoundLandsInSixCycleWindow) {
  UpperSearchOptions opt;
  opt.random_trials = 5;
  for (int n : {12, 20, 30}) {
    auto ub = best_upper_bound(n, Pattern::cycle(6), opt);
    EXPECT_TRUE(verify_saturated(ub.graph, Pattern::cycle(6)).saturated());
    EXPECT_TRUE(known_formula(n, Pattern::cycle(6))->admits(ub.edges())) << n << " " << ub.edges() << " " << ub.strategy;
  }
}

TEST(UpperBounds, SeedsAreSaturatedOrRejected) {
  for (int n : {20, 23, 26}) {
    auto hub = hub_block_seed(n, hub_blocks(5));
    if (hub) {
      Graph g = greedy_saturate(*hub, Pattern::cycle(5), PairOrder::lexicographic());
      EXPECT_TRUE(verify_saturated(g, Pattern::cycle(5)).saturated());
    }
  }
  auto bundle = path_bundle_seed(30, path_bundles(6));
  ASSERT_TRUE(bundle);
  EXPECT_TRUE(verify_saturated(*bundle, Pattern::cycle(6)).saturated());
  EXPECT_FALSE(parallel_path_seed(10, 3, 2, 5).has_value());
  auto pp = parallel_path_seed(11, 3, 2, 5);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->size(), 10);
  EXPECT_EQ(distance(*pp, 0, 1), 5);
}

TEST(UpperBounds, LongPathInstanceIsSaturated) {
  for (std::uint64_t seed : {0ULL, 1ULL}) {
    auto g = long_path_instance(40, 10, seed);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->order(), 40);
    EXPECT_TRUE(verify_saturated(*g, Pattern::cycle(10)).saturated());
  }
  EXPECT_FALSE(long_path_instance(10, 12, 0).has_value());
  EXPECT_FALSE(long_path_instance(40, 6, 0).has_value());
}

TEST(UpperBounds, ShuffleLabelsIsAnIsomorphism) {
  Graph p = oracle::petersen();
  Graph q = shuffle_labels(p, 5);
  EXPECT_EQ(q.size(), p.size());
  EXPECT_TRUE(isomorphic(p, q));
}
