#include <gtest/gtest.h>

#include "oracles.hpp"
#include "satnum/discharging.hpp"
#include "satnum/upper_bounds.hpp"

using namespace satnum;

namespace {
Graph greedy_cycle_instance(int ell, int n, std::uint64_t seed) {
  return greedy_saturate(Graph(n), Pattern::cycle(2 * ell), PairOrder::random(seed));
}

std::vector<AuditReport> small_ell_runs() {
  std::vector<AuditReport> out;
  for (int ell : {3, 4, 5}) {
    auto p = DischargeParams::make(ell, true);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Graph g = greedy_cycle_instance(ell, 16 + static_cast<int>(seed) * 3, seed);
      out.push_back(run_discharging(g, p));
      out.push_back(run_discharging(g, p, true, peripheral_order(g)));
    }
    if (ell >= 4) {
      auto g = long_path_instance(40, 2 * ell, 1);
      if (g) out.push_back(run_discharging(*g, p));
    }
  }
  return out;
}
}  // namespace

TEST(DischargeParams, Make) {
  auto p = DischargeParams::make(14);
  EXPECT_EQ(p.k, 28);
  EXPECT_EQ(p.c, 79);
  EXPECT_EQ(p.alpha, Rational(1, 24));
  EXPECT_FALSE(p.premise_violated);
  auto q = DischargeParams::make(20);
  EXPECT_EQ(q.c, 115);
  EXPECT_EQ(q.alpha, Rational(1, 36));
  EXPECT_THROW(DischargeParams::make(5), PreconditionError);
  auto small = DischargeParams::make(5, true);
  EXPECT_TRUE(small.premise_violated);
  EXPECT_EQ(small.alpha, Rational(1, 6));
  EXPECT_THROW(DischargeParams::make(2, true), InputError);
}

TEST(EligibleBall, Examples) {
  auto p = DischargeParams::make(4, true);  // radius 3, c = 19
  Graph path = oracle::path(13);
  auto ball = eligible_ball(path, 6, p);
  ASSERT_TRUE(ball);
  EXPECT_EQ(ball->to_vector(), (std::vector<Vertex>{3, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(eligible_ball(path, 0, p)->size(), 4);

  // A degree-19 vertex two steps away blocks the ball; three steps away it does not.
  Graph g = oracle::path(8);
  for (int i = 0; i < 18; ++i) {
    g = Graph(g.order() + 1, [&] {
      auto e = g.edges();
      e.push_back({2, g.order()});
      return e;
    }());
  }
  ASSERT_EQ(g.degree(2), 20);
  EXPECT_FALSE(eligible_ball(g, 4, p).has_value());
  EXPECT_TRUE(eligible_ball(g, 5, p).has_value());
  EXPECT_THROW(eligible_ball(g, 99, p), InputError);
}

TEST(PeripheralOrder, IsAPermutationByEccentricity) {
  Graph g = greedy_cycle_instance(4, 22, 3);
  auto order = peripheral_order(g);
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(sorted, all);
  auto d = oracle::all_distances(g);
  auto ecc = [&](Vertex v) { return *std::max_element(d[static_cast<std::size_t>(v)].begin(), d[static_cast<std::size_t>(v)].end()); };
  for (std::size_t i = 0; i + 1 < order.size(); ++i) EXPECT_GE(ecc(order[i]), ecc(order[i + 1]));
}

TEST(Partition, ClassesAndBlackEdgesAreConsistent) {
  for (const auto& R : small_ell_runs()) {
    const auto& L = R.ledger;
    const int ell = L.params.ell;
    std::size_t counted_D = 0;
    for (Vertex v = 0; v < L.n(); ++v) {
      const int l = L.layer[static_cast<std::size_t>(v)];
      ASSERT_TRUE(l == kLayerM || l == kLayerA || l == kLayerB || (l >= 0 && l <= ell - 2)) << v << " " << l;
      EXPECT_EQ(L.M.contains(v), l == kLayerM);
      EXPECT_EQ(L.A.contains(v), l == kLayerA);
      EXPECT_EQ(L.B.contains(v), l == kLayerB);
      if (l >= 1) {
        ++counted_D;
        Vertex up = L.parent[static_cast<std::size_t>(v)];
        ASSERT_GE(up, 0);
        EXPECT_TRUE(L.graph.has_edge(v, up));
        EXPECT_TRUE(L.is_black(v, up));
      }
    }
    EXPECT_EQ(counted_D, R.size_D);
    // M is a union of balls around the centres.
    for (Vertex c : L.s) {
      auto ball = eligible_ball(L.graph, c, L.params);
      ASSERT_TRUE(ball);
      EXPECT_TRUE(ball->is_subset_of(L.M));
    }
  }
}

TEST(Audit, InvariantsHoldOnSmallEll) {
  for (const auto& R : small_ell_runs()) {
    for (const auto& c : R.checks)
      if (c.level == "invariant") EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_TRUE(R.ok());
    // Lemma checks are advisory below l = 14.
    for (const auto& c : R.checks)
      if (c.level == "lemma") EXPECT_FALSE(c.hard);
  }
}

TEST(Audit, ConservationAndPendantIdentitiesRecomputed) {
  for (const auto& R : small_ell_runs()) {
    const auto& L = R.ledger;
    const Rational a = L.params.alpha;
    // Gray edges touching D, each counted half per D endpoint, carry all the weight in D.
    Rational gray_half(0);
    for (auto [u, v] : L.graph.edges()) {
      if (L.is_black(u, v)) continue;
      if (L.in_D(u)) gray_half += Rational(1, 2);
      if (L.in_D(v)) gray_half += Rational(1, 2);
    }
    Rational sum_wt(0);
    for (Vertex v = 0; v < L.n(); ++v)
      if (L.in_D(v)) sum_wt += L.wt[static_cast<std::size_t>(v)];
    EXPECT_EQ(sum_wt, gray_half);
    for (const auto& T : L.trees)
      if (T.members.size() == 1 && L.graph.degree(T.top) == 1) EXPECT_EQ(L.beta[static_cast<std::size_t>(T.top)], -a);
    ASSERT_NE(R.find("conservation"), nullptr);
    EXPECT_TRUE(R.find("conservation")->passed);
    EXPECT_TRUE(R.find("pendant-beta")->passed);
    EXPECT_TRUE(R.find("beta-sum-identity")->passed);
    EXPECT_EQ(R.global_slack, Rational(R.edges) - (1 + a) * static_cast<long long>(L.n() - R.size_M - R.size_A));
  }
}

TEST(Audit, RefusesUnsaturatedInput) {
  auto p = DischargeParams::make(4, true);
  EXPECT_THROW(run_discharging(oracle::path(20), p), PreconditionError);
  EXPECT_NO_THROW(run_discharging(oracle::path(20), p, true));
}

TEST(Audit, LargeEllPathInstancePasses) {
  auto g = long_path_instance(120, 28, 7);
  ASSERT_TRUE(g);
  auto R = run_discharging(*g, DischargeParams::make(14), true);
  EXPECT_TRUE(R.ok());
  for (const auto* c : R.hard_failures()) ADD_FAILURE() << c->name << ": " << c->detail;
  EXPECT_LE(R.family_F, 3 * R.size_M);
  EXPECT_GE(R.global_slack, Rational(0));
}

TEST(PathContraction, RemovesSurplusParallelPaths) {
  for (auto [ell, core] : {std::pair{4, 8}, std::pair{5, 10}}) {
    const int k = 2 * ell;
    const int n = core + 5 * (k - 4);
    auto p = DischargeParams::make(ell, true);
    Graph g = core_first_greedy(*parallel_path_seed(n, core, 5, k - 3), Pattern::cycle(k), core, 0);
    auto r = path_contraction_reduce(g, p);
    EXPECT_EQ(r.removed_paths, 3) << ell;
    EXPECT_EQ(r.graph.order(), n - 3 * (k - 4));
    EXPECT_EQ(r.excess_before, r.excess_after);
    EXPECT_EQ(r.excess_after, edge_excess(r.graph, p));
    EXPECT_TRUE(verify_saturated(r.graph, Pattern::cycle(k)).saturated());
    for (std::size_t i = 0; i + 1 < r.kept.size(); ++i) EXPECT_LT(r.kept[i], r.kept[i + 1]);
  }
}

TEST(PathContraction, IdentityWithoutSurplus) {
  auto p = DischargeParams::make(4, true);
  Graph g = greedy_cycle_instance(4, 20, 2);
  auto r = path_contraction_reduce(g, p);
  EXPECT_EQ(r.removed_paths, 0);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.kept.size(), static_cast<std::size_t>(g.order()));
}

TEST(Export, JsonAndDot) {
  auto p = DischargeParams::make(3, true);
  Graph g = greedy_cycle_instance(3, 20, 1);
  auto R = run_discharging(g, p);
  auto j = to_json(R);
  EXPECT_EQ(j["ok"].get<bool>(), R.ok());
  EXPECT_EQ(j["checks"].size(), R.checks.size());
  EXPECT_EQ(j["edges"].get<long long>(), g.size());
  EXPECT_EQ(j["ledger"]["ell"].get<int>(), 3);
  auto round = nlohmann::json::parse(j.dump());
  EXPECT_EQ(round, j);
  std::string dot = ledger_to_dot(R.ledger);
  EXPECT_EQ(dot.rfind("graph ledger {", 0), 0U);
  EXPECT_EQ(static_cast<long long>(std::count(dot.begin(), dot.end(), '-') / 2), g.size());
}
