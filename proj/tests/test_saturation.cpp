#include <gtest/gtest.h>

#include "oracles.hpp"
#include "satnum/constructions.hpp"
#include "satnum/saturation.hpp"

using namespace satnum;

TEST(IsFree, Examples) {
  EXPECT_TRUE(is_free(Graph(6), Pattern::cycle(4)));
  EXPECT_FALSE(is_free(oracle::complete(5), Pattern::complete(3)));
  EXPECT_TRUE(is_free(oracle::star(5), Pattern::cycle(4)));
}

TEST(VerifySaturated, Examples) {
  for (int n = 3; n <= 9; ++n) EXPECT_TRUE(verify_saturated(oracle::star(n - 1), Pattern::cycle(3)).saturated()) << n;
  for (int s = 3; s <= 6; ++s)
    for (int n = s; n <= 12; ++n) EXPECT_TRUE(verify_saturated(ehm_graph(n, s), Pattern::complete(s)).saturated());
  auto c6 = verify_saturated(oracle::cycle(6), Pattern::cycle(6));
  EXPECT_EQ(c6.status, SaturationCertificate::Status::not_free);
  ASSERT_TRUE(c6.embedding.has_value());
  EXPECT_TRUE(c6.embedding->valid(oracle::cycle(6), Pattern::cycle(6)));
  auto empty = verify_saturated(Graph(4), Pattern::cycle(3));
  EXPECT_EQ(empty.status, SaturationCertificate::Status::not_saturated);
  ASSERT_TRUE(empty.pair.has_value());
  EXPECT_TRUE(is_free(Graph(4).with_edge(empty.pair->first, empty.pair->second), Pattern::cycle(3)));
}

TEST(VerifySaturated, WitnessesCoverEveryNonEdge) {
  Graph g = ehm_graph(8, 4);
  auto cert = verify_saturated(g, Pattern::complete(4), true);
  ASSERT_TRUE(cert.saturated());
  EXPECT_EQ(cert.witnesses.size(), g.non_edges().size());
  for (const auto& [pair, emb] : cert.witnesses) {
    Graph h = g.with_edge(pair.first, pair.second);
    EXPECT_TRUE(emb.valid(h, Pattern::complete(4)));
    EXPECT_TRUE(emb.uses_edge(Pattern::complete(4), pair.first, pair.second));
  }
}

TEST(VerifySaturated, AgreesWithBruteForceOnSevenVertices) {
  std::mt19937_64 rng(21);
  for (const auto& f : {Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5), Pattern::star(3), Pattern::multipartite({2, 2})}) {
    for (int round = 0; round < 120; ++round) {
      Graph g = oracle::random_graph(7, 0.25 + 0.05 * static_cast<double>(round % 6), rng);
      if (round % 3 == 0 && is_free(g, f)) g = greedy_saturate(g, f, PairOrder::random(rng()));
      EXPECT_EQ(verify_saturated(g, f).saturated(), oracle::saturated(g, f.graph())) << f.name() << " " << to_graph6(g);
    }
  }
}

class GreedyProperties : public ::testing::TestWithParam<Pattern> {};

TEST_P(GreedyProperties, OutputIsSaturatedSupersetAndFixpoint) {
  const Pattern f = GetParam();
  std::mt19937_64 rng(22);
  for (int round = 0; round < 12; ++round) {
    const int n = f.order() + static_cast<int>(rng() % 8);
    Graph seed(n);
    if (round % 2) {
      seed = oracle::random_graph(n, 0.1, rng);
      if (!is_free(seed, f)) continue;
    }
    for (PairOrder order : {PairOrder::lexicographic(), PairOrder::random(rng()), PairOrder::degree_ascending(),
                           PairOrder::vertex_sequential(rng()), PairOrder::hub_first(rng())}) {
      Graph g = greedy_saturate(seed, f, order);
      EXPECT_TRUE(verify_saturated(g, f).saturated());
      for (auto [u, v] : seed.edges()) EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_EQ(greedy_saturate(g, f, PairOrder::random(rng())), g);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Patterns, GreedyProperties,
                         ::testing::Values(Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5), Pattern::cycle(6),
                                           Pattern::complete(4), Pattern::star(3), Pattern::multipartite({2, 3})),
                         [](const auto& info) {
                           std::string s = info.param.name();
                           std::string out;
                           for (char c : s)
                             if (std::isalnum(static_cast<unsigned char>(c))) out += c;
                           return out;
                         });

TEST(GreedySaturate, Examples) {
  Graph g = greedy_saturate(Graph(6), Pattern::cycle(3), PairOrder::lexicographic());
  EXPECT_TRUE(is_free(g, Pattern::cycle(3)));
  EXPECT_GE(g.size(), 5);
  EXPECT_THROW(greedy_saturate(oracle::complete(3), Pattern::cycle(3), PairOrder::lexicographic()), InputError);
  // Seeded orders are reproducible.
  EXPECT_EQ(greedy_saturate(Graph(12), Pattern::cycle(5), PairOrder::random(9)),
            greedy_saturate(Graph(12), Pattern::cycle(5), PairOrder::random(9)));
}

TEST(GreedySaturate, RandomOrdersReachKnownMinimumAtEight) {
  long long best = 1 << 20;
  for (std::uint64_t s = 0; s < 200; ++s) best = std::min<long long>(best, greedy_saturate(Graph(8), Pattern::cycle(4), PairOrder::random(s)).size());
  EXPECT_EQ(best, 9);
}
