// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "coqa/errors.hpp"
#include "coqa/problem_graph.hpp"
#include "support.hpp"

using namespace coqa;

TEST(ErdosRenyi, ZeroProbabilityGivesNoEdges) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(gen_erdos_renyi(10, 0.0, seed).num_edges(), 0u);
  }
}

TEST(ErdosRenyi, ProbabilityOneGivesClique) {
  const auto g = gen_erdos_renyi(4, 1.0, 42);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g, gen_clique(4));
  EXPECT_EQ(gen_erdos_renyi(17, 1.0, 3), gen_clique(17));
}

TEST(ErdosRenyi, EdgeCountConcentrates) {
  // Binomial(300, 0.5): mean 150, sigma 8.66.
  const double mean = 150.0;
  const double sigma = std::sqrt(300 * 0.25);
  double total = 0.0;
  int outside = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const double m = static_cast<double>(gen_erdos_renyi(25, 0.5, seed).num_edges());
    total += m;
    if (std::abs(m - mean) > 3 * sigma) ++outside;
  }
  EXPECT_LE(outside, 10);  // about 2.7 expected
  EXPECT_NEAR(total / 1000.0, mean, 1.0);
}

TEST(ErdosRenyi, SameSeedSameGraph) {
  EXPECT_EQ(gen_erdos_renyi(30, 0.3, 99), gen_erdos_renyi(30, 0.3, 99));
  EXPECT_NE(gen_erdos_renyi(30, 0.3, 99), gen_erdos_renyi(30, 0.3, 100));
}

TEST(ErdosRenyi, RejectsBadParameters) {
  EXPECT_THROW((void)gen_erdos_renyi(5, -0.1, 0), ParameterError);
  EXPECT_THROW((void)gen_erdos_renyi(5, 1.5, 0), ParameterError);
  EXPECT_THROW((void)gen_erdos_renyi(5, std::numeric_limits<double>::quiet_NaN(), 0), ParameterError);
  EXPECT_THROW((void)gen_erdos_renyi(-1, 0.5, 0), ParameterError);
}

TEST(ErdosRenyi, UniformWeightsInRange) {
  const auto g = gen_erdos_renyi(20, 0.5, 1, uniform_weights());
  ASSERT_GT(g.num_edges(), 0u);
  for (const auto& e : g.edges()) {
    EXPECT_GT(e.w, 0.0);
    EXPECT_LE(e.w, 1.0);
  }
}

TEST(KRegular, TwentySix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_k_regular(20, 6, seed);
    EXPECT_EQ(g.num_edges(), 60u);
    for (int d : g.degrees()) EXPECT_EQ(d, 6);
  }
}

TEST(KRegular, LargerShapes) {
  for (auto [n, k] : {std::pair{20, 8}, std::pair{25, 10}, std::pair{30, 3}}) {
    const auto g = gen_k_regular(n, k, 7);
    EXPECT_EQ(g.num_edges(), static_cast<std::size_t>(n * k / 2));
    for (int d : g.degrees()) EXPECT_EQ(d, k);
  }
}

TEST(KRegular, FourThreeIsK4) { EXPECT_EQ(gen_k_regular(4, 3, 5), gen_clique(4)); }

TEST(KRegular, OddProductRejected) {
  EXPECT_THROW((void)gen_k_regular(3, 1, 0), ParameterError);
  EXPECT_THROW((void)gen_k_regular(5, 5, 0), ParameterError);
  EXPECT_THROW((void)gen_k_regular(5, -1, 0), ParameterError);
}

TEST(KRegular, Deterministic) { EXPECT_EQ(gen_k_regular(20, 6, 11), gen_k_regular(20, 6, 11)); }

TEST(Clique, EdgeCounts) {
  EXPECT_EQ(gen_clique(1).num_edges(), 0u);
  EXPECT_EQ(gen_clique(5).num_edges(), 10u);
  EXPECT_EQ(gen_clique(65).num_edges(), 2080u);
  const auto k6 = gen_clique(6);
  for (const auto& e : k6.edges()) EXPECT_EQ(e.w, 1.0);
}

TEST(Graph, ZeroWeightRemovesEdge) {
  ProblemGraph g(3);
  g.set_weight(2, 0, 1.5);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_EQ(g.weight(2, 0), 1.5);
  EXPECT_EQ(g.edges().front(), (Edge{0, 2, 1.5}));
  g.set_weight(0, 2, 0.0);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.weight(0, 2), 0.0);
}

TEST(Graph, RejectsSelfLoopAndRange) {
  ProblemGraph g(3);
  EXPECT_THROW(g.set_weight(1, 1, 1.0), ParameterError);
  EXPECT_THROW(g.set_weight(0, 3, 1.0), ParameterError);
}

TEST(GraphIO, MinimalFile) {
  const auto g = load_graph("n=2\n0 1 1.0\n");
  EXPECT_EQ(g.num_nodes(), 2);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 1.0}));
}

TEST(GraphIO, SelfLoopIsParseErrorWithLine) {
  try {
    (void)load_graph("n=4\n3 3 1.0\n");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(GraphIO, MalformedInputs) {
  EXPECT_THROW((void)load_graph(""), ParseError);
  EXPECT_THROW((void)load_graph("0 1 1.0\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=x\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=2\n0 2 1.0\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=2\n0 1\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=2\n0 1 abc\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=3\n0 1 1\n1 0 2\n"), ParseError);
  EXPECT_THROW((void)load_graph("n=2\n0 1 inf\n"), ParseError);
}

TEST(GraphIO, CommentsBlankLinesAndZeroWeights) {
  const auto g = load_graph("# header comment\n\nn=3   # three nodes\n0 1 2.5\n\n1 2 0.0\n");
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(GraphIO, FixtureRoundTripIsCanonical) {
  const auto text = test::read_file(test::data_path("graph25.txt"));
  const auto canonical = test::read_file(test::data_path("graph25.canonical.txt"));
  const auto g = load_graph(text);
  EXPECT_EQ(g.num_nodes(), 25);
  EXPECT_EQ(save_graph(g), canonical);
  EXPECT_EQ(load_graph(save_graph(g)), g);
}

TEST(GraphIO, RoundTripIsExactForRandomWeights) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_erdos_renyi(15, 0.4, seed, uniform_weights());
    EXPECT_EQ(load_graph(save_graph(g)), g);
  }
}

TEST(Rng, UniformHelpers) {
  std::mt19937_64 rng(5);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 2000; ++k) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    seen.insert(uniform_below(rng, 7));
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(*seen.rbegin(), 6u);
}
