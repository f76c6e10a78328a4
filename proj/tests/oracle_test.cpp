#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "lpack/bounds.hpp"
#include "lpack/error.hpp"
#include "lpack/oracle.hpp"

using namespace lpack;

TEST(Oracle, SmallExactValues) {
  EXPECT_EQ(exact_lambda2(cycle_graph(6)).value, 4u);
  EXPECT_EQ(exact_lambda2(Graph(3)).value, 3u);
  const Graph k3_2k1 = kc3_2k1(1);
  EXPECT_EQ(brute::lambda2(k3_2k1), 3u);
  EXPECT_EQ(exact_lambda2(k3_2k1).value, 3u);
}

TEST(Oracle, NoEmbedding) {
  for (const Graph &g : {cycle_graph(3), cycle_graph(4)}) {
    const OracleResult r = exact_lambda2(g);
    EXPECT_FALSE(r.value);
    EXPECT_FALSE(r.witness);
    EXPECT_FALSE(exists_embedding(g));
  }
  EXPECT_TRUE(exists_embedding(cycle_graph(5)));
}

TEST(Oracle, WitnessIsAnOptimalEmbedding) {
  const OracleResult r = exact_lambda2(cm_2k1(7));
  ASSERT_TRUE(r.value);
  EXPECT_GE(*r.value, 6u);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_embedding(cm_2k1(7), *r.witness));
  EXPECT_EQ(cycle_count(*r.witness), *r.value);
  EXPECT_GT(r.explored, 0u);
}

TEST(Oracle, MatchesFactorialScan) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = random_graph(n, rng() % (n * (n - 1) / 2 + 1), rng());
    ASSERT_EQ(exact_lambda2(g).value, brute::lambda2(g)) << serialize_graph(g);
  }
}

TEST(Oracle, DominatesEveryEmbedding) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + rng() % 5;
    const Graph g = random_graph(n, n - 2, rng());
    const auto best = exact_lambda2(g).value;
    ASSERT_TRUE(best);
    for (int j = 0; j < 50; ++j) {
      const Permutation s(brute::random_perm(n, rng));
      if (is_embedding(g, s))
        ASSERT_LE(cycle_count(s), *best);
    }
  }
}

TEST(Oracle, EdgeDeletionNeverHurts) {
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t m = 1; m <= n * (n - 1) / 2; ++m)
      for (const Graph &g : enumerate_graphs(n, m)) {
        const auto full = exact_lambda2(g).value;
        if (!full)
          continue;
        for (auto [u, v] : g.edges()) {
          const auto less = exact_lambda2(g.without_edge(u, v)).value;
          ASSERT_TRUE(less);
          ASSERT_GE(*less, *full);
        }
      }
}

TEST(Oracle, DeficiencyTwoGraphsAlwaysEmbed) {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const Graph &g : enumerate_graphs(n, n - 2))
      ASSERT_TRUE(exists_embedding(g)) << serialize_graph(g);
}

TEST(Oracle, SizeLimit) {
  try {
    exact_lambda2(path_graph(10));
    FAIL() << "no size limit";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
  EXPECT_NO_THROW(exact_lambda2(Graph(4), 4));
}

TEST(Oracle, LimitFromEnvironment) {
  ::unsetenv("LABELED_PACK_ORACLE_LIMIT");
  EXPECT_EQ(oracle_limit_from_env(), kDefaultOracleLimit);
  ::setenv("LABELED_PACK_ORACLE_LIMIT", "11", 1);
  EXPECT_EQ(oracle_limit_from_env(), 11u);
  ::setenv("LABELED_PACK_ORACLE_LIMIT", "eleven", 1);
  EXPECT_EQ(oracle_limit_from_env(), kDefaultOracleLimit);
  ::unsetenv("LABELED_PACK_ORACLE_LIMIT");
}

TEST(InvolutionSearch, FindsLexFirstBest) {
  const Graph g = kc3_2k1(1);
  const auto good = find_good_permutation(g);
  ASSERT_TRUE(good);
  EXPECT_TRUE(is_good(g, *good));
  EXPECT_EQ(cycle_count(*good), 3u);

  // Pinning 0 <-> 3 leaves {1, 2, 4}; the cycle target counts free vertices
  // only, and at most two cycles fit there.
  InvolutionSearch pinned(g, {3, -1, -1, 0, -1});
  EXPECT_FALSE(InvolutionSearch(g, {3, -1, -1, 0, -1}).run(3));
  const auto s = pinned.run(2);
  ASSERT_TRUE(s);
  EXPECT_EQ((*s)(0), 3);
  EXPECT_TRUE(is_good(g, *s));

  EXPECT_FALSE(find_good_permutation(cycle_graph(4)));
}
