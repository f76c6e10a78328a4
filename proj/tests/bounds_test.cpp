#include <random>
#include <set>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "lpack/bounds.hpp"
#include "lpack/error.hpp"

using namespace lpack;

namespace {

Permutation doubling(std::size_t n) {
  std::vector<Vertex> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Vertex>(2 * i % n);
  return Permutation(img);
}

// Edge set of s(G) meets E(G)?
bool images_overlap(const Graph &g, const std::vector<Vertex> &img) {
  std::set<std::pair<Vertex, Vertex>> mine;
  for (auto [u, v] : g.edges())
    mine.emplace(u, v);
  for (auto [u, v] : g.edges()) {
    Vertex a = img[u], b = img[v];
    if (mine.count({std::min(a, b), std::max(a, b)}))
      return true;
  }
  return false;
}

} // namespace

TEST(Embedding, DoublingOnFiveCycle) {
  const Graph c5 = cycle_graph(5);
  const Permutation s = doubling(5);
  EXPECT_TRUE(is_embedding(c5, s));
  EXPECT_FALSE(images_overlap(c5, s.image()));
  EXPECT_EQ(cycle_count(s), 2u);
  const GoodnessCheck c = check_good(c5, s);
  EXPECT_TRUE(c.embedding);
  EXPECT_FALSE(c.short_cycles);
  EXPECT_FALSE(c.enough_cycles);
  EXPECT_EQ(c.required, 3u);
  EXPECT_FALSE(c.good());
}

TEST(Embedding, FixedEdgeIsNotAnEmbedding) {
  Graph g(3, {{0, 1}});
  const GoodnessCheck c = check_good(g, Permutation({1, 0, 2}));
  EXPECT_FALSE(c.embedding);
  EXPECT_TRUE(c.short_cycles);
  EXPECT_TRUE(c.enough_cycles);
  EXPECT_TRUE(is_good(g, Permutation({0, 2, 1})));
  EXPECT_FALSE(is_embedding(g, Permutation({0, 1})));
}

TEST(Embedding, AgreesWithEdgeImageDefinition) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = random_graph(n, rng() % (n * (n - 1) / 2 + 1), rng());
    const auto img = brute::random_perm(n, rng);
    const Permutation s(img);
    const bool expected = !images_overlap(g, img);
    ASSERT_EQ(is_embedding(g, s), expected);
    // A cycle-constant labeling with the identity and s is a labeled
    // packing exactly when s is an embedding.
    LabeledPacking lp{labeling_from_permutation(s),
                      {Permutation::identity(n), s}};
    ASSERT_EQ(verify_labeled_packing(g, lp), expected);
    ASSERT_EQ(is_good(g, s), expected && brute::involution(img) &&
                                 brute::cycles_of(img) >= 2 * n / 3);
  }
}

TEST(LabeledPacking, RejectsLabelChangesAndOverlap) {
  const Graph g(4, {{0, 1}, {2, 3}});
  const Permutation s({2, 3, 0, 1}); // maps each edge onto the other
  LabeledPacking lp{labeling_from_permutation(s),
                    {Permutation::identity(4), s}};
  EXPECT_FALSE(verify_labeled_packing(g, lp));

  const Permutation t({0, 2, 1, 3});
  lp = {labeling_from_permutation(t), {Permutation::identity(4), t}};
  EXPECT_TRUE(verify_labeled_packing(g, lp));
  lp.labeling.label = {1, 2, 3, 4};
  EXPECT_FALSE(verify_labeled_packing(g, lp));
}

TEST(Bounds, LowerValues) {
  EXPECT_EQ(lower_bound_main(9), 6u);
  EXPECT_EQ(lower_bound_main(5), 3u);
  EXPECT_EQ(lower_bound_main(3), 2u);
  EXPECT_EQ(lower_bound_woz(7), 3u);
  EXPECT_EQ(lower_bound_woz(8), 4u);
  EXPECT_EQ(lower_bound_woz(6), 2u);
  EXPECT_THROW(lower_bound_main(2), Error);
  for (std::size_t n = 3; n <= 1000; ++n)
    ASSERT_GE(lower_bound_main(n), lower_bound_woz(n)) << n;
}

TEST(Bounds, UpperFromIndependentSets) {
  EXPECT_EQ(upper_bound_mis(cycle_graph(8)).value, 6u);
  EXPECT_EQ(upper_bound_mis(Graph(3)).value, 3u);
  const Graph c3_k2_k1(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(upper_bound_mis(c3_k2_k1).value, 4u);
  EXPECT_EQ(upper_bound_mis(c3_k2_k1).vacuous, false);
  // Triangles and C4 have no embedding at all.
  EXPECT_EQ(upper_bound_mis(cycle_graph(3)).vacuous, true);
  EXPECT_EQ(upper_bound_mis(cycle_graph(4)).vacuous, true);
  EXPECT_EQ(upper_bound_mis(cycle_graph(5)).vacuous, false);
  EXPECT_FALSE(upper_bound_mis(cycle_graph(12)).vacuous.has_value());
}

TEST(Bounds, UpperMatchesSubsetFormula) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = random_graph(n, rng() % (n - 1), rng());
    const std::size_t a = brute::alpha(g);
    ASSERT_EQ(upper_bound_mis(g, 64, 0).value, a + (n - a) / 2);
  }
}

TEST(Bounds, KnownValues) {
  EXPECT_EQ(known_lambda2(Family::Cycle, 8).low, 6u);
  EXPECT_TRUE(known_lambda2(Family::Cycle, 7).exact());
  const KnownValue p7 = known_lambda2(Family::Path, 7);
  EXPECT_EQ(p7.low, 5u);
  EXPECT_EQ(p7.high, 6u);
  EXPECT_EQ(known_lambda2(Family::Tight, 3).low, 8u);
  EXPECT_THROW(known_lambda2(Family::Cycle, 5), Error);
  EXPECT_THROW(known_lambda2(Family::Random, 10), Error);
}
