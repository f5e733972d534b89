#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pdiv/canonical.hpp"
#include "pdiv/divisibility.hpp"
#include "pdiv/error.hpp"
#include "pdiv/structure.hpp"

using namespace pdiv;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pdiv::Error thrown";
  return Errc::invalid_argument;
}

DivisibilityOptions no_memo() {
  DivisibilityOptions o;
  o.memo = nullptr;
  return o;
}

bool has_good_partition_oracle(const Graph& g, const std::vector<int>& w) {
  const auto perf = oracle::perfect_table(g);
  const oracle::Mask all = (oracle::Mask{1} << g.order()) - 1;
  const long target = oracle::weighted_clique(g, w, all);
  for (oracle::Mask b = 0; b <= all; ++b)
    if (perf[all & ~b] && oracle::weighted_clique(g, w, b) < target) return true;
  return false;
}

}  // namespace

TEST(GoodPartition, Examples) {
  const auto c5 = find_good_partition(cycle_graph(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->b.size(), 1);
  EXPECT_EQ(induced_subgraph(cycle_graph(5), c5->a), path_graph(4));
  const auto perfect = find_good_partition(cartesian_product(complete_graph(2), complete_graph(3)));
  ASSERT_TRUE(perfect);
  EXPECT_TRUE(perfect->b.empty());
  EXPECT_FALSE(find_good_partition(make_named("grotzsch")));
  EXPECT_EQ(error_of([] { find_good_partition(Graph(0)); }), Errc::empty_graph);
  EXPECT_EQ(error_of([] { find_good_partition(path_graph(3), WeightFn({1, 1})); }), Errc::weight_mismatch);
  EXPECT_EQ(error_of([] { find_good_partition(edgeless_graph(21)); }), Errc::budget_exceeded);
}

TEST(GoodPartition, AgreesWithOracleAndReverifies) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> weight(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, 0.55, rng);
    std::vector<int> w(static_cast<std::size_t>(g.order()));
    for (int& x : w) x = weight(rng);
    const auto p = find_good_partition(g, WeightFn(w));
    ASSERT_EQ(p.has_value(), has_good_partition_oracle(g, w));
    if (p) {
      ASSERT_TRUE(is_good_partition(g, *p, WeightFn(w)));
      ASSERT_TRUE(oracle::perfect(induced_subgraph(g, p->a)));
    }
  }
}

TEST(GoodPartition, RejectsBadPartitions) {
  const Graph c5 = cycle_graph(5);
  EXPECT_FALSE(is_good_partition(c5, Partition{c5.vertices(), VertexSet()}, WeightFn::unit(5)));
  EXPECT_FALSE(is_good_partition(c5, Partition{VertexSet::of({0, 1}), VertexSet::of({1, 2, 3, 4})}, WeightFn::unit(5)));
  EXPECT_FALSE(is_good_partition(c5, Partition{VertexSet::of({0, 1, 2}), VertexSet::of({3, 4})}, WeightFn::unit(5)));
  EXPECT_TRUE(is_good_partition(c5, Partition{VertexSet::of({0, 1, 2, 3}), VertexSet::of({4})}, WeightFn::unit(5)));
}

TEST(Divisible, Examples) {
  EXPECT_TRUE(is_perfectly_divisible(cartesian_product(complete_graph(2), complete_graph(4))).divisible);
  EXPECT_TRUE(is_perfectly_divisible(cycle_graph(5)).divisible);
  EXPECT_TRUE(is_perfectly_divisible(Graph(0)).divisible);
  const Graph grotzsch = make_named("grotzsch");
  const auto v = is_perfectly_divisible(grotzsch, no_memo());
  EXPECT_FALSE(v.divisible);
  ASSERT_TRUE(v.failing_subgraph);
  EXPECT_EQ(*v.failing_subgraph, grotzsch.vertices());
  EXPECT_FALSE(v.semi);
}

TEST(Divisible, AgreesWithDefinitionUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n))
      ASSERT_EQ(is_perfectly_divisible(g, no_memo()).divisible, oracle::divisible(g)) << n;
}

TEST(Divisible, WeightedAgreesWithDefinitionUpTo5) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n))
      ASSERT_EQ(is_perfectly_weight_divisible_bounded(g, 2, no_memo()).divisible, oracle::divisible(g, 2)) << n;
}

TEST(Divisible, FailingSubgraphHasNoGoodPartition) {
  // Grötzsch graph plus random extra vertices
  std::mt19937 rng(8);
  const Graph core = make_named("grotzsch");
  for (int trial = 0; trial < 10; ++trial) {
    Graph g(13);
    for (Vertex u = 0; u < 11; ++u)
      for (Vertex v : core.row(u)) if (u < v) g.add_edge(u, v);
    std::bernoulli_distribution coin(0.3);
    for (Vertex x : {11, 12})
      for (Vertex u = 0; u < x; ++u) if (coin(rng)) g.add_edge(u, x);
    const auto v = is_perfectly_divisible(g);
    ASSERT_FALSE(v.divisible);
    const Graph h = induced_subgraph(g, *v.failing_subgraph);
    EXPECT_FALSE(find_good_partition(h));
    EXPECT_TRUE(certify_mnpd(h));
  }
}

TEST(Divisible, HereditaryOnRandomSubsets) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    if (!is_perfectly_divisible(g).divisible) continue;
    const VertexSet s(std::uniform_int_distribution<std::uint64_t>(1, 1023)(rng));
    ASSERT_TRUE(is_perfectly_divisible(induced_subgraph(g, s)).divisible);
  }
}

TEST(Divisible, MemoDoesNotChangeVerdicts) {
  DivisibilityMemo memo;
  DivisibilityOptions with;
  with.memo = &memo;
  for (const Graph& g : enumerate_nonisomorphic(7)) {
    ASSERT_EQ(is_perfectly_divisible(g, with).divisible, is_perfectly_divisible(g, no_memo()).divisible);
  }
  EXPECT_GT(memo.size(), 0U);
}

TEST(WeightDivisible, Examples) {
  const auto perfect = is_perfectly_weight_divisible_bounded(complete_graph(4), 3);
  EXPECT_TRUE(perfect.divisible);
  EXPECT_TRUE(perfect.semi);
  for (int wmax = 1; wmax <= 3; ++wmax) {
    EXPECT_TRUE(is_perfectly_weight_divisible_bounded(cycle_graph(7), wmax).divisible);
    EXPECT_TRUE(is_perfectly_weight_divisible_bounded(build_graph_F(), wmax).divisible);
  }
  const auto g = is_perfectly_weight_divisible_bounded(make_named("grotzsch"), 1);
  EXPECT_FALSE(g.divisible);
  ASSERT_TRUE(g.failing_weights);
  EXPECT_EQ(g.failing_weights->size(), g.failing_subgraph->size());
  EXPECT_EQ(error_of([] { is_perfectly_weight_divisible_bounded(edgeless_graph(20), 3); }), Errc::budget_exceeded);
  EXPECT_EQ(error_of([] { is_perfectly_weight_divisible_bounded(edgeless_graph(3), 0); }), Errc::invalid_argument);
}

TEST(WeightDivisible, FailingWeightsReverify) {
  // C5 with a heavy vertex: ok; but find a weighted failure and re-check it
  for (const Graph& g : enumerate_nonisomorphic(7)) {
    const auto v = is_perfectly_weight_divisible_bounded(g, 2, no_memo());
    if (v.divisible) continue;
    const Graph h = induced_subgraph(g, *v.failing_subgraph);
    ASSERT_FALSE(find_good_partition(h, *v.failing_weights));
  }
}

TEST(WeightDivisible, UnitWeightsMatchUnweighted) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n))
      ASSERT_EQ(is_perfectly_weight_divisible_bounded(g, 1).divisible, is_perfectly_divisible(g).divisible);
}

TEST(Certify, Examples) {
  EXPECT_TRUE(certify_mnpd(make_named("grotzsch")));
  EXPECT_FALSE(certify_mnpd(cycle_graph(5)));
  EXPECT_FALSE(certify_mnpd(complete_graph(4)));
  EXPECT_FALSE(certify_mnpd(Graph(0)));
  EXPECT_TRUE(certify_mnwd_bounded(make_named("grotzsch"), 1));
  EXPECT_FALSE(certify_mnwd_bounded(cycle_graph(5), 2));
}

TEST(DropsForEveryWeighting, AgreesWithExtremeWeights) {
  // weights in {1, n} are enough to expose a failing maximal clique
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const oracle::Mask all = (oracle::Mask{1} << n) - 1;
      for (oracle::Mask b = 0; b <= all; ++b) {
        bool every = true;
        for (oracle::Mask heavy = 0; heavy <= all && every; ++heavy) {
          std::vector<int> w(static_cast<std::size_t>(n));
          for (int v = 0; v < n; ++v) w[v] = ((heavy >> v) & 1U) ? n : 1;
          every = oracle::weighted_clique(g, w, b) < oracle::weighted_clique(g, w, all);
        }
        ASSERT_EQ(drops_for_every_weighting(g, VertexSet(b)), every);
      }
    }
  }
}

TEST(ThreeColoringPartition, Examples) {
  const auto c5 = partition_from_3coloring(cycle_graph(5), WeightFn::unit(5));
  EXPECT_EQ(c5.a.size(), 4);
  EXPECT_EQ(c5.b.size(), 1);
  EXPECT_TRUE(partition_from_3coloring(cycle_graph(6), WeightFn::unit(6)).b.empty());
  const auto two = partition_from_3coloring(edgeless_graph(2), WeightFn({5, 7}));
  EXPECT_EQ(two.a, VertexSet::range(2));
  EXPECT_TRUE(two.b.empty());
  EXPECT_EQ(error_of([] { partition_from_3coloring(complete_graph(3), WeightFn::unit(3)); }),
            Errc::precondition_violated);
  EXPECT_EQ(error_of([] { partition_from_3coloring(make_named("grotzsch"), WeightFn::unit(11)); }),
            Errc::precondition_violated);
}

TEST(ThreeColoringPartition, GoodForRandomWeights) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> weight(1, 9);
  const auto triangle_free = enumerate_hereditary(8, [](const Graph& g) { return oracle::clique(g) <= 2; });
  for (const Graph& g : triangle_free) {
    if (!is_k_colorable(g, 3)) continue;
    std::vector<int> w(8);
    for (int& x : w) x = weight(rng);
    const auto p = partition_from_3coloring(g, WeightFn(w));
    ASSERT_TRUE(is_good_partition(g, p, WeightFn(w)));
  }
}

TEST(ColoringViaDivisibility, Examples) {
  const Graph prism = cartesian_product(complete_graph(2), complete_graph(4));
  const Coloring p = coloring_via_divisibility(prism);
  EXPECT_TRUE(p.proper(prism));
  EXPECT_EQ(p.count(), 4);
  const Coloring c5 = coloring_via_divisibility(cycle_graph(5));
  EXPECT_TRUE(c5.proper(cycle_graph(5)));
  EXPECT_LE(c5.count(), 3);
  EXPECT_EQ(error_of([] { coloring_via_divisibility(make_named("grotzsch")); }), Errc::precondition_violated);
}

TEST(ColoringViaDivisibility, WithinBound) {
  for (const Graph& g : enumerate_nonisomorphic(7)) {
    if (!is_perfectly_divisible(g).divisible) continue;
    const Coloring c = coloring_via_divisibility(g);
    const int omega = clique_number(g);
    ASSERT_TRUE(c.proper(g));
    ASSERT_LE(c.count(), omega * (omega + 1) / 2);
  }
}
