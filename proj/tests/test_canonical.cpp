#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pdiv/canonical.hpp"
#include "pdiv/error.hpp"
#include "pdiv/graph6.hpp"

using namespace pdiv;

TEST(Canonical, CountsMatchPermutationOracle) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_nonisomorphic(n).size(), oracle::isomorphism_classes(n)) << "n = " << n;
  }
}

TEST(Canonical, KnownCounts) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_nonisomorphic(n).size(), expected[n]) << "n = " << n;
}

TEST(Canonical, EnumerationIsCanonicalAndSorted) {
  const auto graphs = enumerate_nonisomorphic(6);
  std::vector<std::string> keys;
  std::set<std::uint64_t> classes;
  for (const Graph& g : graphs) {
    keys.push_back(encode_graph6(g));
    EXPECT_EQ(canonical_form(g), encode_graph6(g));
    classes.insert(oracle::permutation_key(g));
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(classes.size(), graphs.size());
}

TEST(Canonical, SelfComplementaryC5) {
  EXPECT_EQ(canonical_form(cycle_graph(5)), canonical_form(complement(cycle_graph(5))));
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    ASSERT_EQ(canonical_form(g), canonical_form(h));
    const auto order = canonical_labeling(g);
    ASSERT_EQ(induced_subgraph(g, order), canonical_graph(g));
  }
}

TEST(Canonical, SeparatesNonIsomorphicPairs) {
  // equal degree sequences, different graphs
  Graph two_triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}) two_triangles.add_edge(u, v);
  EXPECT_NE(canonical_form(two_triangles), canonical_form(cycle_graph(6)));
  EXPECT_FALSE(isomorphic(two_triangles, cycle_graph(6)));
  EXPECT_TRUE(isomorphic(make_named("house"), complement(path_graph(5))));
  // 10 vertices, past the default cap: Petersen against the 5-prism
  Graph petersen(10);
  Graph prism(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    petersen.add_edge(i, 5 + i);
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
    prism.add_edge(i, 5 + i);
  }
  EXPECT_FALSE(isomorphic(petersen, prism));
  std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 4, 6};
  EXPECT_TRUE(isomorphic(petersen, oracle::relabel(petersen, perm)));
}

TEST(Canonical, CapExceeded) {
  try {
    canonical_form(cycle_graph(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
  EXPECT_NO_THROW(canonical_form(cycle_graph(9), 9));
  EXPECT_THROW(enumerate_nonisomorphic(9), Error);
}

TEST(Canonical, HereditaryEnumeration) {
  const auto triangle_free = [](const Graph& g) { return oracle::clique(g) <= 2; };
  const std::size_t expected[] = {1, 2, 3, 7, 14, 38, 107, 410};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_hereditary(n, triangle_free).size(), expected[n - 1]) << "n = " << n;
  }
  // cross-check against filtering the full enumeration
  std::size_t filtered = 0;
  for (const Graph& g : enumerate_nonisomorphic(7)) filtered += triangle_free(g) ? 1 : 0;
  EXPECT_EQ(filtered, 107U);
}
