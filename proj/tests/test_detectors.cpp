#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pdiv/canonical.hpp"
#include "pdiv/detectors.hpp"
#include "pdiv/error.hpp"

using namespace pdiv;

namespace {

int hole_subsets(const Graph& g, int parity, int min_len, int max_len) {
  int count = 0;
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << g.order()); ++s) {
    const int k = std::popcount(s);
    if (k < min_len || k > max_len || (parity >= 0 && k % 2 != parity)) continue;
    const Graph h = induced_subgraph(g, VertexSet(s));
    bool two = true;
    for (Vertex v = 0; v < h.order(); ++v) two = two && h.degree(v) == 2;
    if (two && oracle::components(h, (oracle::Mask{1} << k) - 1) == 1) ++count;
  }
  return count;
}

Graph c5_with_pendant_path() {
  Graph g(7);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(0, 5);
  g.add_edge(5, 6);
  return g;
}

}  // namespace

TEST(ContainsInduced, Examples) {
  const Graph bull = make_named("bull");
  const auto self = contains_induced(bull, bull);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(contains_induced(cycle_graph(5), bull));
  EXPECT_FALSE(contains_induced(cycle_graph(6), make_named("house")));
  EXPECT_FALSE(contains_induced(path_graph(3), path_graph(4)));
  EXPECT_TRUE(contains_induced(cycle_graph(6), path_graph(5)));
  EXPECT_FALSE(contains_induced(cycle_graph(5), path_graph(5)));
}

TEST(ContainsInduced, AgreesWithOracleAndWitnessesVerify) {
  std::mt19937 rng(99);
  const auto patterns = {make_named("bull"), make_named("diamond"), make_named("claw"), path_graph(4),
                         cycle_graph(4),     make_named("house"),   edgeless_graph(3), make_named("paw")};
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 6, 0.5, rng);
    for (const Graph& h : patterns) {
      const auto w = contains_induced(g, h);
      ASSERT_EQ(w.has_value(), oracle::contains_induced(g, h));
      if (w) ASSERT_TRUE(verify_witness(g, *w));
    }
  }
}

TEST(FindHole, Examples) {
  const auto odd = find_hole(cycle_graph(5), Parity::odd);
  ASSERT_TRUE(odd);
  EXPECT_EQ(odd->vertices.size(), 5U);
  EXPECT_TRUE(verify_witness(cycle_graph(5), *odd));
  const auto even = find_hole(cycle_graph(6), Parity::even);
  ASSERT_TRUE(even);
  EXPECT_EQ(even->vertices.size(), 6U);
  EXPECT_FALSE(find_hole(complete_graph(4), Parity::any));
  EXPECT_FALSE(find_hole(cycle_graph(6), Parity::odd));
  EXPECT_FALSE(find_hole(cycle_graph(7), Parity::odd, 9));
  EXPECT_THROW(find_hole(cycle_graph(5), Parity::any, 3), Error);
}

TEST(FindHole, AgreesWithSubsetOracle) {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      ASSERT_EQ(find_hole(g, Parity::odd, 5).has_value(), oracle::has_hole(g, 1, 5));
      ASSERT_EQ(find_hole(g, Parity::even, 4).has_value(), oracle::has_hole(g, 0, 4));
      const auto all = enumerate_holes(g, Parity::any, 4, 6);
      ASSERT_EQ(static_cast<int>(all.size()), hole_subsets(g, -1, 4, 6));
      for (const auto& c : all) {
        ASSERT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
        ASSERT_TRUE(verify_witness(g, Witness{"hole", c, cycle_graph(static_cast<int>(c.size()))}));
      }
    }
  }
}

TEST(FindHole, NoneExactlyWhenChordal) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n)) ASSERT_EQ(!find_hole(g, Parity::any), oracle::chordal(g));
}

TEST(FindOddAntihole, Examples) {
  const Graph anti7 = complement(cycle_graph(7));
  const auto w = find_odd_antihole(anti7, 7);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(anti7, *w));
  EXPECT_TRUE(find_odd_antihole(cycle_graph(5), 5));
  EXPECT_FALSE(find_odd_antihole(cycle_graph(6), 5));
  EXPECT_FALSE(find_odd_antihole(cycle_graph(5), 7));
  for (const Graph& g : enumerate_nonisomorphic(7)) {
    ASSERT_EQ(find_odd_antihole(g, 5).has_value(), oracle::has_hole(complement(g), 1, 5));
  }
}

TEST(FindOddTorch, Examples) {
  const Graph torch = make_odd_torch(5, VertexSet::of({0}));
  const auto w = find_odd_torch(torch);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(torch, *w));
  EXPECT_FALSE(find_odd_torch(cycle_graph(7)));
  const auto p = find_odd_torch(c5_with_pendant_path());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices[5], 5);
  EXPECT_EQ(p->vertices[6], 6);
  EXPECT_TRUE(verify_witness(c5_with_pendant_path(), *p));
  // y may attach to a larger stable set
  const Graph wide = make_odd_torch(7, VertexSet::of({0, 2, 4}));
  EXPECT_TRUE(find_odd_torch(wide));
  // x adjacent to the hole breaks the configuration
  Graph broken = c5_with_pendant_path();
  broken.add_edge(6, 2);
  EXPECT_FALSE(find_odd_torch(broken));
}

TEST(FindOddTorch, AgreesWithPatternSearch) {
  // on n <= 8 the only torches are on a 5-hole, attached to one vertex or two
  // non-adjacent ones
  const Graph t1 = make_odd_torch(5, VertexSet::of({0}));
  const Graph t2 = make_odd_torch(5, VertexSet::of({0, 2}));
  for (int n = 7; n <= 8; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const bool generic = contains_induced(g, t1).has_value() || contains_induced(g, t2).has_value();
      const auto w = find_odd_torch(g);
      ASSERT_EQ(w.has_value(), generic);
      if (w) ASSERT_TRUE(verify_witness(g, *w));
    }
  }
}

TEST(Selectors, Parse) {
  EXPECT_EQ(parse_selector("bull").kind, SelectorKind::pattern);
  EXPECT_EQ(parse_selector("odd torch").kind, SelectorKind::odd_torch);
  EXPECT_EQ(parse_selector("odd_hole").kind, SelectorKind::odd_hole);
  EXPECT_EQ(parse_selector("P11").pattern, path_graph(11));
  EXPECT_EQ(parse_selector("C4").pattern, cycle_graph(4));
  EXPECT_EQ(parse_selector("K3").pattern, complete_graph(3));
  EXPECT_EQ(parse_selector("4K1").pattern, edgeless_graph(4));
  EXPECT_EQ(parse_selector("K1_3").pattern, make_named("claw"));
  const auto spec = parse_class_spec("bull, P14 ,C5,C4");
  EXPECT_EQ(spec.forbidden.size(), 4U);
  for (std::string_view bad : {"", "bull,", "Q7", "C2", "P0", "odd-thing"}) {
    try {
      parse_class_spec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unresolvable_selector) << bad;
    }
  }
  EXPECT_THROW(is_class_member(cycle_graph(5), ClassSpec{}), Error);
}

TEST(Membership, Examples) {
  const auto bull_torch = parse_class_spec("bull,odd-torch");
  EXPECT_TRUE(is_class_member(cycle_graph(5), bull_torch).member);
  const Graph torch = make_odd_torch(5, VertexSet::of({0}));
  const auto m = is_class_member(torch, parse_class_spec("odd-torch"));
  EXPECT_FALSE(m.member);
  ASSERT_TRUE(m.witness);
  EXPECT_TRUE(verify_witness(torch, *m.witness));
  EXPECT_EQ(m.witness->kind, "odd-torch");
  const Graph prism = cartesian_product(complete_graph(2), complete_graph(3));
  EXPECT_TRUE(is_class_member(prism, parse_class_spec("bull,diamond")).member);
  EXPECT_FALSE(is_class_member(make_named("house"), parse_class_spec("C4")).member);
  EXPECT_TRUE(is_free_of(cycle_graph(7), parse_selector("even-hole")));
  EXPECT_FALSE(is_free_of(complement(cycle_graph(7)), parse_selector("odd-antihole")));
}

TEST(Membership, HereditaryOnRandomSubsets) {
  std::mt19937 rng(5);
  const auto spec = parse_class_spec("bull,odd-torch,C4");
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(9, 0.45, rng);
    if (!is_class_member(g, spec).member) continue;
    const VertexSet s(std::uniform_int_distribution<std::uint64_t>(0, 511)(rng));
    ASSERT_TRUE(is_class_member(induced_subgraph(g, s), spec).member);
  }
}
