#include <gtest/gtest.h>

#include <random>

#include "dirhyp/constructions.hpp"
#include "dirhyp/errors.hpp"
#include "dirhyp/main3unif.hpp"
#include "dirhyp/oracle.hpp"
#include "dirhyp/properties.hpp"
#include "helpers.hpp"
#include "instances.hpp"

using namespace dirhyp;
using dirhyp::testing::colors_of;
using dirhyp::testing::hg;

TEST(Main3, PatternSIsRejectedWithWitness) {
  try {
    color_2to1_property_s(pattern("S").hypergraph);
    FAIL();
  } catch (const PropertySViolation& e) {
    EXPECT_EQ(e.witness().edges, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.witness().vertex, VertexId{0});
  }
}

TEST(Main3, F0) {
  auto h = pattern("F0").hypergraph;
  auto r = color_2to1_property_s_detailed(h);
  EXPECT_EQ(r.normalized.num_edges(), 1u);
  EXPECT_EQ(colors_of(r.coloring), (std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(is_proper_coloring(h, r.coloring));
}

TEST(Main3, SingleEdge) {
  EXPECT_EQ(colors_of(color_2to1_property_s(hg("1 2 -> 3"))), (std::vector<int>{0, 1, 0}));
}

TEST(Main3, IsolatedVerticesAreRed) {
  Hypergraph h(4);
  h.add_edge({0, 1}, {2});
  EXPECT_EQ(color_2to1_property_s(h)[3], 0);
}

TEST(Main3, Star) {
  auto h = star_construction(6, 3);
  ASSERT_EQ(h.num_edges(), 10u);
  EXPECT_TRUE(is_proper_coloring(h, color_2to1_property_s(h)));
}

TEST(Main3, OddRCycleHasOneMonochromaticEdge) {
  // Directed 5-cycle: c_i c_{i+1} -> c_{i-1}.
  auto h = hg("1 2 -> 5\n2 3 -> 1\n3 4 -> 2\n4 5 -> 3\n5 1 -> 4");
  auto r = color_2to1_property_s_detailed(h);
  EXPECT_EQ(r.stats.odd_r_cycles, 1u);
  EXPECT_EQ(serialize_coloring(r.coloring, h), "1 0\n2 0\n5 1\n3 1\n4 0\n");
  std::size_t mono = 0;
  for (const auto& e : r.g.edges()) {
    if (r.coloring[e.a] == r.coloring[e.b]) {
      ++mono;
      EXPECT_NE(r.coloring[e.label], r.coloring[e.a]);
    }
  }
  EXPECT_EQ(mono, 1u);
}

TEST(Main3, OddDCycleMakesARebel) {
  // Cores K(r) = {q}, K(s) = {r}, K(q) = {s}: a 3-cycle in D.
  auto h = hg("q a -> r\nq b -> r\nr c -> s\nr d -> s\ns e -> q\ns f -> q");
  auto r = color_2to1_property_s_detailed(h);
  ASSERT_EQ(r.rebels.size(), 1u);
  EXPECT_EQ(r.rebels[0].rebel, 0u);
  EXPECT_EQ(r.rebels[0].host_core, 2u);
  EXPECT_EQ(r.rebels[0].minions, (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(r.stats.odd_d_cycles, 1u);
  // q a r b c s d e f
  EXPECT_EQ(colors_of(r.coloring), (std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 0}));
}

TEST(Main3, EvenDCycle) {
  auto h = hg("r a -> q\nr b -> q\nq c -> r\nq d -> r");
  auto r = color_2to1_property_s_detailed(h);
  EXPECT_EQ(r.stats.even_d_cycles, 1u);
  EXPECT_TRUE(r.rebels.empty());
  EXPECT_NE(r.coloring[0], r.coloring[2]);
}

TEST(Main3, StrongPair) {
  auto h = hg("x y -> r\nx y -> q\nx q -> r\ny r -> q");
  auto r = color_2to1_property_s_detailed(h);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].kind, OverloadedPair::Kind::Strong);
  EXPECT_TRUE(is_proper_coloring(h, r.coloring));
}

TEST(Main3, StrongPairWithALoneEnd) {
  // q u -> r puts q in K(r), cutting x off inside G'[R].
  auto h = hg("x y -> r\nx y -> q\nx q -> r\ny r -> q\nq u -> r");
  auto r = color_2to1_property_s_detailed(h);
  EXPECT_EQ(r.stats.strong_single_side, 1u);
  EXPECT_NE(r.coloring[0], r.coloring[1]);
  EXPECT_TRUE(is_proper_coloring(h, r.coloring));
}

TEST(Main3, WeakPair) {
  auto h = hg("x y -> r\nx y -> s\nx s -> r");
  auto r = color_2to1_property_s_detailed(h);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].kind, OverloadedPair::Kind::Weak);
  EXPECT_TRUE(is_proper_coloring(h, r.coloring));
}

TEST(Main3, ThreeUniformInputIsNormalized) {
  auto h = hg("1 2 3 ->\n1 2 -> 4\n4 5 -> 3");
  ASSERT_FALSE(check_property_s(h));
  auto col = color_2to1_property_s(h);
  EXPECT_TRUE(is_proper_coloring(h, col));
}

TEST(Main3, OtherShapesAreRejected) {
  EXPECT_THROW(color_2to1_property_s(hg("1 2 3 4 -> 5")), std::invalid_argument);
}

TEST(Main3, NoParallelEdgesMeansNoPairHandling) {
  // Every nonempty pairwise intersection holds a head-vertex.
  std::mt19937_64 rng(17);
  int runs = 0;
  for (int t = 0; t < 3000; ++t) {
    auto h = dirhyp::testing::random_property_s(rng, 4 + rng() % 8, 1 + rng() % 25);
    auto r = color_2to1_property_s_detailed(h);
    if (!r.pairs.empty()) continue;
    ++runs;
    EXPECT_EQ(r.stats.strong_single_side + r.stats.strong_both_single, 0u);
    EXPECT_EQ(r.reduced.graph.num_edges(), r.g.num_edges());
  }
  EXPECT_GT(runs, 100);
}

TEST(Main3, AgreesWithOracleAndKeepsCoreInvariant) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    auto h = dirhyp::testing::random_property_s(rng, 3 + rng() % 10, 1 + rng() % 40);
    auto r = color_2to1_property_s_detailed(h);
    ASSERT_TRUE(is_proper_coloring(h, r.coloring)) << serialize(h);
    ASSERT_TRUE(brute_force_k_colorable(h, 2).has_value());
    for (VertexId q : r.dec.core_labels) {
      std::size_t same = 0;
      for (VertexId v : r.dec.members[q]) same += r.coloring[v] == r.coloring[q];
      EXPECT_LE(same, 1u) << serialize(h);
    }
    for (const auto& rc : r.dec.r_components) {
      if (rc.kind == RComponent::Kind::Cycle) {
        EXPECT_GE(rc.vertices.size(), 4u);
      }
    }
  }
}

TEST(Main3, StructureReport) {
  auto h = hg("q a -> r\nq b -> r\nr c -> s\nr d -> s\ns e -> q\ns f -> q");
  auto report = structure_report(color_2to1_property_s_detailed(h));
  EXPECT_NE(report.find("q K_c(r) d0 rebel color=1"), std::string::npos) << report;
  EXPECT_NE(report.find("a R_t r0 central minion color=0"), std::string::npos) << report;
  EXPECT_NE(report.find("rebel q in K(r) minions: a b"), std::string::npos) << report;
}
