#include <gtest/gtest.h>

#include <algorithm>

#include "dirhyp/constructions.hpp"
#include "dirhyp/oracle.hpp"
#include "dirhyp/properties.hpp"
#include "helpers.hpp"

using namespace dirhyp;
using dirhyp::testing::hg;

TEST(LowerBound, SmallestCase) {
  EXPECT_EQ(serialize(lower_bound_construction(3)), "1 3 -> 2\n2 3 -> 1\n");
}

TEST(LowerBound, CountsAndHeadBelowMaxTail) {
  for (std::size_t n = 3; n <= 9; ++n) {
    auto h = lower_bound_construction(n);
    EXPECT_EQ(h.num_edges(), n * (n - 1) * (n - 2) / 3);
    for (const auto& e : h.edges()) EXPECT_LT(e.head()[0], e.tail()[1]);
  }
  EXPECT_EQ(lower_bound_construction(5).num_edges(), 20u);
  EXPECT_THROW(lower_bound_construction(2), std::invalid_argument);
}

TEST(LowerBound, AvoidsFAndFAlt) {
  auto f = pattern("F").hypergraph;
  auto fa = pattern("F_alt").hypergraph;
  for (std::size_t n = 5; n <= 8; ++n) {
    EXPECT_FALSE(contains_subhypergraph(lower_bound_construction(n), f)) << n;
    EXPECT_FALSE(contains_subhypergraph(lower_bound_construction(n), fa)) << n;
    EXPECT_FALSE(contains_subhypergraph(oriented_lower_bound(n), f)) << n;
    EXPECT_FALSE(contains_subhypergraph(oriented_lower_bound(n), fa)) << n;
  }
}

TEST(OrientedLowerBound, CountsAndSubset) {
  EXPECT_EQ(oriented_lower_bound(5).num_edges(), 10u);
  EXPECT_EQ(oriented_lower_bound(3).num_edges(), 1u);
  EXPECT_TRUE(is_oriented(oriented_lower_bound(6)));
  auto full = lower_bound_construction(7).edges();
  auto oriented = oriented_lower_bound(7);
  for (const auto& e : oriented.edges()) {
    EXPECT_NE(std::find(full.begin(), full.end(), e), full.end());
  }
}

TEST(Tightness, KTwo) {
  auto h = tightness_construction(2);
  EXPECT_EQ(h.num_vertices(), 9u);
  EXPECT_EQ(h.num_edges(), 27u);
  for (const auto& e : h.edges()) {
    EXPECT_EQ(e.head().size(), 2u);
    EXPECT_EQ(e.tail().size(), 2u);
  }
  EXPECT_FALSE(check_property_s(h, HeadRule::AtMostTail));
  EXPECT_TRUE(check_property_s(h));
  EXPECT_FALSE(brute_force_k_colorable(h, 2));
}

TEST(Tightness, KThree) {
  auto h = tightness_construction(3);
  EXPECT_EQ(h.num_vertices(), 15u);
  EXPECT_EQ(h.num_edges(), 300u);
  EXPECT_FALSE(check_property_s(h, HeadRule::AtMostTail));
  EXPECT_FALSE(brute_force_k_colorable(h, 2));
}

TEST(Star, Counts) {
  EXPECT_EQ(star_construction(6, 3).num_edges(), 10u);
  EXPECT_EQ(star_construction(7, 4).num_edges(), 20u);
  EXPECT_EQ(star_construction(500, 3).num_edges(), 124251u);
  EXPECT_THROW(star_construction(4, 2), std::invalid_argument);
}

TEST(Star, HasPropertyS) {
  for (std::size_t k = 3; k <= 5; ++k) {
    auto h = star_construction(8, k);
    EXPECT_FALSE(check_property_s(h));
    for (const auto& e : h.edges()) EXPECT_TRUE(e.is_head(0));
  }
}

TEST(Patterns, Shapes) {
  auto s = pattern("S").hypergraph;
  EXPECT_EQ(s.num_vertices(), 5u);
  EXPECT_EQ(s.num_edges(), 2u);
  EXPECT_EQ(s.edges(), hg("1 2 -> 3\n1 4 -> 5").edges());
  auto f0 = pattern("F0").hypergraph;
  EXPECT_EQ(f0.num_vertices(), 3u);
  EXPECT_EQ(f0.edges(), hg("1 2 -> 3\n1 3 -> 2\n2 3 -> 1").edges());
  EXPECT_EQ(pattern("F").hypergraph.edges(),
            hg("1 2 -> 3\n1 3 -> 4\n2 3 -> 5\n1 4 -> 2\n2 5 -> 1").edges());
  EXPECT_EQ(pattern("F_alt").hypergraph.edges(),
            hg("1 2 -> 3\n1 3 -> 4\n2 3 -> 5\n3 4 -> 2\n3 5 -> 1").edges());
  EXPECT_THROW(pattern("G"), std::invalid_argument);
}
