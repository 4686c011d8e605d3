#include <gtest/gtest.h>

#include <random>

#include "dirhyp/errors.hpp"
#include "dirhyp/oracle.hpp"
#include "dirhyp/properties.hpp"
#include "dirhyp/recolor.hpp"
#include "helpers.hpp"
#include "instances.hpp"

using namespace dirhyp;
using dirhyp::testing::colors_of;
using dirhyp::testing::hg;

TEST(Rainbow, TwoCopiesOfAPair) {
  std::vector<Hypergraph> hs{hg("1 2 ->"), hg("1 2 ->")};
  auto r = color_rainbow(hs);
  EXPECT_EQ(colors_of(r.coloring), (std::vector<int>{1, 0}));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].bad_before, 1u);
  EXPECT_EQ(r.trace.steps[0].bad_after, 0u);
  EXPECT_TRUE(r.trace.strictly_decreasing());
}

TEST(Rainbow, SingleColor) {
  std::vector<Hypergraph> hs{hg("1 ->")};
  auto r = color_rainbow(hs);
  EXPECT_EQ(colors_of(r.coloring), (std::vector<int>{0}));
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(Rainbow, ThreeCopiesOfATriple) {
  auto h = hg("1 2 3 ->");
  std::vector<Hypergraph> hs{h, h, h};
  auto r = color_rainbow(hs);
  EXPECT_TRUE(is_rainbow_cover(hs, r.coloring));
  EXPECT_TRUE(is_polychromatic(h, r.coloring, 3));
  EXPECT_TRUE(r.trace.strictly_decreasing());
}

TEST(Rainbow, ChainsNeverExceedColorCount) {
  std::mt19937_64 rng(3);
  int runs = 0;
  for (int t = 0; t < 3000 && runs < 200; ++t) {
    std::size_t c = 2 + rng() % 3;
    std::size_t n = c + 3 + rng() % 5;
    std::vector<Hypergraph> hs;
    for (std::size_t j = 0; j < c; ++j) {
      Hypergraph h(n);
      for (int e = 0; e < 2; ++e) {
        std::vector<VertexId> vs;
        for (VertexId v = 0; v < n; ++v) {
          if (rng() % 5 != 0) vs.push_back(v);
        }
        if (vs.empty()) vs.push_back(0);
        h.add_edge(vs, {});
      }
      hs.push_back(h);
    }
    if (check_poly_condition(hs, c, 1'000'000)) continue;
    ++runs;
    auto r = color_rainbow(hs);
    EXPECT_TRUE(is_rainbow_cover(hs, r.coloring));
    EXPECT_TRUE(r.trace.strictly_decreasing());
    for (const auto& s : r.trace.steps) EXPECT_LE(s.chain_length, c);
    if (!r.trace.steps.empty()) {
      EXPECT_LE(r.trace.steps.size(), r.trace.steps.front().bad_before);
    }
  }
  EXPECT_GE(runs, 100);
}

TEST(Rainbow, ViolatedConditionIsDetected) {
  // Both families hold {1}, which cannot carry two colors.
  Hypergraph a(2), b(2);
  a.add_edge({0}, {});
  b.add_edge({0}, {});
  std::vector<Hypergraph> hs{a, b};
  EXPECT_THROW(color_rainbow(hs), ConditionViolated);
}

TEST(ColorPolychromatic, Examples) {
  auto pair = hg("1 2 ->");
  EXPECT_TRUE(is_polychromatic(pair, color_polychromatic(pair, 2), 2));
  EXPECT_THROW(color_polychromatic(hg("1 2 3 ->\n3 4 5 ->"), 2), ConditionViolated);
  auto nested = hg("1 2 3 ->\n1 2 3 4 ->");
  auto col = color_polychromatic(nested, 2);
  EXPECT_TRUE(is_polychromatic(nested, col, 2));
  EXPECT_TRUE(brute_force_polychromatic(nested, 2).has_value());
}

TEST(ColorSpecBoth, FrozenExample) {
  auto h = hg("1 2 -> 3\n4 5 -> 3");
  auto r = color_specboth(h);
  EXPECT_EQ(colors_of(r.coloring), (std::vector<int>{1, 0, 0, 1, 0}));
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].vertex, 0u);
  EXPECT_EQ(r.trace.steps[1].vertex, 3u);
  EXPECT_TRUE(r.trace.strictly_decreasing());
}

TEST(ColorSpecBoth, TrivialInputs) {
  auto empty = color_specboth(Hypergraph(2));
  EXPECT_TRUE(empty.trace.steps.empty());
  auto one = color_specboth(hg("1 2 -> 3"));
  EXPECT_EQ(one.trace.steps.size(), 1u);
  EXPECT_TRUE(is_proper_coloring(hg("1 2 -> 3"), one.coloring));
}

TEST(ColorSpecBoth, ViolationDetected) {
  // A lone tail vertex can never be fixed.
  EXPECT_THROW(color_specboth(hg("1 ->")), ConditionViolated);
}

TEST(ColorSpecBoth, RandomInstancesAreColored) {
  std::mt19937_64 rng(8);
  int runs = 0;
  for (int t = 0; t < 5000 && runs < 300; ++t) {
    std::size_t n = 3 + rng() % 6;
    Hypergraph h(n);
    for (std::size_t e = 0, m = 1 + rng() % 5; e < m; ++e) {
      std::vector<VertexId> tail, head;
      for (VertexId v = 0; v < n; ++v) {
        auto r = rng() % 3;
        if (r == 0) tail.push_back(v);
        if (r == 1) head.push_back(v);
      }
      if (tail.empty()) tail.push_back(static_cast<VertexId>(n - 1));
      head.erase(std::remove(head.begin(), head.end(), tail.back()), head.end());
      h.add_edge(tail, head);
    }
    if (check_specboth(h)) continue;
    ++runs;
    auto r = color_specboth(h);
    EXPECT_TRUE(is_proper_coloring(h, r.coloring));
    EXPECT_TRUE(r.trace.strictly_decreasing());
  }
  EXPECT_GE(runs, 100);
}

TEST(ColorLinear, FrozenExample) {
  auto h = hg("1 2 -> 3\n4 5 -> 3");
  EXPECT_EQ(colors_of(color_linear(h)), (std::vector<int>{1, 0, 1, 0, 0}));
}

TEST(ColorLinear, TrivialInputs) {
  EXPECT_EQ(colors_of(color_linear(Hypergraph(3))), (std::vector<int>{0, 0, 0}));
  auto one = hg("1 2 3 -> 4");
  EXPECT_TRUE(is_proper_coloring(one, color_linear(one)));
}

TEST(ColorLinear, NoDegreeOneVertexIsReported) {
  // Fano plane: linear, every vertex has degree 3; not Property S.
  auto fano = hg("1 2 3 ->\n1 4 5 ->\n1 6 7 ->\n2 4 6 ->\n2 5 7 ->\n3 4 7 ->\n3 5 6 ->");
  ASSERT_FALSE(check_linear(fano));
  try {
    color_linear(fano);
    FAIL();
  } catch (const StructureViolated& e) {
    EXPECT_EQ(e.check(), "degree-one-vertex");
  }
}

TEST(ColorLinear, RandomInstancesAreColored) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    auto h = dirhyp::testing::random_linear_property_s(rng, 3 + rng() % 20, 1 + rng() % 40);
    ASSERT_FALSE(check_linear(h));
    ASSERT_FALSE(check_property_s(h));
    EXPECT_TRUE(is_proper_coloring(h, color_linear(h))) << serialize(h);
  }
}
