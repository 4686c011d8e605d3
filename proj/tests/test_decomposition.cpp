#include <gtest/gtest.h>

#include "dirhyp/decomposition.hpp"
#include "dirhyp/errors.hpp"
#include "helpers.hpp"

using namespace dirhyp;
using dirhyp::testing::hg;

namespace {

struct Built {
  SimpleGraph gp;
  Decomposition dec;
};

Built decompose(const Hypergraph& h) {
  auto g = build_labeled_graph(h);
  auto pairs = classify_overloaded_pairs(g);
  auto gp = reduce_to_simple(g, pairs);
  orient_edges(gp.graph);
  auto dec = compute_cores(gp.graph);
  dec = decompose_r(gp.graph, std::move(dec));
  dec = build_contraction_digraph(gp.graph, std::move(dec));
  return {std::move(gp), std::move(dec)};
}

}  // namespace

TEST(Cores, Star) {
  // v a -> q, v b -> q, v c -> q: ids v 0, a 1, q 2, b 3, c 4.
  auto g = build_labeled_graph(hg("v a -> q\nv b -> q\nv c -> q"));
  orient_edges(g);
  auto dec = compute_cores(g);
  EXPECT_EQ(dec.core_labels, (std::vector<VertexId>{2}));
  EXPECT_EQ(dec.members[2], (std::vector<VertexId>{0}));
  EXPECT_TRUE(dec.in_r(1));
}

TEST(Cores, F0TriangleHasNone) {
  auto g = build_labeled_graph(hg("1 2 -> 3\n1 3 -> 2\n2 3 -> 1"));
  orient_edges(g);
  auto dec = compute_cores(g);
  EXPECT_TRUE(dec.core_labels.empty());
  for (VertexId v = 0; v < 3; ++v) EXPECT_TRUE(dec.in_r(v));
}

TEST(Cores, EmptyGraph) {
  auto dec = compute_cores(LabeledGraph(4));
  EXPECT_TRUE(dec.core_labels.empty());
}

TEST(Cores, FourLabelsAtAVertex) {
  LabeledGraph g(9);
  g.add_edge(0, 1, 5, 0);
  g.add_edge(0, 2, 6, 1);
  g.add_edge(0, 3, 7, 2);
  g.add_edge(0, 4, 8, 3);
  try {
    compute_cores(g);
    FAIL();
  } catch (const StructureViolated& e) {
    EXPECT_EQ(e.check(), "label-count");
  }
}

TEST(DecomposeR, CyclicFourCycle) {
  // Edge c_i c_{i+1} labeled c_{i-1}.
  auto b = decompose(hg("1 2 -> 4\n2 3 -> 1\n3 4 -> 2\n4 1 -> 3"));
  ASSERT_EQ(b.dec.r_components.size(), 1u);
  const auto& c = b.dec.r_components[0];
  EXPECT_EQ(c.kind, RComponent::Kind::Cycle);
  // Ids follow first appearance: 1 2 4 3.
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{0, 1, 3, 2}));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& e = b.gp.graph.edge(c.edges[i]);
    EXPECT_TRUE(e.touches(c.vertices[i]) && e.touches(c.vertices[(i + 1) % 4]));
    EXPECT_EQ(e.label, c.vertices[(i + 3) % 4]);
    EXPECT_TRUE(e.only_toward(c.vertices[i]));
  }
}

TEST(DecomposeR, SingleEdgeHasTwoCentralVertices) {
  auto b = decompose(hg("1 2 -> 3"));
  ASSERT_EQ(b.dec.r_components.size(), 2u);
  const auto& t = b.dec.r_components[0];
  EXPECT_EQ(t.kind, RComponent::Kind::Tree);
  EXPECT_EQ(t.central, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(t.central_edge, std::optional<std::size_t>(0));
  const auto& lone = b.dec.r_components[1];
  EXPECT_TRUE(lone.is_single_vertex());
  EXPECT_EQ(lone.central, (std::vector<VertexId>{2}));
}

TEST(DecomposeR, PathHasOneSink) {
  // 12 -> 3 and 23 -> 1: 2 is the sink of both edges.
  auto b = decompose(hg("1 2 -> 3\n2 3 -> 1"));
  ASSERT_EQ(b.dec.r_components.size(), 1u);
  EXPECT_EQ(b.dec.r_components[0].central, (std::vector<VertexId>{1}));
  EXPECT_FALSE(b.dec.r_components[0].central_edge);
}

TEST(ContractionDigraph, CoreHangingOffR) {
  auto b = decompose(hg("v a -> q\nv b -> q\nv c -> q"));
  ASSERT_EQ(b.dec.d_components.size(), 1u);
  const auto& d = b.dec.d_components[0];
  EXPECT_EQ(d.kind, DComponent::Kind::TreeRootedInR);
  EXPECT_EQ(d.root, std::optional<VertexId>(2));
  EXPECT_EQ(d.cores, (std::vector<VertexId>{2}));
}

TEST(ContractionDigraph, TwoCycle) {
  // r in K(q) and q in K(r).
  auto b = decompose(hg("r a -> q\nr b -> q\nq c -> r\nq d -> r"));
  ASSERT_EQ(b.dec.d_components.size(), 1u);
  const auto& d = b.dec.d_components[0];
  EXPECT_EQ(d.kind, DComponent::Kind::Unicyclic);
  EXPECT_EQ(d.cycle.size(), 2u);
}

TEST(ContractionDigraph, ThreeCycle) {
  auto b = decompose(hg("q a -> r\nq b -> r\nr c -> s\nr d -> s\ns e -> q\ns f -> q"));
  ASSERT_EQ(b.dec.d_components.size(), 1u);
  // Labels q 0, r 2, s 5; D runs k(q) -> k(r) -> k(s) -> k(q).
  EXPECT_EQ(b.dec.d_components[0].cycle, (std::vector<VertexId>{0, 2, 5}));
}

TEST(ContractionDigraph, NoCores) {
  EXPECT_TRUE(decompose(hg("1 2 -> 3")).dec.d_components.empty());
}
