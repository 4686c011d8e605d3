#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp {

/// Which endpoints an edge ab is directed towards. An edge points at a when a
/// is adjacent to the edge's label vertex.
enum class Orientation { Undirected, TowardA, TowardB, Both };

/// Edge on {a, b} (a < b) labeled by the head of its hyperedge `ab -> label`.
struct LabeledEdge {
  VertexId a;
  VertexId b;
  VertexId label;
  Orientation orientation = Orientation::Undirected;
  /// Index of the hyperedge this edge stands for.
  std::size_t hyperedge;

  VertexId other(VertexId x) const { return x == a ? b : a; }
  bool touches(VertexId x) const { return x == a || x == b; }
  bool toward(VertexId x) const;
  /// Directed towards x but not towards the other endpoint.
  bool only_toward(VertexId x) const { return toward(x) && !toward(other(x)); }
};

/// Multigraph with labeled edges and per-vertex incidence lists.
class LabeledGraph {
 public:
  explicit LabeledGraph(std::size_t n = 0) : inc_(n) {}

  /// Throws std::invalid_argument if the label is an endpoint.
  std::size_t add_edge(VertexId u, VertexId v, VertexId label, std::size_t hyperedge);

  std::size_t num_vertices() const { return inc_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const LabeledEdge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const std::size_t> incident(VertexId v) const { return inc_.at(v); }
  void set_orientation(std::size_t i, Orientation o) { edges_.at(i).orientation = o; }

  /// Some edge on {u, v}, if any (the first added).
  std::optional<std::size_t> edge_between(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

 private:
  static std::uint64_t key(VertexId u, VertexId v);

  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<std::size_t>> inc_;
  std::unordered_map<std::uint64_t, std::size_t> first_on_pair_;
};

/// One edge per hyperedge `ab -> s`: endpoints a, b and label s. Requires a
/// 2->1 hypergraph; edge i stands for hyperedge i.
LabeledGraph build_labeled_graph(const Hypergraph& h);

/// A vertex pair carrying parallel edges.
struct OverloadedPair {
  enum class Kind { Weak, Strong };

  Kind kind;
  /// For strong pairs x is the endpoint whose extra edge carries label r.
  VertexId x;
  VertexId y;
  /// Parallel edges on {x, y}, ascending.
  std::vector<std::size_t> edges;
  /// Weak: the kept edge. Its label differs from every other label at x or y.
  std::size_t representative = 0;
  // Strong pairs have exactly two parallel edges labeled r and q, plus the
  // companion edges xq (label r) and yr (label q), and nothing else at x or y.
  VertexId r = 0;
  VertexId q = 0;
  std::size_t companion_x = 0;
  std::size_t companion_y = 0;
};

/// Classifies every overloaded pair, ordered by (min vertex, max vertex).
/// Throws StructureViolated if two pairs share a vertex or a non-weak pair is
/// not of the two-edge strong shape; either certifies that the source
/// hypergraph lacks Property S.
std::vector<OverloadedPair> classify_overloaded_pairs(const LabeledGraph& g);

/// G' together with its relation to G.
struct SimpleGraph {
  LabeledGraph graph;
  /// G' edge -> G edge.
  std::vector<std::size_t> origin;
  /// G edge -> index into the pair list, for deleted edges only.
  std::vector<std::optional<std::size_t>> deleted_by;
};

/// Drops all parallel edges of strong pairs and all but the representative of
/// weak pairs. Orientations are not computed here.
SimpleGraph reduce_to_simple(const LabeledGraph& g, std::span<const OverloadedPair> pairs);

/// Orients every edge by adjacency to its label within `g` itself.
void orient_edges(LabeledGraph& g);

}  // namespace dirhyp
