#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dirhyp/labeled_graph.hpp"
#include "dirhyp/model.hpp"

namespace dirhyp {

/// A connected component of G'[R].
struct RComponent {
  enum class Kind { Cycle, Tree };

  Kind kind;
  /// Cycle: c_0 .. c_{k-1} in order, where edge c_i c_{i+1} has label c_{i-1}
  /// and is directed only towards c_i. Tree: ascending.
  std::vector<VertexId> vertices;
  /// G' edges of the component. For a cycle, edges[i] joins c_i and c_{i+1}.
  std::vector<std::size_t> edges;
  /// Tree only: one or two central vertices.
  std::vector<VertexId> central;
  /// Tree only: set when there are two central vertices.
  std::optional<std::size_t> central_edge;

  bool is_single_vertex() const { return kind == Kind::Tree && vertices.size() == 1; }
};

/// A weakly connected component of the contraction digraph D that contains at
/// least one contracted core. Core nodes are named by their label q.
struct DComponent {
  enum class Kind { TreeRootedInR, Unicyclic };

  Kind kind;
  /// Labels q of the cores in this component, ascending.
  std::vector<VertexId> cores;
  /// TreeRootedInR: the sink, a vertex of R.
  std::optional<VertexId> root;
  /// Unicyclic: core labels around the cycle, starting at the smallest, with
  /// each D edge running from cycle[i] to cycle[i + 1].
  std::vector<VertexId> cycle;
};

/// Everything the phases need to know about G'. Filled in three steps:
/// compute_cores, decompose_r, build_contraction_digraph.
struct Decomposition {
  /// core_of[v] = q when v is in K(q).
  std::vector<std::optional<VertexId>> core_of;
  /// members[q] = K(q), ascending; empty for most q.
  std::vector<std::vector<VertexId>> members;
  /// Labels with a nonempty core, ascending.
  std::vector<VertexId> core_labels;

  std::vector<RComponent> r_components;
  /// Per vertex: index into r_components, or -1 for vertices of K.
  std::vector<int> r_component_of;

  std::vector<DComponent> d_components;
  /// Per label q with a nonempty core: index into d_components, else -1.
  std::vector<int> d_component_of;

  bool in_r(VertexId v) const { return !core_of[v].has_value(); }
  bool in_k(VertexId v) const { return core_of[v].has_value(); }
  /// The D successor of k(q): q itself when q is in R, else the label of the
  /// core containing q.
  bool d_next_is_core(VertexId q) const { return in_k(q); }
  VertexId d_next(VertexId q) const { return in_k(q) ? *core_of[q] : q; }
};

/// K(q) = vertices with at least two incident edges labeled q. Asserts the
/// local label structure at every vertex and that a core only spans edges
/// with its own label.
Decomposition compute_cores(const LabeledGraph& gp);

/// Splits G'[R] into cyclically directed cycles and trees with their central
/// vertices, asserting the orientation invariants for R along the way.
Decomposition decompose_r(const LabeledGraph& gp, Decomposition dec);

/// Contracts every core to one node and classifies the components of the
/// resulting functional digraph.
Decomposition build_contraction_digraph(const LabeledGraph& gp, Decomposition dec);

}  // namespace dirhyp
