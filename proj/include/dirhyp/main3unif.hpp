#pragma once

#include <string>
#include <vector>

#include "dirhyp/decomposition.hpp"
#include "dirhyp/labeled_graph.hpp"
#include "dirhyp/model.hpp"
#include "dirhyp/phases.hpp"

namespace dirhyp {

/// Everything the 2->1 pipeline built on the way to its coloring.
struct Main3Result {
  Coloring coloring;
  /// The input in 2->1 form, one hyperedge per support.
  Hypergraph normalized;
  LabeledGraph g;
  std::vector<OverloadedPair> pairs;
  /// G', oriented.
  SimpleGraph reduced;
  Decomposition dec;
  std::vector<RebelRecord> rebels;
  PhaseStats stats;
};

/// Proper 2-coloring of a 2->1 hypergraph with Property S. A 3-uniform input
/// with at most one head-vertex per edge is first brought into 2->1 form.
/// Throws PropertySViolation if the input fails Property S, and
/// StructureViolated if an internal structural check fails.
Main3Result color_2to1_property_s_detailed(const Hypergraph& h);

inline Coloring color_2to1_property_s(const Hypergraph& h) {
  return color_2to1_property_s_detailed(h).coloring;
}

/// One line per vertex: class (K_c(q), K_t(q), R_c, R_t), component id and
/// central/rebel/minion flags, followed by the rebels.
std::string structure_report(const Main3Result& r);

}  // namespace dirhyp
