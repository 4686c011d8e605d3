#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dirhyp/decomposition.hpp"
#include "dirhyp/labeled_graph.hpp"
#include "dirhyp/model.hpp"

namespace dirhyp {

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

/// The core vertex q in K(r) flipped to blue on an odd D-cycle, and the R
/// vertices tied to it by G' edges labeled r.
struct RebelRecord {
  VertexId rebel;
  VertexId host_core;
  std::vector<VertexId> minions;
};

/// How often each special case of the coloring fired.
struct PhaseStats {
  std::size_t even_d_cycles = 0;
  std::size_t odd_d_cycles = 0;
  std::size_t odd_r_cycles = 0;
  std::size_t minion_central_edges = 0;
  /// Strong pair with one endpoint alone in its R component.
  std::size_t strong_single_side = 0;
  /// Strong pair with both endpoints alone in their R components.
  std::size_t strong_both_single = 0;
};

struct PhaseResult {
  Coloring coloring;
  std::vector<RebelRecord> rebels;
  PhaseStats stats;
};

/// Runs the four coloring phases on the decomposition of G' (`gp`, already
/// oriented), handling the overloaded pairs of G. Throws StructureViolated
/// when a structural fact the phases depend on fails.
PhaseResult run_phases(const LabeledGraph& g, const SimpleGraph& gp,
                       std::span<const OverloadedPair> pairs, const Decomposition& dec);

}  // namespace dirhyp
