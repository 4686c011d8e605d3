#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp {

/// One accepted recoloring: `vertex` moved from `from` to `to`, taking the
/// number of unsatisfied hyperedges from `bad_before` to `bad_after`.
struct RecolorStep {
  VertexId vertex;
  int from;
  int to;
  std::size_t bad_before;
  std::size_t bad_after;
  /// Chain length used to find the vertex (1 when the first candidate worked).
  std::size_t chain_length = 1;
};

struct RecolorTrace {
  std::vector<RecolorStep> steps;

  /// Every step lowers the bad count and consecutive steps chain up.
  bool strictly_decreasing() const;
};

struct RecolorResult {
  Coloring coloring;
  RecolorTrace trace;
};

/// Colors the common vertex set of c families so that every hyperedge of
/// family j has a vertex of color j. Starts from all-zero and repeatedly fixes
/// the first unsatisfied hyperedge via the chain-recoloring argument. Throws
/// ConditionViolated when the chain cannot continue, which happens only if
/// the families violate the intersection hypothesis.
RecolorResult color_rainbow(std::span<const Hypergraph> hs);

/// Polychromatic c-coloring of h, via color_rainbow on c copies of h. Checks
/// the hypothesis first and throws ConditionViolated with the witness text if
/// it fails; `cap` bounds that check.
Coloring color_polychromatic(const Hypergraph& h, int c, std::uint64_t cap = 10'000'000);

/// Proper 2-coloring by flipping a tail-vertex of the first monochromatic
/// hyperedge until none is left. Throws ConditionViolated if a flip does not
/// reduce the monochromatic count.
RecolorResult color_specboth(const Hypergraph& h);

/// Proper 2-coloring of a linear hypergraph with Property S by peeling
/// degree-one vertices. Throws StructureViolated if a peel step finds no
/// vertex of degree at most one.
Coloring color_linear(const Hypergraph& h);

}  // namespace dirhyp
