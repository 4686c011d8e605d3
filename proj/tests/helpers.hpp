#pragma once

#include <string_view>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp::testing {

inline Hypergraph hg(std::string_view text) { return parse_hypergraph(text); }

inline std::vector<int> colors_of(const Coloring& c) { return {c.values().begin(), c.values().end()}; }

inline Coloring coloring(const std::vector<int>& values, int colors) {
  Coloring c(values.size(), colors);
  for (VertexId v = 0; v < values.size(); ++v) c.set(v, values[v]);
  return c;
}

}  // namespace dirhyp::testing
