#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp {

// Vertices are named "1" .. "n" and vertex i is named i + 1.

/// For every triple i < j < k: ik -> j and jk -> i.
Hypergraph lower_bound_construction(std::size_t n);

/// For every triple i < j < k: ik -> j only.
Hypergraph oriented_lower_bound(std::size_t n);

/// Three parts V_0, V_1, V_2 of 2k - 1 vertices each (V_i holds vertices
/// i(2k-1)+1 .. (i+1)(2k-1)). For each i and each choice of k vertices in V_i
/// and k in V_{i+1 mod 3}, one hyperedge with the V_i side as its head.
Hypergraph tightness_construction(std::size_t k);

/// Every k-set containing vertex 1, with head {1}.
Hypergraph star_construction(std::size_t n, std::size_t k);

struct NamedPattern {
  std::string name;
  Hypergraph hypergraph;
};

/// One of "S", "F", "F_alt", "F0". Throws std::invalid_argument otherwise.
NamedPattern pattern(std::string_view name);

const std::vector<std::string>& pattern_names();

}  // namespace dirhyp
