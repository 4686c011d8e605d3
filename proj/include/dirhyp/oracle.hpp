#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp {

/// Some proper c-coloring of h, or nullopt if none exists. Assignments are
/// tried in counting order with the first vertex fixed to color 0. Throws
/// CapExceeded if h has more than `cap_vertices` vertices.
std::optional<Coloring> brute_force_k_colorable(const Hypergraph& h, int c,
                                                std::size_t cap_vertices = 24);

/// Some coloring in which every hyperedge sees all c colors, or nullopt.
/// Throws CapExceeded if c^n exceeds `cap`.
std::optional<Coloring> brute_force_polychromatic(const Hypergraph& h, int c,
                                                  std::uint64_t cap = 1u << 24);

/// Pattern vertex i maps to host vertex `vertex_map[i]`; pattern edge j maps
/// to host edge `edge_map[j]`, with tail onto tail and head onto head.
struct Embedding {
  std::vector<VertexId> vertex_map;
  std::vector<std::size_t> edge_map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// The first embedding of `pattern` into `host` found by backtracking over
/// pattern vertices in order of decreasing degree, or nullopt. Throws
/// CapExceeded after `cap` search nodes.
std::optional<Embedding> contains_subhypergraph(const Hypergraph& host, const Hypergraph& pattern,
                                                std::uint64_t cap = 100'000'000);

/// Injective vertex map, distinct host edges, and each pattern edge sent
/// exactly onto its host edge.
bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& e);

}  // namespace dirhyp
