// Seeded instance generators shared by the unit and acceptance tests.
#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "dirhyp/model.hpp"

namespace dirhyp::testing {

/// A new 2->1 edge ab -> c keeps Property S when it meets no existing edge in
/// exactly one vertex that is a tail-vertex of both.
inline bool keeps_property_s(const Hypergraph& h, const Hyperedge& e) {
  for (const auto& f : h.edges()) {
    auto common = intersection(e, f);
    if (common.size() == 1 && e.is_tail(common[0]) && f.is_tail(common[0])) return false;
  }
  return true;
}

inline Hyperedge random_two_one(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  VertexId a = pick(rng), b, c;
  do b = pick(rng); while (b == a);
  do c = pick(rng); while (c == a || c == b);
  return Hyperedge({a, b}, {c});
}

/// Greedy insertion of random 2->1 edges that keep Property S, up to `m`
/// edges or `attempts` tries.
inline Hypergraph random_property_s(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                    std::size_t attempts = 400) {
  Hypergraph h(n);
  for (std::size_t t = 0; t < attempts && h.num_edges() < m; ++t) {
    Hyperedge e = random_two_one(rng, n);
    if (keeps_property_s(h, e)) h.add_edge(e);
  }
  return h;
}

/// Unfiltered random 2->1 hypergraph.
inline Hypergraph random_two_one_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Hypergraph h(n);
  for (std::size_t i = 0; i < m; ++i) h.add_edge(random_two_one(rng, n));
  return h;
}

/// Every 2->1 hypergraph on n vertices with at most `max_edges` edges and at
/// most one edge per vertex triple. Calls f on each.
inline void for_each_small_two_one(std::size_t n, std::size_t max_edges,
                                   const std::function<void(const Hypergraph&)>& f) {
  std::vector<Hyperedge> options;  // three orientations per triple, grouped
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        options.emplace_back(std::vector<VertexId>{a, b}, std::vector<VertexId>{c});
        options.emplace_back(std::vector<VertexId>{a, c}, std::vector<VertexId>{b});
        options.emplace_back(std::vector<VertexId>{b, c}, std::vector<VertexId>{a});
      }
    }
  }
  const std::size_t triples = options.size() / 3;
  std::vector<Hyperedge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    Hypergraph h(n);
    for (const auto& e : chosen) h.add_edge(e);
    f(h);
    if (chosen.size() == max_edges) return;
    for (std::size_t t = from; t < triples; ++t) {
      for (std::size_t o = 0; o < 3; ++o) {
        chosen.push_back(options[3 * t + o]);
        rec(t + 1);
        chosen.pop_back();
      }
    }
  };
  rec(0);
}

/// Random linear hypergraph with Property S: 3-uniform edges with one or no
/// head-vertex, inserted greedily while pairwise intersections stay at most
/// one vertex and Property S holds.
inline Hypergraph random_linear_property_s(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                           std::size_t attempts = 600) {
  Hypergraph h(n);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  for (std::size_t t = 0; t < attempts && h.num_edges() < m; ++t) {
    std::vector<VertexId> vs;
    while (vs.size() < 3) {
      VertexId v = pick(rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    bool headless = rng() % 4 == 0;
    Hyperedge e = headless ? Hyperedge(vs, {}) : Hyperedge({vs[0], vs[1]}, {vs[2]});
    bool ok = true;
    for (const auto& f : h.edges()) {
      if (intersection_size(e, f) > 1) ok = false;
    }
    if (ok && keeps_property_s(h, e)) h.add_edge(e);
  }
  return h;
}

}  // namespace dirhyp::testing
