#include "dirhyp/constructions.hpp"

#include <array>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace dirhyp {

namespace {

// Calls f on every k-subset of `items`, in lexicographic order of positions.
void for_each_subset(const std::vector<VertexId>& items, std::size_t k,
                     const std::function<void(const std::vector<VertexId>&)>& f) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<VertexId> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
    f(pick);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Hypergraph triples(std::size_t n, bool both) {
  if (n < 3) throw std::invalid_argument("construction needs n >= 3");
  Hypergraph h(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      for (VertexId k = j + 1; k < n; ++k) {
        h.add_edge({i, k}, {j});
        if (both) h.add_edge({j, k}, {i});
      }
    }
  }
  return h;
}

Hypergraph from_edges(std::size_t n, std::initializer_list<std::array<VertexId, 3>> edges) {
  Hypergraph h(n);
  for (auto [a, b, c] : edges) h.add_edge({a - 1, b - 1}, {c - 1});
  return h;
}

}  // namespace

Hypergraph lower_bound_construction(std::size_t n) { return triples(n, true); }

Hypergraph oriented_lower_bound(std::size_t n) { return triples(n, false); }

Hypergraph tightness_construction(std::size_t k) {
  if (k < 2) throw std::invalid_argument("tightness construction needs k >= 2");
  const std::size_t part = 2 * k - 1;
  Hypergraph h(3 * part);
  std::vector<std::vector<VertexId>> parts(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t v = 0; v < part; ++v) parts[i].push_back(static_cast<VertexId>(i * part + v));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for_each_subset(parts[i], k, [&](const std::vector<VertexId>& head) {
      for_each_subset(parts[(i + 1) % 3], k,
                      [&](const std::vector<VertexId>& tail) { h.add_edge(tail, head); });
    });
  }
  return h;
}

Hypergraph star_construction(std::size_t n, std::size_t k) {
  if (k < 3 || n < k) throw std::invalid_argument("star construction needs n >= k >= 3");
  Hypergraph h(n);
  std::vector<VertexId> rest;
  for (VertexId v = 1; v < n; ++v) rest.push_back(v);
  for_each_subset(rest, k - 1, [&](const std::vector<VertexId>& tail) { h.add_edge(tail, {0}); });
  return h;
}

NamedPattern pattern(std::string_view name) {
  if (name == "S") return {"S", from_edges(5, {{1, 2, 3}, {1, 4, 5}})};
  if (name == "F") {
    return {"F", from_edges(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {1, 4, 2}, {2, 5, 1}})};
  }
  if (name == "F_alt") {
    return {"F_alt", from_edges(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {3, 4, 2}, {3, 5, 1}})};
  }
  if (name == "F0") return {"F0", from_edges(3, {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}})};
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

const std::vector<std::string>& pattern_names() {
  static const std::vector<std::string> names{"S", "F", "F_alt", "F0"};
  return names;
}

}  // namespace dirhyp
