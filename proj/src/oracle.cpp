#include "dirhyp/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dirhyp/errors.hpp"

namespace dirhyp {

namespace {

// Edges grouped by their largest vertex, so a search assigning vertices in
// id order can test each edge the moment it is fully colored.
std::vector<std::vector<std::size_t>> edges_by_last_vertex(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> out(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) out[h.edge(i).vertices().back()].push_back(i);
  return out;
}

template <class EdgeOk>
std::optional<Coloring> search_colorings(const Hypergraph& h, int c, EdgeOk edge_ok) {
  const std::size_t n = h.num_vertices();
  Coloring col(n, c, 0);
  if (n == 0) return col;
  auto closing = edges_by_last_vertex(h);
  // Iterative DFS: next[v] is the next color to try at v.
  std::vector<int> next(n, 0);
  std::size_t v = 0;
  while (true) {
    int limit = v == 0 ? 1 : c;
    if (next[v] >= limit) {
      if (v == 0) return std::nullopt;
      next[v] = 0;
      --v;
      continue;
    }
    col.set(static_cast<VertexId>(v), next[v]++);
    bool ok = std::all_of(closing[v].begin(), closing[v].end(),
                          [&](std::size_t e) { return edge_ok(h.edge(e), col); });
    if (!ok) continue;
    if (v + 1 == n) return col;
    ++v;
  }
}

}  // namespace

std::optional<Coloring> brute_force_k_colorable(const Hypergraph& h, int c,
                                                std::size_t cap_vertices) {
  if (c < 1) throw std::invalid_argument("color count must be positive");
  if (h.num_vertices() > cap_vertices) {
    throw CapExceeded(std::to_string(h.num_vertices()) + " vertices exceed the cap of " +
                      std::to_string(cap_vertices));
  }
  return search_colorings(h, c, [](const Hyperedge& e, const Coloring& col) {
    auto vs = e.vertices();
    return std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return col[v] != col[vs[0]]; });
  });
}

std::optional<Coloring> brute_force_polychromatic(const Hypergraph& h, int c, std::uint64_t cap) {
  if (c < 1) throw std::invalid_argument("color count must be positive");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < h.num_vertices(); ++i) {
    if (total > cap / static_cast<std::uint64_t>(c)) {
      throw CapExceeded(std::to_string(c) + "^" + std::to_string(h.num_vertices()) +
                        " colorings exceed the cap of " + std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(c);
  }
  return search_colorings(h, c, [c](const Hyperedge& e, const Coloring& col) {
    std::vector<char> seen(c, 0);
    for (VertexId v : e.vertices()) seen[col[v]] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  });
}

namespace {

using Sides = std::pair<std::vector<VertexId>, std::vector<VertexId>>;

Sides sides_of(const Hyperedge& e) {
  return {{e.tail().begin(), e.tail().end()}, {e.head().begin(), e.head().end()}};
}

Sides image(const Hyperedge& e, const std::vector<VertexId>& map) {
  Sides s;
  for (VertexId v : e.tail()) s.first.push_back(map[v]);
  for (VertexId v : e.head()) s.second.push_back(map[v]);
  std::sort(s.first.begin(), s.first.end());
  std::sort(s.second.begin(), s.second.end());
  return s;
}

struct Degrees {
  std::vector<std::size_t> tail, head;
};

Degrees degrees(const Hypergraph& h) {
  Degrees d{std::vector<std::size_t>(h.num_vertices()), std::vector<std::size_t>(h.num_vertices())};
  for (const auto& e : h.edges()) {
    for (VertexId v : e.tail()) ++d.tail[v];
    for (VertexId v : e.head()) ++d.head[v];
  }
  return d;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Hypergraph& host, const Hypergraph& pattern, std::uint64_t cap)
      : host_(host), pattern_(pattern), cap_(cap) {
    for (std::size_t i = 0; i < host.num_edges(); ++i) by_sides_[sides_of(host.edge(i))].push_back(i);
    hd_ = degrees(host);
    pd_ = degrees(pattern);
    const std::size_t k = pattern.num_vertices();
    order_.resize(k);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return pd_.tail[a] + pd_.head[a] > pd_.tail[b] + pd_.head[b];
    });
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[order_[i]] = i;
    closing_.resize(k);
    for (std::size_t j = 0; j < pattern.num_edges(); ++j) {
      std::size_t last = 0;
      for (VertexId v : pattern.edge(j).vertices()) last = std::max(last, pos[v]);
      closing_[last].push_back(j);
    }
    map_.assign(k, 0);
    used_vertex_.assign(host.num_vertices(), 0);
    used_edge_.assign(host.num_edges(), 0);
    edge_map_.assign(pattern.num_edges(), 0);
  }

  std::optional<Embedding> run() {
    if (pattern_.num_vertices() > host_.num_vertices()) return std::nullopt;
    if (extend(0)) return Embedding{map_, edge_map_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId p = order_[depth];
    for (VertexId x = 0; x < host_.num_vertices(); ++x) {
      if (used_vertex_[x] || hd_.tail[x] < pd_.tail[p] || hd_.head[x] < pd_.head[p]) continue;
      if (++nodes_ > cap_) throw CapExceeded("containment search exceeded " + std::to_string(cap_) + " nodes");
      map_[p] = x;
      used_vertex_[x] = 1;
      std::vector<std::size_t> taken;
      bool ok = true;
      // Host edges with identical sides are interchangeable, so taking the
      // first unused one never loses an embedding.
      for (std::size_t j : closing_[depth]) {
        auto it = by_sides_.find(image(pattern_.edge(j), map_));
        std::optional<std::size_t> pick;
        if (it != by_sides_.end()) {
          for (std::size_t f : it->second) {
            if (!used_edge_[f]) {
              pick = f;
              break;
            }
          }
        }
        if (!pick) {
          ok = false;
          break;
        }
        used_edge_[*pick] = 1;
        edge_map_[j] = *pick;
        taken.push_back(*pick);
      }
      if (ok && extend(depth + 1)) return true;
      for (std::size_t f : taken) used_edge_[f] = 0;
      used_vertex_[x] = 0;
    }
    return false;
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::map<Sides, std::vector<std::size_t>> by_sides_;
  Degrees hd_, pd_;
  std::vector<VertexId> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<VertexId> map_;
  std::vector<char> used_vertex_;
  std::vector<char> used_edge_;
  std::vector<std::size_t> edge_map_;
};

}  // namespace

std::optional<Embedding> contains_subhypergraph(const Hypergraph& host, const Hypergraph& pattern,
                                                std::uint64_t cap) {
  return EmbeddingSearch(host, pattern, cap).run();
}

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& e) {
  if (e.vertex_map.size() != pattern.num_vertices() || e.edge_map.size() != pattern.num_edges()) {
    return false;
  }
  std::vector<VertexId> vs = e.vertex_map;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (!vs.empty() && vs.back() >= host.num_vertices()) return false;
  std::vector<std::size_t> es = e.edge_map;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t j = 0; j < pattern.num_edges(); ++j) {
    if (e.edge_map[j] >= host.num_edges()) return false;
    if (image(pattern.edge(j), e.vertex_map) != sides_of(host.edge(e.edge_map[j]))) return false;
  }
  return true;
}

}  // namespace dirhyp
