#include "dirhyp/recolor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirhyp/errors.hpp"
#include "dirhyp/properties.hpp"

namespace dirhyp {

bool RecolorTrace::strictly_decreasing() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].bad_after >= steps[i].bad_before) return false;
    if (i > 0 && steps[i].bad_before != steps[i - 1].bad_after) return false;
  }
  return true;
}

RecolorResult color_rainbow(std::span<const Hypergraph> hs) {
  if (hs.empty()) throw std::invalid_argument("color_rainbow needs at least one family");
  const std::size_t c = hs.size();
  const std::size_t n = hs[0].num_vertices();
  for (const auto& h : hs) {
    if (h.num_vertices() != n) throw std::invalid_argument("families must share one vertex set");
  }

  Coloring col(n, static_cast<int>(c), 0);
  // inc[j][v]: edges of family j through v. have[j][e]: vertices of that edge
  // currently colored j.
  std::vector<std::vector<std::vector<std::size_t>>> inc(c);
  std::vector<std::vector<std::size_t>> have(c);
  std::size_t bad = 0;
  for (std::size_t j = 0; j < c; ++j) {
    inc[j].resize(n);
    have[j].resize(hs[j].num_edges());
    for (std::size_t e = 0; e < hs[j].num_edges(); ++e) {
      for (VertexId v : hs[j].edge(e).vertices()) {
        inc[j][v].push_back(e);
        if (col[v] == static_cast<int>(j)) ++have[j][e];
      }
      if (have[j][e] == 0) ++bad;
    }
  }

  RecolorResult out{col, {}};
  while (bad > 0) {
    std::size_t target = 0, first = 0;
    bool located = false;
    for (std::size_t j = 0; j < c && !located; ++j) {
      for (std::size_t e = 0; e < have[j].size(); ++e) {
        if (have[j][e] == 0) {
          target = j, first = e, located = true;
          break;
        }
      }
    }

    // Chain: X is the running intersection of the unsatisfied edge with the
    // blocking edges found so far; every chain vertex is the only vertex of
    // its blocking edge in its color.
    auto xs = hs[target].edge(first).vertices();
    std::vector<VertexId> common(xs.begin(), xs.end());
    std::vector<VertexId> chain;
    std::vector<char> used(c, 0);
    used[target] = 1;
    VertexId pick = 0;
    int from = 0;
    for (;;) {
      auto it = std::find_if(common.begin(), common.end(), [&](VertexId v) {
        return std::find(chain.begin(), chain.end(), v) == chain.end();
      });
      if (it == common.end()) {
        throw ConditionViolated("chain intersection of size " + std::to_string(common.size()) +
                                " after " + std::to_string(chain.size() + 1) + " hyperedges");
      }
      pick = *it;
      from = out.coloring[pick];
      if (used[from]) {
        throw ConditionViolated("chain vertex repeats color " + std::to_string(from));
      }
      std::optional<std::size_t> blocker;
      for (std::size_t e : inc[from][pick]) {
        if (have[from][e] == 1) {
          blocker = e;
          break;
        }
      }
      if (!blocker) break;
      used[from] = 1;
      chain.push_back(pick);
      auto bs = hs[from].edge(*blocker).vertices();
      std::vector<VertexId> next;
      std::set_intersection(common.begin(), common.end(), bs.begin(), bs.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }

    const std::size_t before = bad;
    for (std::size_t e : inc[from][pick]) {
      if (--have[from][e] == 0) ++bad;
    }
    for (std::size_t e : inc[target][pick]) {
      if (have[target][e]++ == 0) --bad;
    }
    out.coloring.set(pick, static_cast<int>(target));
    out.trace.steps.push_back(
        {pick, from, static_cast<int>(target), before, bad, chain.size() + 1});
    if (bad >= before) throw ConditionViolated("recoloring did not reduce the bad count");
  }
  return out;
}

Coloring color_polychromatic(const Hypergraph& h, int c, std::uint64_t cap) {
  if (c < 1) throw std::invalid_argument("color count must be positive");
  std::vector<Hypergraph> copies(static_cast<std::size_t>(c), h);
  if (auto w = check_poly_condition(copies, copies.size(), cap)) {
    throw ConditionViolated(w->describe(h));
  }
  auto result = color_rainbow(copies);
  if (!is_polychromatic(h, result.coloring, c)) {
    throw std::logic_error("rainbow cover of identical families is not polychromatic");
  }
  return std::move(result.coloring);
}

RecolorResult color_specboth(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<std::size_t>> inc(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e).vertices()) inc[v].push_back(e);
  }
  RecolorResult out{Coloring(n, 2, 0), {}};
  // ones[e]: vertices of edge e colored 1. Everything starts at color 0.
  std::vector<std::size_t> ones(h.num_edges(), 0);
  auto mono = [&](std::size_t e) { return ones[e] == 0 || ones[e] == h.edge(e).size(); };
  std::size_t bad = h.num_edges();

  std::size_t cursor = 0;
  while (bad > 0) {
    while (!mono(cursor)) cursor = (cursor + 1) % h.num_edges();
    const auto& e = h.edge(cursor);
    if (e.tail().empty()) throw ConditionViolated("monochromatic hyperedge has no tail-vertex");
    VertexId v = e.tail()[0];
    int from = out.coloring[v];
    int to = 1 - from;
    const std::size_t before = bad;
    for (std::size_t f : inc[v]) {
      bool was = mono(f);
      if (to == 1) {
        ++ones[f];
      } else {
        --ones[f];
      }
      bool now = mono(f);
      if (was && !now) --bad;
      if (!was && now) ++bad;
    }
    out.coloring.set(v, to);
    out.trace.steps.push_back({v, from, to, before, bad, 1});
    if (bad >= before) {
      throw ConditionViolated("flipping vertex " + h.name(v) + " did not reduce the count");
    }
    cursor = 0;
  }
  return out;
}

Coloring color_linear(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<std::size_t>> inc(n);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e).vertices()) {
      inc[v].push_back(e);
      ++degree[v];
    }
  }
  std::vector<char> edge_live(h.num_edges(), 1);
  std::vector<char> vertex_live(n, 1);
  std::vector<std::pair<VertexId, std::size_t>> peeled;
  std::size_t remaining = n;

  while (remaining > 0) {
    for (VertexId v = 0; v < n; ++v) {
      if (vertex_live[v] && degree[v] == 0) {
        vertex_live[v] = 0;
        --remaining;
      }
    }
    if (remaining == 0) break;
    VertexId v = 0;
    while (v < n && !(vertex_live[v] && degree[v] == 1)) ++v;
    if (v == n) {
      throw StructureViolated("degree-one-vertex",
                              std::to_string(remaining) + " vertices left, none of degree <= 1");
    }
    std::size_t e = *std::find_if(inc[v].begin(), inc[v].end(),
                                  [&](std::size_t f) { return edge_live[f] != 0; });
    edge_live[e] = 0;
    for (VertexId u : h.edge(e).vertices()) --degree[u];
    vertex_live[v] = 0;
    --remaining;
    peeled.emplace_back(v, e);
  }

  Coloring col(n, 2, 0);
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto [v, e] = *it;
    auto vs = h.edge(e).vertices();
    auto other = std::find_if(vs.begin(), vs.end(), [&](VertexId u) { return u != v; });
    if (other == vs.end()) {
      throw StructureViolated("degree-one-vertex", "peeled hyperedge has no other vertex");
    }
    col.set(v, 1 - col[*other]);
  }
  return col;
}

}  // namespace dirhyp
