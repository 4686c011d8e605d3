#include "dirhyp/properties.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dirhyp {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<std::vector<std::size_t>> tail_incidence(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (VertexId v : h.edge(i).tail()) inc[v].push_back(i);
  }
  return inc;
}

std::vector<std::vector<std::size_t>> incidence(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (VertexId v : h.edge(i).vertices()) inc[v].push_back(i);
  }
  return inc;
}

struct PairHit {
  Pair pair;
  VertexId vertex;
};

// Smallest pair (i < j), over every per-vertex list, for which pred(i, j, v)
// holds. Lists are sorted, so the first hit in a list is that list's minimum.
template <typename Pred>
std::optional<PairHit> first_pair(const std::vector<std::vector<std::size_t>>& lists, Pred pred) {
  std::optional<PairHit> best;
  for (VertexId v = 0; v < lists.size(); ++v) {
    const auto& l = lists[v];
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (best && l[a] > best->pair.first) break;
      bool found = false;
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        Pair p{l[a], l[b]};
        if (best && p >= best->pair) break;
        if (pred(l[a], l[b], v)) {
          best = PairHit{p, v};
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return best;
}

bool single_tail_vertex(const Hyperedge& e) { return e.size() == 1 && e.tail().size() == 1; }

bool head_rule_fails(const Hyperedge& e, HeadRule rule) {
  return rule == HeadRule::FewerThanTail ? e.head().size() >= e.tail().size()
                                         : e.head().size() > e.tail().size();
}

bool property_s_pair_fails(const Hyperedge& a, const Hyperedge& b, VertexId v) {
  return intersection_size(a, b) == 1 && a.is_tail(v) && b.is_tail(v);
}

bool specboth_pair_fails(const Hyperedge& a, const Hyperedge& b, VertexId v) {
  return intersection_size(a, b) == 1 && !(a.is_head(v) && b.is_head(v));
}

}  // namespace

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::PropertyS: return "property-s";
    case ViolationKind::SpecBoth: return "specboth";
    case ViolationKind::Linearity: return "linearity";
    case ViolationKind::PolyCondition: return "poly-condition";
    case ViolationKind::HeadCount: return "head-count";
  }
  return "unknown";
}

std::string ViolationWitness::describe(const Hypergraph& h) const {
  std::ostringstream os;
  os << to_string(kind) << " violated by edge";
  if (edges.size() > 1) os << 's';
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << ' ' << edges[k];
    if (!sources.empty()) os << " (family " << sources[k] << ')';
    if (edges[k] < h.num_edges()) {
      os << " [";
      const auto& e = h.edge(edges[k]);
      for (VertexId t : e.tail()) os << h.name(t) << ' ';
      os << "->";
      for (VertexId t : e.head()) os << ' ' << h.name(t);
      os << ']';
    }
  }
  if (vertex) os << " at vertex " << h.name(*vertex);
  return os.str();
}

CheckResult check_property_s(const Hypergraph& h, HeadRule rule) {
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (head_rule_fails(e, rule)) return ViolationWitness{ViolationKind::HeadCount, {i}, {}, {}};
    if (single_tail_vertex(e)) {
      return ViolationWitness{ViolationKind::PropertyS, {i, i}, e.tail()[0], {}};
    }
  }
  // Both edges of a tail-incidence list hold v as a tail, so a one-vertex
  // intersection is exactly {v}.
  auto hit = first_pair(tail_incidence(h), [&](std::size_t i, std::size_t j, VertexId) {
    return intersection_size(h.edge(i), h.edge(j)) == 1;
  });
  if (!hit) return std::nullopt;
  return ViolationWitness{ViolationKind::PropertyS, {hit->pair.first, hit->pair.second},
                          hit->vertex, {}};
}

CheckResult check_specboth(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (e.tail().empty()) return ViolationWitness{ViolationKind::SpecBoth, {i}, {}, {}};
    if (single_tail_vertex(e)) {
      return ViolationWitness{ViolationKind::SpecBoth, {i, i}, e.tail()[0], {}};
    }
  }
  auto hit = first_pair(incidence(h), [&](std::size_t i, std::size_t j, VertexId v) {
    return specboth_pair_fails(h.edge(i), h.edge(j), v);
  });
  if (!hit) return std::nullopt;
  return ViolationWitness{ViolationKind::SpecBoth, {hit->pair.first, hit->pair.second},
                          hit->vertex, {}};
}

CheckResult check_linear(const Hypergraph& h) {
  auto hit = first_pair(incidence(h), [&](std::size_t i, std::size_t j, VertexId) {
    return intersection_size(h.edge(i), h.edge(j)) >= 2;
  });
  if (!hit) return std::nullopt;
  return ViolationWitness{ViolationKind::Linearity, {hit->pair.first, hit->pair.second}, {}, {}};
}

CheckResult check_poly_condition(std::span<const Hypergraph> hs, std::size_t c,
                                 std::uint64_t cap) {
  if (hs.size() != c) throw std::invalid_argument("check_poly_condition needs exactly c families");
  for (const auto& h : hs) {
    if (h.num_vertices() != hs.front().num_vertices()) {
      throw std::invalid_argument("families must share one vertex set");
    }
  }
  std::uint64_t visited = 0;
  std::vector<std::size_t> edges, sources;
  CheckResult found;

  // Depth-first over selections with strictly increasing family index.
  // `common` is the running intersection; an empty one ends the branch since
  // every extension is empty too.
  auto recurse = [&](auto&& self, std::size_t next_family,
                     const std::vector<VertexId>& common) -> bool {
    for (std::size_t f = next_family; f < c; ++f) {
      for (std::size_t i = 0; i < hs[f].num_edges(); ++i) {
        if (++visited > cap) throw CapExceeded("poly-condition enumeration exceeded cap");
        const auto& e = hs[f].edge(i);
        std::vector<VertexId> next;
        if (edges.empty()) {
          next.assign(e.vertices().begin(), e.vertices().end());
        } else {
          std::set_intersection(common.begin(), common.end(), e.vertices().begin(),
                                e.vertices().end(), std::back_inserter(next));
        }
        edges.push_back(i);
        sources.push_back(f);
        if (!next.empty()) {
          if (next.size() < edges.size()) {
            found = ViolationWitness{ViolationKind::PolyCondition, edges, {}, sources};
            return true;
          }
          if (self(self, f + 1, next)) return true;
        }
        edges.pop_back();
        sources.pop_back();
      }
    }
    return false;
  };
  recurse(recurse, 0, {});
  return found;
}

bool witness_reproduces(const Hypergraph& h, const ViolationWitness& w) {
  for (std::size_t i : w.edges) {
    if (i >= h.num_edges()) return false;
  }
  auto pair_ok = [&] { return w.edges.size() == 2 && w.vertex.has_value(); };
  switch (w.kind) {
    case ViolationKind::HeadCount:
      return w.edges.size() == 1 && head_rule_fails(h.edge(w.edges[0]), HeadRule::FewerThanTail);
    case ViolationKind::PropertyS:
      return pair_ok() && property_s_pair_fails(h.edge(w.edges[0]), h.edge(w.edges[1]), *w.vertex);
    case ViolationKind::SpecBoth:
      if (w.edges.size() == 1) return h.edge(w.edges[0]).tail().empty();
      return pair_ok() && h.edge(w.edges[0]).contains(*w.vertex) &&
             specboth_pair_fails(h.edge(w.edges[0]), h.edge(w.edges[1]), *w.vertex);
    case ViolationKind::Linearity:
      return w.edges.size() == 2 && w.edges[0] != w.edges[1] &&
             intersection_size(h.edge(w.edges[0]), h.edge(w.edges[1])) >= 2;
    case ViolationKind::PolyCondition: {
      std::vector<Hypergraph> hs(w.sources.empty() ? 0 : *std::max_element(w.sources.begin(),
                                                                             w.sources.end()) + 1,
                                 h);
      return witness_reproduces(hs, w);
    }
  }
  return false;
}

bool witness_reproduces(std::span<const Hypergraph> hs, const ViolationWitness& w) {
  if (w.kind != ViolationKind::PolyCondition) {
    return hs.size() == 1 && witness_reproduces(hs[0], w);
  }
  if (w.edges.empty() || w.edges.size() != w.sources.size()) return false;
  std::vector<std::size_t> fams = w.sources;
  std::sort(fams.begin(), fams.end());
  if (std::adjacent_find(fams.begin(), fams.end()) != fams.end()) return false;
  std::vector<VertexId> common;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    if (w.sources[k] >= hs.size() || w.edges[k] >= hs[w.sources[k]].num_edges()) return false;
    auto vs = hs[w.sources[k]].edge(w.edges[k]).vertices();
    if (k == 0) {
      common.assign(vs.begin(), vs.end());
    } else {
      std::vector<VertexId> next;
      std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
  }
  return !common.empty() && common.size() < w.edges.size();
}

std::optional<std::size_t> find_monochromatic_edge(const Hypergraph& h, const Coloring& col) {
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto vs = h.edge(i).vertices();
    int first = col.at(vs[0]);
    if (std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return col.at(v) == first; })) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_non_polychromatic_edge(const Hypergraph& h, const Coloring& col,
                                                        int c) {
  std::vector<char> seen(static_cast<std::size_t>(std::max(c, col.colors())));
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (VertexId v : h.edge(i).vertices()) seen[col.at(v)] = 1;
    if (std::any_of(seen.begin(), seen.begin() + c, [](char s) { return !s; })) return i;
  }
  return std::nullopt;
}

std::optional<RainbowMiss> find_rainbow_miss(std::span<const Hypergraph> hs, const Coloring& col) {
  for (std::size_t j = 0; j < hs.size(); ++j) {
    for (std::size_t i = 0; i < hs[j].num_edges(); ++i) {
      auto vs = hs[j].edge(i).vertices();
      if (std::none_of(vs.begin(), vs.end(),
                       [&](VertexId v) { return col.at(v) == static_cast<int>(j); })) {
        return RainbowMiss{j, i};
      }
    }
  }
  return std::nullopt;
}

}  // namespace dirhyp
