#include "dirhyp/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "dirhyp/errors.hpp"

namespace dirhyp {

bool LabeledEdge::toward(VertexId x) const {
  switch (orientation) {
    case Orientation::Undirected: return false;
    case Orientation::TowardA: return x == a;
    case Orientation::TowardB: return x == b;
    case Orientation::Both: return x == a || x == b;
  }
  return false;
}

std::uint64_t LabeledGraph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::size_t LabeledGraph::add_edge(VertexId u, VertexId v, VertexId label,
                                   std::size_t hyperedge) {
  if (u == v) throw std::invalid_argument("labeled edge is a loop");
  if (label == u || label == v) throw std::invalid_argument("edge label is one of its endpoints");
  if (u >= inc_.size() || v >= inc_.size() || label >= inc_.size()) {
    throw std::invalid_argument("labeled edge references unknown vertex");
  }
  if (u > v) std::swap(u, v);
  std::size_t id = edges_.size();
  edges_.push_back({u, v, label, Orientation::Undirected, hyperedge});
  inc_[u].push_back(id);
  inc_[v].push_back(id);
  first_on_pair_.try_emplace(key(u, v), id);
  return id;
}

std::optional<std::size_t> LabeledGraph::edge_between(VertexId u, VertexId v) const {
  auto it = first_on_pair_.find(key(u, v));
  if (it == first_on_pair_.end()) return std::nullopt;
  return it->second;
}

LabeledGraph build_labeled_graph(const Hypergraph& h) {
  LabeledGraph g(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = as_two_one(h.edge(i));
    if (!e) throw std::invalid_argument("labeled graph needs a 2->1 hypergraph");
    g.add_edge(e->tail_a, e->tail_b, e->head, i);
  }
  return g;
}

namespace {

// Strong pair shape check; fills r, q and the companions on success.
void classify_strong(const LabeledGraph& g, OverloadedPair& p) {
  auto fail = [&](const std::string& why) {
    throw StructureViolated("strong-overloaded-pair",
                            "pair {" + std::to_string(p.x) + "," + std::to_string(p.y) + "}: " +
                                why);
  };
  if (p.edges.size() != 2) fail("not weak but has " + std::to_string(p.edges.size()) + " edges");
  std::vector<std::size_t> extra;
  for (VertexId end : {p.x, p.y}) {
    for (std::size_t f : g.incident(end)) {
      if (std::find(p.edges.begin(), p.edges.end(), f) == p.edges.end()) extra.push_back(f);
    }
  }
  if (extra.size() != 2) fail(std::to_string(extra.size()) + " further incident edges, expected 2");
  const VertexId l0 = g.edge(p.edges[0]).label;
  const VertexId l1 = g.edge(p.edges[1]).label;
  const auto& f0 = g.edge(extra[0]);
  const auto& f1 = g.edge(extra[1]);
  // Match each extra edge to the parallel label it repeats.
  const LabeledEdge* with_l0 = f0.label == l0 ? &f0 : (f1.label == l0 ? &f1 : nullptr);
  const LabeledEdge* with_l1 = f0.label == l1 ? &f0 : (f1.label == l1 ? &f1 : nullptr);
  if (!with_l0 || !with_l1 || with_l0 == with_l1) fail("extra edges do not repeat both labels");
  VertexId at0 = with_l0->touches(p.x) ? p.x : p.y;
  VertexId at1 = with_l1->touches(p.x) ? p.x : p.y;
  if (at0 == at1) fail("both repeated labels sit at one endpoint");
  // x is the endpoint whose extra edge repeats r; that edge must end in q.
  p.x = at0;
  p.y = at1;
  p.r = l0;
  p.q = l1;
  p.companion_x = with_l0 == &f0 ? extra[0] : extra[1];
  p.companion_y = with_l1 == &f0 ? extra[0] : extra[1];
  if (g.edge(p.companion_x).other(p.x) != p.q) fail("companion of x does not end at q");
  if (g.edge(p.companion_y).other(p.y) != p.r) fail("companion of y does not end at r");
}

}  // namespace

std::vector<OverloadedPair> classify_overloaded_pairs(const LabeledGraph& g) {
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    by_pair[{e.a, e.b}].push_back(i);
  }
  std::vector<OverloadedPair> out;
  std::vector<char> used(g.num_vertices(), 0);
  for (auto& [ends, ids] : by_pair) {
    if (ids.size() < 2) continue;
    auto [x, y] = ends;
    if (used[x] || used[y]) {
      throw StructureViolated("overloaded-pairs-disjoint",
                              "vertex shared by two overloaded pairs at {" + std::to_string(x) +
                                  "," + std::to_string(y) + "}");
    }
    used[x] = used[y] = 1;
    std::vector<VertexId> labels;
    for (std::size_t i : ids) labels.push_back(g.edge(i).label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw StructureViolated("parallel-labels-distinct", "two parallel edges share a label");
    }

    OverloadedPair p{OverloadedPair::Kind::Weak, x, y, ids};
    std::optional<std::size_t> rep;
    for (std::size_t e : ids) {
      VertexId lab = g.edge(e).label;
      bool unique = true;
      for (VertexId end : {x, y}) {
        for (std::size_t f : g.incident(end)) {
          if (f != e && g.edge(f).label == lab) unique = false;
        }
      }
      if (unique && (!rep || lab < g.edge(*rep).label)) rep = e;
    }
    if (rep) {
      p.representative = *rep;
    } else {
      p.kind = OverloadedPair::Kind::Strong;
      classify_strong(g, p);
    }
    out.push_back(std::move(p));
  }
  return out;
}

SimpleGraph reduce_to_simple(const LabeledGraph& g, std::span<const OverloadedPair> pairs) {
  SimpleGraph out{LabeledGraph(g.num_vertices()), {}, std::vector<std::optional<std::size_t>>(
                                                          g.num_edges())};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t e : pairs[p].edges) {
      if (pairs[p].kind == OverloadedPair::Kind::Weak && e == pairs[p].representative) continue;
      out.deleted_by[e] = p;
    }
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (out.deleted_by[i]) continue;
    const auto& e = g.edge(i);
    out.graph.add_edge(e.a, e.b, e.label, e.hyperedge);
    out.origin.push_back(i);
  }
  return out;
}

void orient_edges(LabeledGraph& g) {
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    bool to_a = g.adjacent(e.a, e.label);
    bool to_b = g.adjacent(e.b, e.label);
    Orientation o = to_a && to_b ? Orientation::Both
                    : to_a       ? Orientation::TowardA
                    : to_b       ? Orientation::TowardB
                                 : Orientation::Undirected;
    g.set_orientation(i, o);
  }
}

}  // namespace dirhyp
