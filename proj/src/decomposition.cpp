#include "dirhyp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dirhyp/errors.hpp"

namespace dirhyp {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

struct LabelCount {
  VertexId label;
  std::size_t count;
  std::size_t first_edge;
};

void check_vertex_labels(const LabeledGraph& gp, VertexId x, const std::vector<LabelCount>& ls) {
  auto fail = [&](const char* check, const std::string& why) {
    throw StructureViolated(check, "vertex " + vname(x) + ": " + why);
  };
  auto deg = gp.incident(x).size();
  if (ls.size() == 3) {
    if (deg != 3) fail("three-label-vertex", "three labels on " + std::to_string(deg) + " edges");
    // The labels must be exactly the neighbours, each edge xa labeled by
    // another neighbour.
    std::vector<VertexId> nbrs, labels;
    for (std::size_t e : gp.incident(x)) {
      nbrs.push_back(gp.edge(e).other(x));
      labels.push_back(gp.edge(e).label);
    }
    std::sort(nbrs.begin(), nbrs.end());
    std::sort(labels.begin(), labels.end());
    if (nbrs != labels) fail("three-label-vertex", "labels are not the cyclic neighbour pattern");
  } else if (ls.size() == 2) {
    auto lone_edge_hits = [&](const LabelCount& lone, const LabelCount& other) {
      return lone.count == 1 && gp.edge(lone.first_edge).other(x) == other.label;
    };
    if (!lone_edge_hits(ls[0], ls[1]) && !lone_edge_hits(ls[1], ls[0])) {
      fail("two-label-vertex", "no single-use label whose edge ends at the other label");
    }
  }
}

}  // namespace

Decomposition compute_cores(const LabeledGraph& gp) {
  const std::size_t n = gp.num_vertices();
  Decomposition dec;
  dec.core_of.assign(n, std::nullopt);
  dec.members.assign(n, {});
  dec.r_component_of.assign(n, -1);
  dec.d_component_of.assign(n, -1);

  std::vector<LabelCount> ls;
  for (VertexId x = 0; x < n; ++x) {
    ls.clear();
    for (std::size_t e : gp.incident(x)) {
      VertexId lab = gp.edge(e).label;
      auto it = std::find_if(ls.begin(), ls.end(), [&](const LabelCount& l) { return l.label == lab; });
      if (it != ls.end()) {
        ++it->count;
        continue;
      }
      if (ls.size() == 3) {
        throw StructureViolated("label-count", "vertex " + vname(x) + " sees four labels");
      }
      ls.push_back({lab, 1, e});
    }
    check_vertex_labels(gp, x, ls);
    for (const auto& l : ls) {
      if (l.count < 2) continue;
      if (dec.core_of[x]) {
        throw StructureViolated("cores-disjoint", "vertex " + vname(x) + " lies in two cores");
      }
      dec.core_of[x] = l.label;
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (dec.core_of[x]) dec.members[*dec.core_of[x]].push_back(x);
  }
  for (VertexId q = 0; q < n; ++q) {
    if (!dec.members[q].empty()) dec.core_labels.push_back(q);
  }
  for (const auto& e : gp.edges()) {
    if (dec.core_of[e.a] && dec.core_of[e.a] == dec.core_of[e.b] && e.label != *dec.core_of[e.a]) {
      throw StructureViolated("core-edge-label", "edge {" + vname(e.a) + "," + vname(e.b) +
                                                     "} inside a core has a foreign label");
    }
  }
  return dec;
}

Decomposition decompose_r(const LabeledGraph& gp, Decomposition dec) {
  const std::size_t n = gp.num_vertices();
  auto in_r_edge = [&](const LabeledEdge& e) { return dec.in_r(e.a) && dec.in_r(e.b); };

  std::vector<std::vector<std::size_t>> r_inc(n);
  for (std::size_t i = 0; i < gp.num_edges(); ++i) {
    const auto& e = gp.edge(i);
    if (!in_r_edge(e)) continue;
    r_inc[e.a].push_back(i);
    r_inc[e.b].push_back(i);
  }

  for (VertexId x = 0; x < n; ++x) {
    if (!dec.in_r(x)) continue;
    std::size_t away = 0;
    for (std::size_t e : gp.incident(x)) {
      if (!gp.edge(e).toward(x)) ++away;
    }
    if (away > 1) {
      throw StructureViolated("r-vertex-inward",
                              "vertex " + vname(x) + " has " + std::to_string(away) +
                                  " incident edges not directed towards it");
    }
    for (std::size_t e : r_inc[x]) {
      const auto& xb = gp.edge(e);
      if (xb.only_toward(x)) continue;
      const VertexId b = xb.other(x);
      if (r_inc[x].size() > 2) {
        throw StructureViolated("r-outward-edge", "vertex " + vname(x) +
                                                      " has an outward edge and degree " +
                                                      std::to_string(r_inc[x].size()));
      }
      for (std::size_t f : r_inc[x]) {
        if (f == e) continue;
        if (gp.edge(f).label != b || !gp.edge(f).only_toward(x)) {
          throw StructureViolated("r-outward-edge",
                                  "second edge at " + vname(x) + " is not labeled " + vname(b) +
                                      " and directed only inward");
        }
      }
    }
  }
  for (std::size_t i = 0; i < gp.num_edges(); ++i) {
    const auto& e = gp.edge(i);
    if (!in_r_edge(e) || e.orientation != Orientation::Both) continue;
    const VertexId c = e.label;
    auto ac = gp.edge_between(e.a, c);
    auto bc = gp.edge_between(e.b, c);
    if (dec.in_r(c) || !ac || !bc || gp.edge(*ac).label != gp.edge(*bc).label ||
        e.touches(gp.edge(*ac).label)) {
      throw StructureViolated("r-bidirected-edge", "edge {" + vname(e.a) + "," + vname(e.b) +
                                                       "} directed both ways breaks the apex rule");
    }
  }

  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (!dec.in_r(start) || seen[start]) continue;
    RComponent comp{RComponent::Kind::Tree, {}, {}, {}, std::nullopt};
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (std::size_t e : r_inc[v]) {
        VertexId w = gp.edge(e).other(v);
        if (v < w) comp.edges.push_back(e);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    const std::size_t nv = comp.vertices.size();
    const std::size_t ne = comp.edges.size();
    const std::string where = "component of " + vname(start);

    if (ne == nv) {
      for (VertexId v : comp.vertices) {
        if (r_inc[v].size() != 2) {
          throw StructureViolated("r-component-shape", where + " is neither a cycle nor a tree");
        }
      }
      if (nv < 4) throw StructureViolated("r-cycle", where + " is a triangle");
      comp.kind = RComponent::Kind::Cycle;
      // Walk from the smallest vertex along the edge that points back at it.
      std::vector<VertexId> order{comp.vertices.front()};
      std::vector<std::size_t> ring;
      const auto& starts = r_inc[order[0]];
      std::size_t cur = gp.edge(starts[0]).only_toward(order[0]) ? starts[0] : starts[1];
      for (std::size_t step = 0; step < nv; ++step) {
        ring.push_back(cur);
        VertexId next = gp.edge(cur).other(order.back());
        if (step + 1 < nv) {
          order.push_back(next);
          const auto& two = r_inc[next];
          cur = two[0] == cur ? two[1] : two[0];
        }
      }
      for (std::size_t i = 0; i < nv; ++i) {
        const auto& e = gp.edge(ring[i]);
        VertexId ci = order[i];
        VertexId prev = order[(i + nv - 1) % nv];
        VertexId nxt = order[(i + 1) % nv];
        if (!e.touches(nxt) || !e.only_toward(ci) || e.label != prev) {
          throw StructureViolated("r-cycle", where + " is not cyclically directed and labeled");
        }
      }
      comp.vertices = std::move(order);
      comp.edges = std::move(ring);
    } else if (ne + 1 == nv) {
      std::vector<std::size_t> free_edges;
      for (std::size_t e : comp.edges) {
        const auto& ed = gp.edge(e);
        if (ed.orientation == Orientation::Undirected || ed.orientation == Orientation::Both) {
          free_edges.push_back(e);
        }
      }
      if (free_edges.size() > 1) {
        throw StructureViolated("r-tree-center", where + " has two undirected or bidirected edges");
      }
      if (free_edges.size() == 1) {
        comp.central_edge = free_edges[0];
        comp.central = {gp.edge(free_edges[0]).a, gp.edge(free_edges[0]).b};
      } else {
        for (VertexId v : comp.vertices) {
          bool sink = std::all_of(r_inc[v].begin(), r_inc[v].end(),
                                  [&](std::size_t e) { return gp.edge(e).only_toward(v); });
          if (sink) comp.central.push_back(v);
        }
        if (comp.central.size() != 1) {
          throw StructureViolated("r-tree-center",
                                  where + " has " + std::to_string(comp.central.size()) + " sinks");
        }
        if (r_inc[comp.central[0]].size() > 3) {
          throw StructureViolated("r-tree-center", where + " has a central vertex of degree > 3");
        }
      }
      for (VertexId v : comp.vertices) {
        bool central = std::find(comp.central.begin(), comp.central.end(), v) != comp.central.end();
        std::size_t out = 0, in = 0;
        for (std::size_t e : r_inc[v]) {
          const auto& ed = gp.edge(e);
          if (comp.central_edge && e == *comp.central_edge) continue;
          if (ed.only_toward(v)) {
            ++in;
          } else if (ed.only_toward(ed.other(v))) {
            ++out;
          } else {
            throw StructureViolated("r-tree-center", where + " has a second free edge");
          }
        }
        bool ok = central ? out == 0 : (out == 1 && in <= 1);
        if (!ok) {
          throw StructureViolated("r-tree-shape",
                                  where + ": vertex " + vname(v) + " has " + std::to_string(in) +
                                      " in and " + std::to_string(out) + " out edges");
        }
      }
    } else {
      throw StructureViolated("r-component-shape", where + " is neither a cycle nor a tree");
    }
    int idx = static_cast<int>(dec.r_components.size());
    for (VertexId v : comp.vertices) dec.r_component_of[v] = idx;
    dec.r_components.push_back(std::move(comp));
  }
  return dec;
}

Decomposition build_contraction_digraph(const LabeledGraph& gp, Decomposition dec) {
  const std::size_t n = gp.num_vertices();
  // Union-find over D nodes: R vertex v is node v, core node k(q) is n + q.
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto node_of_next = [&](VertexId q) {
    return dec.d_next_is_core(q) ? n + dec.d_next(q) : static_cast<std::size_t>(q);
  };
  for (VertexId q : dec.core_labels) {
    if (dec.in_k(q) && *dec.core_of[q] == q) {
      throw StructureViolated("d-out-degree", "core of " + vname(q) + " contains " + vname(q));
    }
    parent[find(n + q)] = find(node_of_next(q));
  }

  std::map<std::size_t, std::size_t> group_index;
  for (VertexId q : dec.core_labels) {
    auto [it, inserted] = group_index.try_emplace(find(n + q), dec.d_components.size());
    if (inserted) dec.d_components.push_back({DComponent::Kind::Unicyclic, {}, std::nullopt, {}});
    dec.d_components[it->second].cores.push_back(q);
    dec.d_component_of[q] = static_cast<int>(it->second);
  }

  for (auto& comp : dec.d_components) {
    std::vector<VertexId> roots;
    for (VertexId q : comp.cores) {
      if (!dec.d_next_is_core(q)) roots.push_back(q);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const std::string where = "D component of k(" + vname(comp.cores.front()) + ")";
    if (roots.size() > 1) {
      throw StructureViolated("d-component-shape", where + " reaches two vertices of R");
    }
    if (roots.size() == 1) {
      comp.kind = DComponent::Kind::TreeRootedInR;
      comp.root = roots[0];
      continue;
    }
    // No sink: every node has out-degree one, so following successors from
    // any node ends on the unique cycle.
    std::set<VertexId> visited;
    VertexId cur = comp.cores.front();
    while (visited.insert(cur).second) cur = dec.d_next(cur);
    std::vector<VertexId> cycle{cur};
    for (VertexId v = dec.d_next(cur); v != cur; v = dec.d_next(v)) cycle.push_back(v);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    comp.cycle = std::move(cycle);
  }
  return dec;
}

}  // namespace dirhyp
