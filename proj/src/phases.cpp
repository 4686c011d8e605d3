#include "dirhyp/phases.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "dirhyp/errors.hpp"

namespace dirhyp {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

class PhaseRunner {
 public:
  PhaseRunner(const LabeledGraph& g, const SimpleGraph& gp, std::span<const OverloadedPair> pairs,
              const Decomposition& dec)
      : g_(g),
        gp_(gp.graph),
        pairs_(pairs),
        dec_(dec),
        n_(g.num_vertices()),
        color_(n_, -1),
        dcolor_(n_, -1),
        pair_of_(n_, -1),
        minion_of_(n_) {
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      pair_of_[pairs_[p].x] = static_cast<int>(p);
      pair_of_[pairs_[p].y] = static_cast<int>(p);
    }
  }

  PhaseResult run() {
    color_k_cycles();
    color_r_cycles();
    color_r_trees();
    color_k_trees();
    Coloring col(n_, 2, kRed);
    for (VertexId v = 0; v < n_; ++v) {
      if (color_[v] < 0) throw StructureViolated("phase-coverage", "vertex " + vname(v) + " uncolored");
      col.set(v, color_[v]);
    }
    return {std::move(col), std::move(rebels_), stats_};
  }

 private:
  bool on_overloaded_pair(VertexId u, VertexId v) const {
    return pair_of_[u] >= 0 && pair_of_[u] == pair_of_[v];
  }

  const OverloadedPair* strong_pair_of(VertexId v) const {
    if (pair_of_[v] < 0) return nullptr;
    const auto& p = pairs_[pair_of_[v]];
    return p.kind == OverloadedPair::Kind::Strong ? &p : nullptr;
  }

  const RComponent& r_component(VertexId v) const {
    return dec_.r_components.at(dec_.r_component_of.at(v));
  }

  // Colors core node k(q), and every uncolored node on its way to an already
  // colored node or the R sink, alternating along D edges.
  void resolve_core(VertexId q) {
    std::vector<VertexId> path;
    VertexId cur = q;
    while (dcolor_[cur] < 0) {
      if (!dec_.d_next_is_core(cur)) {
        if (color_[cur] < 0) {
          throw StructureViolated("phase-order", "root " + vname(cur) + " uncolored in phase 4");
        }
        dcolor_[cur] = 1 - color_[cur];
        break;
      }
      path.push_back(cur);
      if (path.size() > n_) throw StructureViolated("d-component-shape", "uncolored D cycle");
      cur = dec_.d_next(cur);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (dcolor_[*it] < 0) dcolor_[*it] = 1 - dcolor_[dec_.d_next(*it)];
    }
  }

  void inherit(const DComponent& comp) {
    for (VertexId q : comp.cores) {
      resolve_core(q);
      for (VertexId v : dec_.members[q]) color_[v] = dcolor_[q];
    }
  }

  // Phase 1: components of D that carry a cycle.
  void color_k_cycles() {
    for (const auto& comp : dec_.d_components) {
      if (comp.kind != DComponent::Kind::Unicyclic) continue;
      const auto& cyc = comp.cycle;
      if (cyc.size() % 2 == 0) {
        ++stats_.even_d_cycles;
        for (std::size_t i = 0; i < cyc.size(); ++i) dcolor_[cyc[i]] = i % 2 ? kBlue : kRed;
        inherit(comp);
        continue;
      }
      // Drop the cycle edge k(q) -> k(r) leaving the smallest label; the rest
      // is a tree with sink k(q), colored so that k(q) and k(r) are both red.
      ++stats_.odd_d_cycles;
      const VertexId q = cyc[0];
      const VertexId r = cyc[1];
      dcolor_[q] = kRed;
      inherit(comp);
      if (dcolor_[r] != kRed || dec_.core_of[q] != r) {
        throw StructureViolated("odd-d-cycle", "k(" + vname(q) + ") and k(" + vname(r) +
                                                   ") are not both red");
      }
      color_[q] = kBlue;
      RebelRecord rec{q, r, {}};
      for (std::size_t e : gp_.incident(q)) {
        const auto& ed = gp_.edge(e);
        VertexId x = ed.other(q);
        if (ed.label == r && dec_.in_r(x)) rec.minions.push_back(x);
      }
      std::sort(rec.minions.begin(), rec.minions.end());
      for (VertexId x : rec.minions) check_minion(x, q, r);
      for (VertexId x : rec.minions) minion_of_[x] = q;
      rebels_.push_back(std::move(rec));
    }
  }

  // A minion's R component is a path ending in it, or a single bidirected
  // central edge whose other end is a minion of the same rebel; a minion on a
  // strong pair is alone in its component and so is its partner.
  void check_minion(VertexId x, VertexId q, VertexId r) const {
    const auto& comp = r_component(x);
    auto fail = [&](const std::string& why) {
      throw StructureViolated("minion-component", "minion " + vname(x) + " of rebel " + vname(q) +
                                                      ": " + why);
    };
    if (comp.kind != RComponent::Kind::Tree) fail("lies on an R cycle");
    std::size_t deg = 0;
    for (std::size_t e : comp.edges) deg += gp_.edge(e).touches(x);
    bool path_end = comp.central.size() == 1 && comp.central[0] == x && deg <= 1;
    bool pair_edge = false;
    if (comp.vertices.size() == 2 && comp.central_edge) {
      const auto& e = gp_.edge(*comp.central_edge);
      VertexId y = e.other(x);
      auto qy = gp_.edge_between(q, y);
      pair_edge = e.label == q && e.orientation == Orientation::Both && qy &&
                  gp_.edge(*qy).label == r;
    }
    if (!path_end && !pair_edge) fail("component is neither a path into it nor a minion edge");
    if (const auto* p = strong_pair_of(x)) {
      if (!r_component(p->x).is_single_vertex() || !r_component(p->y).is_single_vertex()) {
        fail("strong pair endpoints are not isolated in G'[R]");
      }
    }
  }

  // Phase 2: alternate around every R cycle; an odd cycle gets one
  // monochromatic edge, never one on an overloaded pair.
  void color_r_cycles() {
    for (const auto& comp : dec_.r_components) {
      if (comp.kind != RComponent::Kind::Cycle) continue;
      const auto& cv = comp.vertices;
      const std::size_t k = cv.size();
      for (VertexId v : cv) {
        if (minion_of_[v]) throw StructureViolated("minion-component", "minion on an R cycle");
      }
      std::size_t start = 0;
      if (k % 2 == 1) {
        ++stats_.odd_r_cycles;
        std::optional<std::size_t> mono;
        for (std::size_t i = 0; i < k; ++i) {
          if (on_overloaded_pair(cv[i], cv[(i + 1) % k])) continue;
          if (!mono || comp.edges[i] < comp.edges[*mono]) mono = i;
        }
        if (!mono) {
          throw StructureViolated("r-cycle-mono-edge", "odd R cycle through " + vname(cv[0]) +
                                                           " has only overloaded edges");
        }
        start = (*mono + 1) % k;
      }
      for (std::size_t t = 0; t < k; ++t) color_[cv[(start + t) % k]] = t % 2 ? kBlue : kRed;
    }
  }

  // Phase 3: R trees. Minion central vertices are red; everything else
  // alternates outward from the central vertices. Lone endpoints of strong
  // pairs wait until their partner is colored.
  void color_r_trees() {
    std::vector<char> deferred(n_, 0);
    for (const auto& comp : dec_.r_components) {
      if (comp.kind != RComponent::Kind::Tree) continue;
      if (comp.is_single_vertex()) {
        VertexId v = comp.vertices[0];
        if (strong_pair_of(v) && !minion_of_[v]) {
          deferred[v] = 1;
          continue;
        }
      }
      for (VertexId v : comp.vertices) {
        bool central = std::find(comp.central.begin(), comp.central.end(), v) != comp.central.end();
        if (minion_of_[v] && !central) {
          throw StructureViolated("minion-component", "minion " + vname(v) + " is not central");
        }
      }
      std::vector<VertexId> seeds;
      std::size_t minion_centrals = 0;
      for (VertexId c : comp.central) minion_centrals += minion_of_[c].has_value();
      if (minion_centrals == 2) {
        ++stats_.minion_central_edges;
        seeds = comp.central;
      } else if (minion_centrals == 1) {
        if (comp.central.size() == 2) {
          throw StructureViolated("minion-component", "central edge with a single minion");
        }
        seeds = comp.central;
      } else {
        seeds = {comp.central[0]};
      }
      for (VertexId s : seeds) color_[s] = kRed;
      std::vector<VertexId> frontier = seeds;
      while (!frontier.empty()) {
        VertexId v = frontier.back();
        frontier.pop_back();
        for (std::size_t e : comp.edges) {
          const auto& ed = gp_.edge(e);
          if (!ed.touches(v)) continue;
          VertexId w = ed.other(v);
          if (color_[w] >= 0) continue;
          color_[w] = 1 - color_[v];
          frontier.push_back(w);
        }
      }
    }

    for (const auto& p : pairs_) {
      if (p.kind != OverloadedPair::Kind::Strong) continue;
      for (VertexId v : {p.x, p.y}) {
        if (!dec_.in_r(v) || r_component(v).kind != RComponent::Kind::Tree) {
          throw StructureViolated("strong-pair-in-rt", "strong pair vertex " + vname(v) +
                                                           " is not in an R tree");
        }
      }
      const bool lone_x = r_component(p.x).is_single_vertex();
      const bool lone_y = r_component(p.y).is_single_vertex();
      if (lone_x && lone_y) {
        ++stats_.strong_both_single;
      } else if (lone_x || lone_y) {
        ++stats_.strong_single_side;
      }
      if (deferred[p.x] && deferred[p.y]) {
        color_[p.x] = kRed;
        color_[p.y] = kBlue;
      } else if (deferred[p.x]) {
        color_[p.x] = 1 - color_[p.y];
      } else if (deferred[p.y]) {
        color_[p.y] = 1 - color_[p.x];
      } else if (lone_x && lone_y) {
        throw StructureViolated("strong-pair-minions", "both ends of a strong pair are minions");
      }
    }
  }

  // Phase 4: D trees hanging off an R vertex alternate from that root.
  void color_k_trees() {
    for (const auto& comp : dec_.d_components) {
      if (comp.kind == DComponent::Kind::TreeRootedInR) inherit(comp);
    }
  }

  const LabeledGraph& g_;
  const LabeledGraph& gp_;
  std::span<const OverloadedPair> pairs_;
  const Decomposition& dec_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> dcolor_;
  std::vector<int> pair_of_;
  std::vector<std::optional<VertexId>> minion_of_;
  std::vector<RebelRecord> rebels_;
  PhaseStats stats_;
};

}  // namespace

PhaseResult run_phases(const LabeledGraph& g, const SimpleGraph& gp,
                       std::span<const OverloadedPair> pairs, const Decomposition& dec) {
  return PhaseRunner(g, gp, pairs, dec).run();
}

}  // namespace dirhyp
