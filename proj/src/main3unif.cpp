#include "dirhyp/main3unif.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dirhyp/errors.hpp"
#include "dirhyp/properties.hpp"

namespace dirhyp {

Main3Result color_2to1_property_s_detailed(const Hypergraph& h) {
  if (auto w = check_property_s(h)) throw PropertySViolation(std::move(*w));

  std::optional<Hypergraph> two_one;
  if (is_two_one(h)) {
    two_one = h;
  } else {
    two_one = normalize_three_uniform(h);
    if (!two_one) throw std::invalid_argument("input is neither 2->1 nor 3-uniform");
  }
  // Same vertex set throughout, so the coloring needs no lifting back.
  Hypergraph normalized = dedup_same_support(*two_one).reduced;

  LabeledGraph g = build_labeled_graph(normalized);
  auto pairs = classify_overloaded_pairs(g);
  SimpleGraph reduced = reduce_to_simple(g, pairs);
  orient_edges(reduced.graph);
  Decomposition dec = compute_cores(reduced.graph);
  dec = decompose_r(reduced.graph, std::move(dec));
  dec = build_contraction_digraph(reduced.graph, std::move(dec));
  PhaseResult phases = run_phases(g, reduced, pairs, dec);

  if (auto bad = find_monochromatic_edge(h, phases.coloring)) {
    throw StructureViolated("final-coloring",
                            "hyperedge " + std::to_string(*bad) + " is monochromatic");
  }
  return {std::move(phases.coloring), std::move(normalized), std::move(g),  std::move(pairs),
          std::move(reduced),         std::move(dec),        std::move(phases.rebels),
          phases.stats};
}

std::string structure_report(const Main3Result& r) {
  const auto& dec = r.dec;
  const auto& h = r.normalized;
  std::vector<char> rebel(h.num_vertices(), 0), minion(h.num_vertices(), 0);
  for (const auto& rec : r.rebels) {
    rebel[rec.rebel] = 1;
    for (VertexId m : rec.minions) minion[m] = 1;
  }
  std::ostringstream out;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    out << h.name(v) << ' ';
    if (dec.in_k(v)) {
      VertexId q = *dec.core_of[v];
      int d = dec.d_component_of[q];
      bool cyc = dec.d_components[d].kind == DComponent::Kind::Unicyclic;
      out << (cyc ? "K_c(" : "K_t(") << h.name(q) << ") d" << d;
    } else {
      int c = dec.r_component_of[v];
      const auto& comp = dec.r_components[c];
      out << (comp.kind == RComponent::Kind::Cycle ? "R_c" : "R_t") << " r" << c;
      if (std::find(comp.central.begin(), comp.central.end(), v) != comp.central.end()) {
        out << " central";
      }
    }
    if (rebel[v]) out << " rebel";
    if (minion[v]) out << " minion";
    out << " color=" << r.coloring[v] << '\n';
  }
  for (const auto& rec : r.rebels) {
    out << "rebel " << h.name(rec.rebel) << " in K(" << h.name(rec.host_core) << ") minions:";
    for (VertexId m : rec.minions) out << ' ' << h.name(m);
    out << '\n';
  }
  return out.str();
}

}  // namespace dirhyp
