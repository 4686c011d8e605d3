#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirhyp/errors.hpp"
#include "dirhyp/model.hpp"

namespace dirhyp {

enum class ViolationKind { PropertyS, SpecBoth, Linearity, PolyCondition, HeadCount };

const char* to_string(ViolationKind k);

/// Evidence that a checker failed. `edges` holds hyperedge indices; a single
/// index names a one-edge failure and a repeated index (i, i) names a
/// hyperedge that fails the pair condition against itself. For PolyCondition
/// `sources[k]` is the family that `edges[k]` was drawn from.
struct ViolationWitness {
  ViolationKind kind;
  std::vector<std::size_t> edges;
  std::optional<VertexId> vertex;
  std::vector<std::size_t> sources;

  std::string describe(const Hypergraph& h) const;
};

/// nullopt means the property holds.
using CheckResult = std::optional<ViolationWitness>;

/// Raised by the 2->1 pipeline when its input fails Property S.
class PropertySViolation : public ConditionViolated {
 public:
  explicit PropertySViolation(ViolationWitness w)
      : ConditionViolated("input violates Property S"), witness_(std::move(w)) {}
  const ViolationWitness& witness() const noexcept { return witness_; }

 private:
  ViolationWitness witness_;
};

enum class HeadRule {
  FewerThanTail,  // Property S proper
  AtMostTail,     // the relaxed variant shown to be insufficient for 2-colorability
};

// Pair conditions apply to every pair of hyperedges including a hyperedge with
// itself, so a hyperedge made of a single tail-vertex fails them. Single-edge
// failures are reported before pair failures; pair failures are reported for
// the lexicographically smallest (i, j).

/// Heads smaller than tails, and no two hyperedges meeting in exactly one
/// vertex that is a tail-vertex of both.
CheckResult check_property_s(const Hypergraph& h, HeadRule rule = HeadRule::FewerThanTail);

/// Every hyperedge has a tail-vertex, and every single-vertex intersection is
/// a head-vertex of both hyperedges.
CheckResult check_specboth(const Hypergraph& h);

/// Distinct hyperedges share at most one vertex.
CheckResult check_linear(const Hypergraph& h);

/// For every i <= c, any i hyperedges drawn from i distinct families have
/// empty intersection or at least i common vertices. `cap` bounds the number
/// of partial selections visited; CapExceeded is thrown past it.
CheckResult check_poly_condition(std::span<const Hypergraph> hs, std::size_t c,
                                 std::uint64_t cap);

/// True if re-evaluating the witness's predicate on its own edges fails again.
bool witness_reproduces(const Hypergraph& h, const ViolationWitness& w);
bool witness_reproduces(std::span<const Hypergraph> hs, const ViolationWitness& w);

std::optional<std::size_t> find_monochromatic_edge(const Hypergraph& h, const Coloring& col);
inline bool is_proper_coloring(const Hypergraph& h, const Coloring& col) {
  return !find_monochromatic_edge(h, col);
}

std::optional<std::size_t> find_non_polychromatic_edge(const Hypergraph& h, const Coloring& col,
                                                        int c);
inline bool is_polychromatic(const Hypergraph& h, const Coloring& col, int c) {
  return !find_non_polychromatic_edge(h, col, c);
}

/// An edge of family `family` that has no vertex of color `family`.
struct RainbowMiss {
  std::size_t family;
  std::size_t edge;
  friend bool operator==(const RainbowMiss&, const RainbowMiss&) = default;
};

std::optional<RainbowMiss> find_rainbow_miss(std::span<const Hypergraph> hs, const Coloring& col);
inline bool is_rainbow_cover(std::span<const Hypergraph> hs, const Coloring& col) {
  return !find_rainbow_miss(hs, col);
}

}  // namespace dirhyp
