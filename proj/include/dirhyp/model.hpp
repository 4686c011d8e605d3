#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dirhyp {

/// Dense vertex index. External names live in the owning Hypergraph.
using VertexId = std::uint32_t;

/// A hyperedge whose vertices are split into a tail and a head. Both sides are
/// kept sorted; the sorted union is cached because nearly every check walks it.
class Hyperedge {
 public:
  /// Throws std::invalid_argument if a vertex repeats, appears on both sides,
  /// or both sides are empty.
  Hyperedge(std::vector<VertexId> tail, std::vector<VertexId> head);

  std::span<const VertexId> tail() const { return tail_; }
  std::span<const VertexId> head() const { return head_; }
  std::span<const VertexId> vertices() const { return all_; }
  std::size_t size() const { return all_.size(); }

  bool contains(VertexId v) const;
  bool is_tail(VertexId v) const;
  bool is_head(VertexId v) const;

  friend bool operator==(const Hyperedge& a, const Hyperedge& b) {
    return a.tail_ == b.tail_ && a.head_ == b.head_;
  }

 private:
  std::vector<VertexId> tail_;
  std::vector<VertexId> head_;
  std::vector<VertexId> all_;
};

/// Tail pair and head of a 2->1 hyperedge `ab -> c`, with a < b.
struct TwoOneEdge {
  VertexId tail_a;
  VertexId tail_b;
  VertexId head;
};

std::optional<TwoOneEdge> as_two_one(const Hyperedge& e);

/// Vertex set with external names plus an ordered list of hyperedges. Duplicate
/// hyperedges are allowed and count separately.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// n vertices named "1" .. "n".
  explicit Hypergraph(std::size_t n);

  /// Adds a vertex; throws std::invalid_argument on a duplicate name.
  VertexId add_vertex(std::string name);
  /// Returns the vertex with this name, adding it if absent.
  VertexId intern(std::string_view name);
  std::optional<VertexId> find(std::string_view name) const;

  /// Validates ids against the vertex set; returns the new edge index.
  std::size_t add_edge(Hyperedge e);
  std::size_t add_edge(std::vector<VertexId> tail, std::vector<VertexId> head) {
    return add_edge(Hyperedge(std::move(tail), std::move(head)));
  }

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  /// Same vertex set, no edges.
  Hypergraph vertices_only() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Hyperedge> edges_;
};

/// Total map vertex -> color in [0, colors).
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::size_t n, int colors, int fill = 0);

  int colors() const { return colors_; }
  std::size_t size() const { return color_.size(); }
  int operator[](VertexId v) const { return color_[v]; }
  int at(VertexId v) const { return color_.at(v); }
  /// Throws std::out_of_range if `c` is not a valid color.
  void set(VertexId v, int c);
  std::span<const int> values() const { return color_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int colors_ = 0;
  std::vector<int> color_;
};

/// Every hyperedge has exactly two tail-vertices and one head-vertex.
bool is_two_one(const Hypergraph& h);

/// No two hyperedges on the same vertex triple. Throws std::invalid_argument
/// for non-2->1 input.
bool is_oriented(const Hypergraph& h);

/// Result of keeping one hyperedge per distinct vertex support.
struct DedupResult {
  Hypergraph reduced;
  /// For each input edge, the index in `reduced` of the edge kept for its
  /// support. Kept edges map to themselves.
  std::vector<std::size_t> representative;
  /// Input edge indices that were dropped, in input order.
  std::vector<std::size_t> removed;
};

/// Keeps the first hyperedge (in input order) of every vertex support.
DedupResult dedup_same_support(const Hypergraph& h);

/// Sorted vertex-set intersection of two hyperedges.
std::vector<VertexId> intersection(const Hyperedge& a, const Hyperedge& b);
std::size_t intersection_size(const Hyperedge& a, const Hyperedge& b);

/// Converts a 3-uniform hypergraph whose edges have at most one head-vertex
/// and more tail- than head-vertices into 2->1 form by demoting the largest
/// tail vertex of each headless edge. Returns nullopt for other inputs.
std::optional<Hypergraph> normalize_three_uniform(const Hypergraph& h);

// Text formats. A hypergraph file holds one `<tail tokens> -> <head tokens>`
// per line; `#` starts a comment line and blank lines are skipped. A coloring
// file holds one `<vertex> <color>` per line.

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& h);

/// The color count is `colors` if given, else one more than the largest color
/// seen. Every vertex of `h` must be assigned exactly once.
Coloring parse_coloring(std::string_view text, const Hypergraph& h,
                        std::optional<int> colors = std::nullopt);
std::string serialize_coloring(const Coloring& c, const Hypergraph& h);

}  // namespace dirhyp
