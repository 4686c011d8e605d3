#include "dirhyp/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dirhyp/errors.hpp"

namespace dirhyp {

namespace {

bool sorted_contains(std::span<const VertexId> xs, VertexId v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t\v\f");
    if (first != std::string_view::npos && line[first] != '#') fn(lineno, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

Hyperedge::Hyperedge(std::vector<VertexId> tail, std::vector<VertexId> head)
    : tail_(std::move(tail)), head_(std::move(head)) {
  std::sort(tail_.begin(), tail_.end());
  std::sort(head_.begin(), head_.end());
  if (std::adjacent_find(tail_.begin(), tail_.end()) != tail_.end() ||
      std::adjacent_find(head_.begin(), head_.end()) != head_.end()) {
    throw std::invalid_argument("hyperedge repeats a vertex");
  }
  all_.reserve(tail_.size() + head_.size());
  std::merge(tail_.begin(), tail_.end(), head_.begin(), head_.end(), std::back_inserter(all_));
  if (std::adjacent_find(all_.begin(), all_.end()) != all_.end()) {
    throw std::invalid_argument("tail and head of a hyperedge overlap");
  }
  if (all_.empty()) throw std::invalid_argument("hyperedge is empty");
}

bool Hyperedge::contains(VertexId v) const { return sorted_contains(all_, v); }
bool Hyperedge::is_tail(VertexId v) const { return sorted_contains(tail_, v); }
bool Hyperedge::is_head(VertexId v) const { return sorted_contains(head_, v); }

std::optional<TwoOneEdge> as_two_one(const Hyperedge& e) {
  if (e.tail().size() != 2 || e.head().size() != 1) return std::nullopt;
  return TwoOneEdge{e.tail()[0], e.tail()[1], e.head()[0]};
}

Hypergraph::Hypergraph(std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) add_vertex(std::to_string(i));
}

VertexId Hypergraph::add_vertex(std::string name) {
  if (index_.count(name)) throw std::invalid_argument("duplicate vertex name '" + name + "'");
  auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

VertexId Hypergraph::intern(std::string_view name) {
  if (auto v = find(name)) return *v;
  return add_vertex(std::string(name));
}

std::optional<VertexId> Hypergraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::add_edge(Hyperedge e) {
  for (VertexId v : e.vertices()) {
    if (v >= names_.size()) throw std::invalid_argument("hyperedge references unknown vertex");
  }
  edges_.push_back(std::move(e));
  return edges_.size() - 1;
}

Hypergraph Hypergraph::vertices_only() const {
  Hypergraph out;
  for (const auto& n : names_) out.add_vertex(n);
  return out;
}

Coloring::Coloring(std::size_t n, int colors, int fill) : colors_(colors), color_(n, fill) {
  if (colors < 1) throw std::invalid_argument("coloring needs at least one color");
  if (fill < 0 || fill >= colors) throw std::out_of_range("fill color out of range");
}

void Coloring::set(VertexId v, int c) {
  if (c < 0 || c >= colors_) throw std::out_of_range("color out of range");
  color_.at(v) = c;
}

bool is_two_one(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [](const Hyperedge& e) { return as_two_one(e).has_value(); });
}

bool is_oriented(const Hypergraph& h) {
  if (!is_two_one(h)) throw std::invalid_argument("is_oriented expects a 2->1 hypergraph");
  return dedup_same_support(h).removed.empty();
}

DedupResult dedup_same_support(const Hypergraph& h) {
  DedupResult out{h.vertices_only(), {}, {}};
  out.representative.reserve(h.num_edges());
  std::map<std::vector<VertexId>, std::size_t> kept;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    std::vector<VertexId> support(e.vertices().begin(), e.vertices().end());
    auto [it, inserted] = kept.try_emplace(std::move(support), out.reduced.num_edges());
    if (inserted) {
      out.reduced.add_edge(e);
    } else {
      out.removed.push_back(i);
    }
    out.representative.push_back(it->second);
  }
  return out;
}

std::vector<VertexId> intersection(const Hyperedge& a, const Hyperedge& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const Hyperedge& a, const Hyperedge& b) {
  auto x = a.vertices();
  auto y = b.vertices();
  std::size_t i = 0, j = 0, n = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

std::optional<Hypergraph> normalize_three_uniform(const Hypergraph& h) {
  Hypergraph out = h.vertices_only();
  for (const auto& e : h.edges()) {
    if (e.size() != 3) return std::nullopt;
    if (e.tail().size() == 2) {
      out.add_edge(e);
    } else if (e.tail().size() == 3) {
      out.add_edge({e.tail()[0], e.tail()[1]}, {e.tail()[2]});
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph h;
  for_each_content_line(text, [&](std::size_t lineno, std::string_view line) {
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(lineno, "missing '->'");
    if (line.find("->", arrow + 2) != std::string_view::npos) {
      throw ParseError(lineno, "more than one '->'");
    }
    std::vector<VertexId> tail, head;
    for (auto tok : split_ws(line.substr(0, arrow))) tail.push_back(h.intern(tok));
    for (auto tok : split_ws(line.substr(arrow + 2))) head.push_back(h.intern(tok));
    try {
      h.add_edge(std::move(tail), std::move(head));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(lineno, ex.what());
    }
  });
  return h;
}

std::string serialize(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    for (VertexId v : e.tail()) out += h.name(v) + ' ';
    out += "->";
    for (VertexId v : e.head()) out += ' ' + h.name(v);
    out += '\n';
  }
  return out;
}

Coloring parse_coloring(std::string_view text, const Hypergraph& h, std::optional<int> colors) {
  std::vector<int> assigned(h.num_vertices(), -1);
  int max_color = 0;
  for_each_content_line(text, [&](std::size_t lineno, std::string_view line) {
    auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(lineno, "expected '<vertex> <color>'");
    auto v = h.find(toks[0]);
    if (!v) throw ParseError(lineno, "unknown vertex '" + std::string(toks[0]) + "'");
    int c = 0;
    auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), c);
    if (ec != std::errc() || ptr != toks[1].data() + toks[1].size() || c < 0) {
      throw ParseError(lineno, "bad color '" + std::string(toks[1]) + "'");
    }
    if (colors && c >= *colors) throw ParseError(lineno, "color out of range");
    if (assigned[*v] != -1) throw ParseError(lineno, "vertex colored twice");
    assigned[*v] = c;
    max_color = std::max(max_color, c);
  });
  for (VertexId v = 0; v < assigned.size(); ++v) {
    if (assigned[v] == -1) {
      throw ParseError(0, "vertex '" + h.name(v) + "' has no color");
    }
  }
  Coloring col(h.num_vertices(), colors.value_or(max_color + 1));
  for (VertexId v = 0; v < assigned.size(); ++v) col.set(v, assigned[v]);
  return col;
}

std::string serialize_coloring(const Coloring& c, const Hypergraph& h) {
  std::ostringstream os;
  for (VertexId v = 0; v < c.size(); ++v) os << h.name(v) << ' ' << c[v] << '\n';
  return os.str();
}

}  // namespace dirhyp
