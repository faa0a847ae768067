#pragma once

// Simple graphs on the elements of a group: the commuting graph, the
// enhanced power graph, comparison helpers and text emission.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcg/error.hpp"
#include "dcg/group.hpp"

namespace dcg {

enum class GraphKind { Com, EPow, DCom, RelCom, Other };

inline std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Com: return "com";
    case GraphKind::EPow: return "epow";
    case GraphKind::DCom: return "dcom";
    case GraphKind::RelCom: return "relcom";
    case GraphKind::Other: return "other";
  }
  return "other";
}

/// Undirected loop-free graph with bitset rows.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<std::string> labels, GraphKind kind = GraphKind::Other, std::string group = {})
      : n_(labels.size()),
        words_((labels.size() + 63) / 64),
        bits_(n_ * words_, 0),
        labels_(std::move(labels)),
        kind_(kind),
        group_(std::move(group)) {}

  static SimpleGraph empty_on(const Group& g, GraphKind kind) { return SimpleGraph(g.names(), kind, g.label()); }

  static SimpleGraph complete(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    SimpleGraph g(std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }

  std::size_t size() const noexcept { return n_; }
  GraphKind kind() const noexcept { return kind_; }
  const std::string& group_name() const noexcept { return group_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_kind(GraphKind k) { kind_ = k; }

  bool adjacent(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }

  void add_edge(std::size_t i, std::size_t j) {
    require(i < n_ && j < n_, Errc::OutOfRange, "edge endpoint out of range");
    if (i == j) return;
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void remove_edge(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
    bits_[j * words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
    return d;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Keeps only edges also present in `other` (same vertex count).
  void intersect_with(const SimpleGraph& other) {
    require(other.n_ == n_, Errc::OutOfRange, "vertex counts differ");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  }

  /// Same vertex count and edge set (labels ignored).
  bool same_edges(const SimpleGraph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

  bool edges_subset_of(const SimpleGraph& other) const {
    require(other.n_ == n_, Errc::OutOfRange, "vertex counts differ");
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
  GraphKind kind_;
  std::string group_;
};

/// x ~ y iff x != y and xy = yx. The vertex set is all of G.
inline SimpleGraph commuting_graph(const Group& g) {
  auto out = SimpleGraph::empty_on(g, GraphKind::Com);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a + 1; b < g.order(); ++b)
      if (g.commute(a, b)) out.add_edge(a, b);
  return out;
}

/// x ~ y iff x != y and both lie in a common cyclic subgroup <z>.
inline SimpleGraph enhanced_power_graph(const Group& g) {
  auto out = SimpleGraph::empty_on(g, GraphKind::EPow);
  for (Elem z = 0; z < g.order(); ++z) {
    std::vector<Elem> cyc{0};
    for (Elem y = z; y != 0; y = g.mul(y, z)) cyc.push_back(y);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (std::size_t j = i + 1; j < cyc.size(); ++j) out.add_edge(cyc[i], cyc[j]);
  }
  return out;
}

/// Subgraph induced on `vertices` (kept in the given order).
inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Elem>& vertices) {
  std::vector<std::string> labels;
  for (auto v : vertices) {
    require(v < g.size(), Errc::OutOfRange, "vertex out of range");
    labels.push_back(g.labels()[v]);
  }
  SimpleGraph out(std::move(labels), GraphKind::Other, g.group_name());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

inline bool graph_equal(const SimpleGraph& a, const SimpleGraph& b) {
  require(a.size() == b.size(), Errc::OutOfRange, "graph_equal needs equal vertex counts");
  return a.same_edges(b);
}

/// E(a) is contained in E(b) on the same labelled vertex set.
inline bool is_spanning_subgraph(const SimpleGraph& a, const SimpleGraph& b) {
  require(a.size() == b.size(), Errc::OutOfRange, "is_spanning_subgraph needs equal vertex counts");
  return a.edges_subset_of(b);
}

/// If `graph` (on the elements of `g`) is the lexicographic product of a
/// complete graph on the central subgroup `z` with some graph Gamma, returns
/// Gamma on the cosets of z (numbered by smallest member). Otherwise nullopt.
inline std::optional<SimpleGraph> coset_blowup_decomposition(const SimpleGraph& graph, const Group& g,
                                                             const ElementSet& z) {
  require(graph.size() == g.order(), Errc::OutOfRange, "graph is not on the group's elements");
  const auto zg = center(g);
  for (auto x : z)
    require(std::binary_search(zg.begin(), zg.end(), x), Errc::BadParameter, "blow-up needs a central subgroup");
  require(is_subgroup(g, z), Errc::BadParameter, "blow-up needs a subgroup");
  const auto q = quotient(g, z);
  std::vector<std::vector<Elem>> cosets(q.section.size());
  for (Elem x = 0; x < g.order(); ++x) cosets[q.projection[x]].push_back(x);
  for (const auto& c : cosets)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!graph.adjacent(c[i], c[j])) return std::nullopt;
  SimpleGraph out(q.group.names(), GraphKind::Other, q.group.label());
  for (std::size_t a = 0; a < cosets.size(); ++a)
    for (std::size_t b = a + 1; b < cosets.size(); ++b) {
      const bool first = graph.adjacent(cosets[a][0], cosets[b][0]);
      for (auto x : cosets[a])
        for (auto y : cosets[b])
          if (graph.adjacent(x, y) != first) return std::nullopt;
      if (first) out.add_edge(a, b);
    }
  return out;
}

enum class GraphFormat { Dot, Json, EdgeList };

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Text rendering; byte-identical for identical graphs.
inline std::string emit(const SimpleGraph& g, GraphFormat format) {
  std::ostringstream os;
  switch (format) {
    case GraphFormat::Dot: {
      os << "graph \"" << dot_escape(g.group_name() + " " + to_string(g.kind())) << "\" {\n";
      for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i << " [label=\"" << dot_escape(g.labels()[i]) << "\"];\n";
      for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
      os << "}\n";
      break;
    }
    case GraphFormat::Json: {
      nlohmann::ordered_json j;
      j["group"] = g.group_name();
      j["kind"] = to_string(g.kind());
      j["n"] = g.size();
      j["edges"] = nlohmann::ordered_json::array();
      for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
      os << j.dump() << "\n";
      break;
    }
    case GraphFormat::EdgeList:
      for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
      break;
  }
  return os.str();
}

}  // namespace dcg
