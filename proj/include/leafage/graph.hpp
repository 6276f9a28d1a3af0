#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leafage {

/// Index of a vertex in a Graph. Ids follow the lexicographic order of names.
using VertexId = int;

/// Sorted, duplicate-free set of vertex ids.
///
/// Ordering is lexicographic on the sorted member sequence. Since vertex ids
/// follow name order, this is also lexicographic order on member names, which
/// is the canonical order used for cliques and tokens everywhere.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members);

  bool contains(VertexId v) const;
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<VertexId>& members() const noexcept { return members_; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

/// Finite simple undirected graph over string-named vertices.
///
/// Immutable after construction. Vertex ids are assigned by sorting names, so
/// every downstream tie-break that uses ids is a tie-break on names.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on unknown endpoints, self-loops, duplicate edges
  /// or duplicate vertex names.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find, but throws PreconditionError for unknown names.
  VertexId id(std::string_view name) const;

  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool is_clique(const VertexSet& s) const;
  bool is_complete() const;

  VertexSet set_of(std::initializer_list<std::string_view> names) const;
  std::vector<std::string> names_of(const VertexSet& s) const;
  /// Members joined without separator when every name is one character,
  /// otherwise joined by commas. Used for human-readable clique labels.
  std::string label(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Names accepted by the text formats: [A-Za-z0-9_]+.
bool is_valid_vertex_name(std::string_view s);

/// Parses the edge-list format: `#` comments, `v <name>` and `e <a> <b>` lines.
/// Throws ParseError (with line number) on malformed lines, self-loops and
/// duplicate edges.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph: isolated vertices as `v` lines, then edges in
/// canonical order.
std::string to_edge_list(const Graph& g);

}  // namespace leafage
