#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leafage/chordal.hpp"
#include "leafage/graph.hpp"

namespace leafage {

/// Undirected edge between node ids, stored with first < second.
using TreeEdge = std::pair<int, int>;

/// Normalizes and sorts edges; throws PreconditionError unless they form a
/// spanning tree on `node_count` nodes.
std::vector<TreeEdge> canonical_tree_edges(int node_count, std::vector<TreeEdge> edges);

bool is_spanning_tree(int node_count, std::span<const TreeEdge> edges);
std::vector<int> tree_degrees(int node_count, std::span<const TreeEdge> edges);
/// Nodes of degree one. A single-node tree has no leaves.
int tree_leaf_count(int node_count, std::span<const TreeEdge> edges);
/// Node sequence from `from` to `to`, both inclusive.
std::vector<int> tree_path(int node_count, std::span<const TreeEdge> edges, int from, int to);

/// Tree whose nodes are the maximal cliques of a chordal graph.
///
/// Node i carries the member set of clique i; the tree shape is validated on
/// construction, the path-containment condition is not (see verify_clique_tree).
class CliqueTree {
 public:
  CliqueTree() = default;
  CliqueTree(std::vector<VertexSet> nodes, std::vector<TreeEdge> edges);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<VertexSet>& nodes() const noexcept { return nodes_; }
  const VertexSet& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  bool has_edge(int a, int b) const;
  int degree(int id) const;
  std::vector<int> neighbors(int id) const;
  int leaf_count() const { return tree_leaf_count(size(), edges_); }

  friend bool operator==(const CliqueTree&, const CliqueTree&) = default;

 private:
  std::vector<VertexSet> nodes_;
  std::vector<TreeEdge> edges_;
};

/// Maximum-weight spanning tree of the clique graph (Kruskal; ties broken by
/// the canonical edge order), validated before it is returned.
/// Throws PreconditionError when the clique graph is disconnected.
CliqueTree build_clique_tree(const CliqueGraph& cg);

/// A node `via` on the tree path from `from` to `to` that misses part of
/// node(from) ∩ node(to).
struct PathViolation {
  int from = 0;
  int to = 0;
  int via = 0;
};

struct CliqueTreeCheck {
  bool valid = false;
  std::optional<PathViolation> violation;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks path containment for every node pair, in canonical pair order.
/// Throws PreconditionError if the tree's nodes are not exactly g's maximal cliques.
CliqueTreeCheck verify_clique_tree(const CliqueGraph& cg, const CliqueTree& t);
CliqueTreeCheck verify_clique_tree(const Graph& g, const CliqueTree& t);

/// Path containment only; the node sets are taken as given.
CliqueTreeCheck check_path_containment(const CliqueTree& t);

}  // namespace leafage
