#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leafage/clique_tree.hpp"
#include "leafage/graph.hpp"

namespace leafage {

/// Host tree over opaque node ids 0..host_size-1, plus one node set per graph
/// vertex. Host ids are independent of clique ids so that non-minimal models
/// can be represented.
struct TreeModel {
  int host_size = 0;
  std::vector<TreeEdge> host_edges;
  std::vector<std::vector<int>> subtrees;  // indexed by VertexId, sorted node ids

  friend bool operator==(const TreeModel&, const TreeModel&) = default;
};

/// Why `m` fails to be a tree model of `g`, or nullopt if it is one.
std::optional<std::string> model_violation(const Graph& g, const TreeModel& m);
inline bool is_tree_model_of(const Graph& g, const TreeModel& m) { return !model_violation(g, m); }

/// Vertex u is mapped to {C : u ∈ C}; host node i is clique i.
TreeModel model_from_clique_tree(const Graph& g, const CliqueTree& t);

/// node -> {u : node ∈ subtree(u)}, for every host node.
std::vector<VertexSet> node_contents(const TreeModel& m);

/// True iff node_contents is a bijection onto the maximal cliques of g.
bool is_minimal_model(const Graph& g, const TreeModel& m);

/// Contracts host edges (first admissible edge in canonical order, repeated)
/// while the intersection graph stays equal to g. Throws PreconditionError when
/// m is not a model of g.
TreeModel contract_to_minimal(const Graph& g, TreeModel m);

struct LeafReport {
  int host_leaves = 0;
  std::vector<int> per_vertex_leaves;  // indexed by VertexId
  int max_vertex_leaves = 0;

  friend bool operator==(const LeafReport&, const LeafReport&) = default;
};

/// Leaf counts with the convention that a single-node tree has no leaves.
LeafReport leaf_report(const TreeModel& m);

/// Per-vertex subtree leaf counts of the model defined by a clique tree,
/// computed directly from the tree edges.
std::vector<int> subtree_leaf_counts(const CliqueTree& t, int vertex_count);

struct BranchingSets {
  std::vector<int> high_nodes;              // degree >= 3
  std::vector<TreeEdge> incident_edges;     // edges touching a high node
  int leaves = 0;

  /// sum over high nodes of (degree - 2); equals leaves - 2 on trees with >= 2 nodes.
  int excess = 0;
};

/// Throws InvariantViolation if |high_nodes| <= leaves - 2 fails on a tree
/// with at least two nodes.
BranchingSets branching_sets(int node_count, std::span<const TreeEdge> edges);
inline BranchingSets branching_sets(const CliqueTree& t) { return branching_sets(t.size(), t.edges()); }

}  // namespace leafage
