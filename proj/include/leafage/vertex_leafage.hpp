#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/execution.hpp"
#include "leafage/graph.hpp"
#include "leafage/leafage.hpp"
#include "leafage/tree_model.hpp"

namespace leafage {

/// A set F of clique-graph edges, kept sorted and duplicate-free.
struct BranchEdgeSet {
  std::vector<TreeEdge> edges;

  BranchEdgeSet() = default;
  explicit BranchEdgeSet(std::vector<TreeEdge> e);

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  friend bool operator==(const BranchEdgeSet&, const BranchEdgeSet&) = default;
};

/// Canonical order on branch edge sets: by size, then lexicographically.
bool canonical_less(const BranchEdgeSet& a, const BranchEdgeSet& b);

/// Ee(T): the edges of t incident to a node of degree at least three.
BranchEdgeSet branch_edges(const CliqueTree& t);

struct VlCertificate {
  int value = 0;    // max over per_vertex
  int leafage = 0;  // ℓ(G), computed on the way
  CliqueTree tree;
  std::vector<int> per_vertex;  // indexed by VertexId
  BranchEdgeSet branch_edge_set;
};

/// Name of the vertex added for clique-graph edge {a, b}: "edge:<a>-<b>".
std::string branch_vertex_name(int a, int b);

/// G' for F: g plus one vertex v_e per e = CC' in F, adjacent to C ∪ C' and to
/// every v_e' whose edge shares an endpoint with e. Throws PreconditionError
/// when an edge of F is not in the clique graph or a name collides.
Graph augmented_graph(const Graph& g, const CliqueGraph& cg, const BranchEdgeSet& f);

/// A clique tree T of g with Ee(T) = F, or nullopt if none exists (including
/// when F holds a pair of disjoint cliques or has >= #cliques edges).
///
/// Builds G'; if it is chordal, computes a minimum-leaf clique tree of G',
/// intersects every node with V(g) and keeps the result only if it is a
/// clique tree of g whose branch edges are exactly F.
std::optional<CliqueTree> clique_tree_with_branching(const Graph& g, const CliqueGraph& cg, const BranchEdgeSet& f,
                                                     const LeafageOptions& options = {});
std::optional<CliqueTree> clique_tree_with_branching(const Graph& g, const BranchEdgeSet& f,
                                                     const LeafageOptions& options = {});

/// tight: |F| <= ell - 2. safe: |F| <= 3 (ell - 2), enough for any tree with
/// ell leaves since every high node has degree at least three.
enum class BudgetMode { tight, safe };

int branch_budget(int ell, BudgetMode mode);

/// max_u |L(T_u)| shared by every clique tree T with Ee(T) = F. Only
/// meaningful when such a tree exists.
int predicted_vertex_leafage(const CliqueGraph& cg, const BranchEdgeSet& f);

/// Candidate sets F for a graph of leafage `leafage`, in canonical order.
///
/// Every F has the shape of Ee(T) for a tree T with at most `leafage` leaves:
/// each edge touches a node of F-degree >= 3 (a hub), other nodes have
/// F-degree <= 2, F is acyclic, the hubs' excess sum(deg - 2) is at most
/// leafage - 2, |F| <= budget, and some maximum-weight spanning tree contains
/// F while avoiding every other edge at a hub. The empty set is always first.
std::vector<BranchEdgeSet> branch_candidates(const CliqueGraph& cg, int leafage, int budget);

struct VertexLeafageOptions {
  BudgetMode budget = BudgetMode::safe;
  Execution execution = Execution::parallel;
};

/// vl(g) and a clique tree realizing it, trying the candidates of
/// branch_candidates in order of predicted value.
///
/// `ell` = nullopt means unbounded. The budget is computed from `ell` when given
/// and from ℓ(g) otherwise. Returns nullopt when ℓ(g) > ell or no candidate
/// within budget is realizable. Among optimal sets the canonically least F wins.
/// Throws PreconditionError unless g is chordal and connected.
std::optional<VlCertificate> vertex_leafage_bounded(const Graph& g, std::optional<int> ell,
                                                    const VertexLeafageOptions& options = {});

/// Serial reference: runs clique_tree_with_branching on every edge subset with
/// |F| <= budget, no structural pruning. Exponential; for tests only.
std::optional<VlCertificate> vertex_leafage_exhaustive(const Graph& g, std::optional<int> ell,
                                                       BudgetMode mode = BudgetMode::safe);

struct SimultaneousOptimum {
  CliqueTree tree;
  TreeModel model;
  LeafReport report;
  VlCertificate certificate;
};

/// A minimal tree model with ℓ(g) host leaves and vl(g) as its largest subtree
/// leaf count: minimize_leafage started from a vl-optimal clique tree.
/// Throws InvariantViolation if either optimum is missed.
SimultaneousOptimum simultaneous_optimum(const Graph& g, const VertexLeafageOptions& options = {});

}  // namespace leafage
