#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leafage/graph.hpp"

namespace leafage {

/// Every vertex's later neighbours in `order` form a clique.
struct PerfectEliminationOrder {
  std::vector<VertexId> order;
};

/// Outcome of a chordality test: a PEO, or an induced cycle of length >= 4.
struct ChordalityResult {
  std::optional<PerfectEliminationOrder> peo;
  std::vector<VertexId> cycle;

  bool chordal() const noexcept { return peo.has_value(); }
};

/// Maximum-cardinality search; ties go to the smallest vertex id.
ChordalityResult check_chordal(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const PerfectEliminationOrder& peo);

/// True iff `cycle` is an induced cycle of g with at least four vertices.
bool is_induced_cycle(const Graph& g, const std::vector<VertexId>& cycle);

struct MaximalClique {
  int id = 0;
  VertexSet members;

  friend bool operator==(const MaximalClique&, const MaximalClique&) = default;
};

/// The maximal cliques in canonical (lexicographic) order, ids 0..k-1.
/// Throws PreconditionError if `peo` is not a perfect elimination order of g.
std::vector<MaximalClique> maximal_cliques(const Graph& g, const PerfectEliminationOrder& peo);

/// Convenience overload; throws PreconditionError when g is not chordal.
std::vector<MaximalClique> maximal_cliques(const Graph& g);

struct CliqueEdge {
  int a = 0;  // a < b
  int b = 0;
  int weight = 0;

  friend bool operator==(const CliqueEdge&, const CliqueEdge&) = default;
};

/// Intersection graph of the maximal cliques, with |C ∩ C'| as edge weight.
/// Pairwise intersections are cached; everything downstream reads them here.
class CliqueGraph {
 public:
  CliqueGraph() = default;
  CliqueGraph(std::vector<MaximalClique> cliques, int vertex_count);

  int size() const noexcept { return static_cast<int>(cliques_.size()); }
  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<MaximalClique>& cliques() const noexcept { return cliques_; }
  const VertexSet& clique(int id) const { return cliques_.at(static_cast<std::size_t>(id)).members; }
  std::vector<VertexSet> clique_sets() const;

  const VertexSet& intersection(int a, int b) const {
    return intersections_[static_cast<std::size_t>(a * size() + b)];
  }
  int weight(int a, int b) const { return static_cast<int>(intersection(a, b).size()); }
  bool has_edge(int a, int b) const { return a != b && !intersection(a, b).empty(); }

  /// Edges sorted by (a, b).
  const std::vector<CliqueEdge>& edges() const noexcept { return edges_; }
  /// Index of edge {a, b} in edges(), or -1.
  int edge_index(int a, int b) const;
  bool connected() const;

  /// Weight of a maximum-weight spanning tree (spanning forest if disconnected).
  int max_spanning_weight() const noexcept { return max_weight_; }

  /// Clique id whose members equal `s`, or -1.
  int find_clique(const VertexSet& s) const;

 private:
  std::vector<MaximalClique> cliques_;
  int vertex_count_ = 0;
  std::vector<VertexSet> intersections_;
  std::vector<CliqueEdge> edges_;
  int max_weight_ = 0;
};

CliqueGraph clique_graph(const Graph& g, std::vector<MaximalClique> cliques);

/// check_chordal + maximal_cliques + clique_graph. Throws PreconditionError
/// when g is not chordal.
CliqueGraph clique_graph(const Graph& g);

}  // namespace leafage
