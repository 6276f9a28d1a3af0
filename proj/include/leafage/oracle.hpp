#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/graph.hpp"

namespace leafage {

inline constexpr std::size_t kDefaultOracleLimit = 1'000'000;

/// Visits every clique tree exactly once, in a fixed canonical order, and
/// returns how many there were.
///
/// Clique trees are enumerated as the maximum-weight spanning trees of the
/// clique graph (include/exclude over edges by descending weight, with bridge
/// pruning inside each weight class). Each tree is re-verified before it is
/// visited. Throws OracleLimitExceeded as soon as more than `limit` trees exist.
std::size_t enumerate_clique_trees(const CliqueGraph& cg, const std::function<void(const CliqueTree&)>& visit,
                                   std::size_t limit = kDefaultOracleLimit);

/// Throws PreconditionError unless g is chordal and connected.
std::size_t enumerate_clique_trees(const Graph& g, const std::function<void(const CliqueTree&)>& visit,
                                   std::size_t limit = kDefaultOracleLimit);

std::vector<CliqueTree> all_clique_trees(const Graph& g, std::size_t limit = kDefaultOracleLimit);

struct OracleResult {
  int leafage = 0;
  int vertex_leafage = 0;
  CliqueTree leafage_witness;         // first tree with leafage host leaves
  CliqueTree vertex_leafage_witness;  // first tree with max subtree leaves = vertex_leafage
  CliqueTree joint_witness;           // lexicographic minimum of (host leaves, max subtree leaves)
  std::size_t tree_count = 0;
};

/// Exact ℓ(G) and vl(G) by full enumeration. Throws InvariantViolation if the
/// joint witness does not reach both minima.
OracleResult oracle_optima(const Graph& g, std::size_t limit = kDefaultOracleLimit);

/// Connected chordal graph on n vertices named v0, v1, ... (zero-padded).
///
/// Built as the intersection graph of a random tree model: a random host tree
/// on 2n nodes and one random connected subtree per vertex. Each subtree starts
/// at a random node, is extended along the host path to the nearest node already
/// used by an earlier subtree, then grows node by node with probability `density`.
/// Deterministic per seed on every platform. Throws PreconditionError unless
/// n >= 1 and 0 <= density <= 1.
Graph random_chordal(int n, double density, std::uint64_t seed);

}  // namespace leafage
