#pragma once

#include <optional>
#include <vector>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/execution.hpp"
#include "leafage/realizability.hpp"
#include "leafage/tokens.hpp"

namespace leafage {

struct LeafageOptions {
  Execution execution = Execution::parallel;
  /// nullptr selects default_realizer().
  const RealizabilityOracle* realizer = nullptr;
};

/// Checks the augmenting-path conditions against `ta` itself: chained moves,
/// |τ(C_1)| >= 3, |τ(C_j)| = 2 in between, |τ(C_k)| = 1, and every single
/// move realizable when applied alone to `ta`.
bool is_augmenting_path(const CliqueGraph& cg, const TokenAssignment& ta, const AugmentingPath& path,
                        const LeafageOptions& options = {});

/// Breadth-first search for a shortest augmenting path. Every move is probed
/// against the original assignment. Among shortest paths the lexicographically
/// least clique sequence wins; each move carries the least realizable token.
/// Throws PreconditionError when `ta` is not realizable.
std::optional<AugmentingPath> shortest_augmenting_path(const CliqueGraph& cg, const TokenAssignment& ta,
                                                       const LeafageOptions& options = {});

struct LeafageIteration {
  AugmentingPath path;
  int leaves_before = 0;
  int leaves_after = 0;
};

struct LeafageResult {
  CliqueTree tree;
  std::vector<LeafageIteration> trace;
};

/// Repeatedly applies shortest augmenting paths until none is left.
///
/// Each iteration asserts (InvariantViolation on failure) that the new
/// assignment is realizable, that the host loses exactly one leaf, and that no
/// vertex subtree gains a leaf. Throws PreconditionError when `t` is not a
/// clique tree of the graph behind `cg`.
LeafageResult minimize_leafage(const CliqueGraph& cg, const CliqueTree& t, const LeafageOptions& options = {});

/// Builds the clique graph of `g` and starts from its maximum-weight clique tree.
LeafageResult minimize_leafage(const Graph& g, const LeafageOptions& options = {});

/// ℓ(G) for a connected chordal graph, via minimize_leafage.
int leafage_of(const Graph& g, const LeafageOptions& options = {});

}  // namespace leafage
