#pragma once

#include <optional>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/tokens.hpp"

namespace leafage {

/// Decides whether a token assignment is ε_T for some clique tree T, and
/// produces such a T. Implementations must be deterministic and thread-safe.
class RealizabilityOracle {
 public:
  virtual ~RealizabilityOracle() = default;
  virtual std::optional<CliqueTree> realize(const CliqueGraph& cg, const TokenAssignment& ta) const = 0;
};

/// Exact search over pairings of tokens into tree edges.
///
/// An edge CC' consumes one token equal to C ∩ C' at each endpoint. Cliques
/// are completed in id order; for each clique the partners of equal tokens are
/// chosen as increasing combinations, so every edge set is visited at most
/// once. A complete pairing is accepted only if it is a spanning tree that
/// passes path containment.
///
/// Two counting checks run before the search: the multiset sizes must sum to
/// 2(k-1), and the token sizes must sum to twice the maximum spanning-tree
/// weight of the clique graph (clique trees are exactly the maximum-weight
/// spanning trees).
class BacktrackingRealizer final : public RealizabilityOracle {
 public:
  std::optional<CliqueTree> realize(const CliqueGraph& cg, const TokenAssignment& ta) const override;
};

const RealizabilityOracle& default_realizer();

/// Some clique tree T with ε_T = ta, or nullopt. Throws PreconditionError when
/// a token is not a subset of its clique or the clique counts differ.
std::optional<CliqueTree> is_realizable(const CliqueGraph& cg, const TokenAssignment& ta);

}  // namespace leafage
