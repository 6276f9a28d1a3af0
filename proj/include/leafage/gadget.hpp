#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/graph.hpp"
#include "leafage/oracle.hpp"

namespace leafage {

/// Positive NOT-ALL-EQUAL-k-SAT instance. Clauses hold sorted indices into
/// `variables`; each has exactly k distinct members.
struct NaeInstance {
  int k = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<int>> clauses;

  int variable_count() const noexcept { return static_cast<int>(variables.size()); }
  int clause_count() const noexcept { return static_cast<int>(clauses.size()); }

  friend bool operator==(const NaeInstance&, const NaeInstance&) = default;
};

/// Builds an instance from clauses given by variable names; variables are
/// ordered by first appearance. Throws PreconditionError on non-uniform width,
/// repeated variables inside a clause, or k < 1.
NaeInstance make_instance(const std::vector<std::vector<std::string>>& clauses);

/// Clause file: one clause per line as whitespace-separated variable names,
/// `#` comments, optional first line `k <int>`. Throws ParseError.
NaeInstance parse_clauses(std::string_view text);
std::string to_clause_file(const NaeInstance& inst);

/// Chosen variable indices, sorted.
struct NaeSolution {
  std::vector<int> chosen;

  friend bool operator==(const NaeSolution&, const NaeSolution&) = default;
};

/// Every clause has a member in S and a member outside S.
bool is_nae_solution(const NaeInstance& inst, const NaeSolution& s);

/// Least solution by bitmask over variable indices, or nullopt.
std::optional<NaeSolution> solve_nae(const NaeInstance& inst);

/// No two distinct variables v, w such that every clause containing v also contains w.
bool satisfies_star(const NaeInstance& inst);

/// Repeatedly removes the first dominated variable (ordered pairs in canonical
/// order) together with its clauses, then drops variables left in no clause.
NaeInstance normalize_star(NaeInstance inst);

/// Split graph over v_1..v_n, y_1..y_m, z_1, z_2 with maximal cliques
/// A = {z1} ∪ Y, B = {z2} ∪ Y and Q_i = {v_i} ∪ {y_j : v_i ∈ C_j}.
struct GadgetGraph {
  NaeInstance instance;
  Graph graph;
  CliqueGraph cliques;
  int a = 0;           // clique id of A
  int b = 0;           // clique id of B
  std::vector<int> q;  // clique id of Q_i, by variable index

  /// "A", "B" or "Q<i>" (1-based).
  std::string clique_name(int id) const;
};

/// Throws PreconditionError when k < 3, there are no clauses, a variable is in
/// no clause, a variable name collides with y<j>/z1/z2, or (when `require_star`)
/// the instance violates the domination-free property.
GadgetGraph build_gadget(const NaeInstance& inst, bool require_star = true);

/// Tree with edges AB, AQ_i for v_i in S and BQ_i otherwise.
/// Throws PreconditionError unless s is a solution.
CliqueTree solution_to_tree(const GadgetGraph& gg, const NaeSolution& s);

/// S = {v_i : AQ_i ∈ E(t)}. Throws PreconditionError unless t is a clique tree
/// of the gadget with every subtree having at most k leaves, and
/// InvariantViolation if the recovered set is not a solution.
NaeSolution tree_to_solution(const GadgetGraph& gg, const CliqueTree& t);

struct ReductionReport {
  int k = 0;
  int variables = 0;
  int clauses = 0;
  bool satisfies_star = false;
  bool solvable = false;
  std::optional<NaeSolution> solution;
  int vertex_leafage = 0;
  std::size_t tree_count = 0;
  bool upper_bound_holds = false;   // vl <= k + 1
  bool equivalence_holds = false;   // solvable <=> vl <= k
  bool round_trip_holds = false;    // tree_to_solution(solution_to_tree(S)) == S, vacuous if unsolvable

  /// The claims guaranteed by the reduction: the upper bound and round trip
  /// always, the equivalence when the instance is domination-free.
  bool holds() const noexcept {
    return upper_bound_holds && round_trip_holds && (!satisfies_star || equivalence_holds);
  }
};

/// Brute-force solvability against the exact vertex leafage of the gadget.
ReductionReport verify_reduction(const NaeInstance& inst, std::size_t limit = kDefaultOracleLimit);

}  // namespace leafage
