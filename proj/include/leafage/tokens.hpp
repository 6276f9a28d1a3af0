#pragma once

#include <map>
#include <span>
#include <vector>

#include "leafage/clique_tree.hpp"
#include "leafage/graph.hpp"

namespace leafage {

/// A token is a nonempty subset of the clique that holds it.
using Token = VertexSet;

/// Per-clique multiset of tokens. Each multiset is kept sorted, so equality is
/// multiset equality and iteration is in canonical order.
class TokenAssignment {
 public:
  TokenAssignment() = default;
  explicit TokenAssignment(std::vector<std::vector<Token>> tokens);

  int clique_count() const noexcept { return static_cast<int>(tokens_.size()); }
  const std::vector<Token>& tokens(int clique) const { return tokens_.at(static_cast<std::size_t>(clique)); }
  /// |τ(C)|
  int size(int clique) const { return static_cast<int>(tokens(clique).size()); }
  int total() const;
  int count(int clique, const Token& token) const;
  /// Cliques holding exactly one token; the host leaves of any realizing tree.
  int leaf_count() const;

  void add(int clique, Token token);
  /// Removes one instance; false when absent.
  bool remove(int clique, const Token& token);

  friend bool operator==(const TokenAssignment&, const TokenAssignment&) = default;

 private:
  std::vector<std::vector<Token>> tokens_;
};

/// Moves one instance of `token` from `from` to `to`.
struct TokenMove {
  int from = 0;
  int to = 0;
  Token token;

  friend bool operator==(const TokenMove&, const TokenMove&) = default;
};

struct AugmentingPath {
  std::vector<TokenMove> moves;

  std::size_t length() const noexcept { return moves.size(); }
  /// C_1, ..., C_k.
  std::vector<int> cliques() const;

  friend bool operator==(const AugmentingPath&, const AugmentingPath&) = default;
};

/// ε_T(C) = {C ∩ C' : CC' ∈ E(T)}.
TokenAssignment epsilon_of_tree(const CliqueTree& t);

/// |τ(C)| for every clique.
std::vector<int> token_degrees(const TokenAssignment& ta);

/// |τ_u(C)| for every clique C that contains u, keyed by clique id.
std::map<int, int> token_degrees(const TokenAssignment& ta, std::span<const VertexSet> cliques, VertexId u);

/// Per-vertex leaf counts read off the tokens: |{C : |τ_u(C)| = 1}|.
std::vector<int> token_vertex_leaves(const TokenAssignment& ta, int vertex_count);

/// Throws PreconditionError when the token is not at mv.from.
TokenAssignment apply_move(const TokenAssignment& ta, const TokenMove& mv);

}  // namespace leafage
