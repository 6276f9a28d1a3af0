#include "leafage/tokens.hpp"

#include <algorithm>

#include "leafage/errors.hpp"

namespace leafage {

TokenAssignment::TokenAssignment(std::vector<std::vector<Token>> tokens) : tokens_(std::move(tokens)) {
  for (auto& multiset : tokens_) std::sort(multiset.begin(), multiset.end());
}

int TokenAssignment::total() const {
  int sum = 0;
  for (const auto& multiset : tokens_) sum += static_cast<int>(multiset.size());
  return sum;
}

int TokenAssignment::count(int clique, const Token& token) const {
  const auto& multiset = tokens(clique);
  auto [lo, hi] = std::equal_range(multiset.begin(), multiset.end(), token);
  return static_cast<int>(hi - lo);
}

int TokenAssignment::leaf_count() const {
  return static_cast<int>(
      std::count_if(tokens_.begin(), tokens_.end(), [](const auto& m) { return m.size() == 1; }));
}

void TokenAssignment::add(int clique, Token token) {
  auto& multiset = tokens_.at(static_cast<std::size_t>(clique));
  multiset.insert(std::upper_bound(multiset.begin(), multiset.end(), token), std::move(token));
}

bool TokenAssignment::remove(int clique, const Token& token) {
  auto& multiset = tokens_.at(static_cast<std::size_t>(clique));
  auto it = std::lower_bound(multiset.begin(), multiset.end(), token);
  if (it == multiset.end() || *it != token) return false;
  multiset.erase(it);
  return true;
}

std::vector<int> AugmentingPath::cliques() const {
  std::vector<int> out;
  if (moves.empty()) return out;
  out.push_back(moves.front().from);
  for (const auto& mv : moves) out.push_back(mv.to);
  return out;
}

TokenAssignment epsilon_of_tree(const CliqueTree& t) {
  std::vector<std::vector<Token>> tokens(static_cast<std::size_t>(t.size()));
  for (const auto& [a, b] : t.edges()) {
    auto common = set_intersection(t.node(a), t.node(b));
    tokens[static_cast<std::size_t>(a)].push_back(common);
    tokens[static_cast<std::size_t>(b)].push_back(std::move(common));
  }
  return TokenAssignment(std::move(tokens));
}

std::vector<int> token_degrees(const TokenAssignment& ta) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ta.clique_count()));
  for (int c = 0; c < ta.clique_count(); ++c) out.push_back(ta.size(c));
  return out;
}

std::map<int, int> token_degrees(const TokenAssignment& ta, std::span<const VertexSet> cliques, VertexId u) {
  std::map<int, int> out;
  for (int c = 0; c < ta.clique_count(); ++c) {
    if (!cliques[static_cast<std::size_t>(c)].contains(u)) continue;
    const auto& multiset = ta.tokens(c);
    out[c] = static_cast<int>(
        std::count_if(multiset.begin(), multiset.end(), [u](const Token& s) { return s.contains(u); }));
  }
  return out;
}

std::vector<int> token_vertex_leaves(const TokenAssignment& ta, int vertex_count) {
  std::vector<int> leaves(static_cast<std::size_t>(vertex_count), 0);
  std::vector<int> per_clique(static_cast<std::size_t>(vertex_count));
  for (int c = 0; c < ta.clique_count(); ++c) {
    std::fill(per_clique.begin(), per_clique.end(), 0);
    for (const auto& s : ta.tokens(c)) {
      for (VertexId u : s) ++per_clique[static_cast<std::size_t>(u)];
    }
    for (std::size_t u = 0; u < leaves.size(); ++u) leaves[u] += per_clique[u] == 1 ? 1 : 0;
  }
  return leaves;
}

TokenAssignment apply_move(const TokenAssignment& ta, const TokenMove& mv) {
  TokenAssignment out = ta;
  if (!out.remove(mv.from, mv.token)) throw PreconditionError("token is not held by the source clique");
  out.add(mv.to, mv.token);
  return out;
}

}  // namespace leafage
