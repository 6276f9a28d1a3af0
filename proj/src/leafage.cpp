#include "leafage/leafage.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "leafage/errors.hpp"
#include "leafage/tree_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leafage {

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

const RealizabilityOracle& realizer_of(const LeafageOptions& options) {
  return options.realizer != nullptr ? *options.realizer : default_realizer();
}

struct Probe {
  int from;
  int to;
  const Token* token;
};

bool probe_realizable(const CliqueGraph& cg, const TokenAssignment& ta, const RealizabilityOracle& realizer,
                      const Probe& p) {
  return realizer.realize(cg, apply_move(ta, TokenMove{p.from, p.to, *p.token})).has_value();
}

// Least realizable token for each (from, to) pair that has one.
std::map<std::pair<int, int>, Token> evaluate_probes(const CliqueGraph& cg, const TokenAssignment& ta,
                                                     const std::vector<Probe>& probes,
                                                     const LeafageOptions& options) {
  const auto& realizer = realizer_of(options);
  std::map<std::pair<int, int>, Token> arcs;
  if (options.execution == Execution::serial) {
    for (const auto& p : probes) {
      const std::pair key{p.from, p.to};
      if (arcs.contains(key)) continue;
      if (probe_realizable(cg, ta, realizer, p)) arcs.emplace(key, *p.token);
    }
    return arcs;
  }

  std::vector<char> ok(probes.size(), 0);
  std::exception_ptr failure;
  const auto count = static_cast<long>(probes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      ok[static_cast<std::size_t>(i)] = probe_realizable(cg, ta, realizer, probes[static_cast<std::size_t>(i)]) ? 1 : 0;
    } catch (...) {
#pragma omp critical(leafage_probe_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  // Probes are listed in canonical order, so the first hit per pair is the least token.
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (ok[i]) arcs.emplace(std::pair{probes[i].from, probes[i].to}, *probes[i].token);
  }
  return arcs;
}

std::optional<AugmentingPath> search_path(const CliqueGraph& cg, const TokenAssignment& ta,
                                          const LeafageOptions& options) {
  const int k = cg.size();
  enum class Role { none, start, interior, terminal };
  std::vector<Role> role(static_cast<std::size_t>(k), Role::none);
  bool any_start = false;
  bool any_terminal = false;
  for (int c = 0; c < k; ++c) {
    const int s = ta.size(c);
    auto& r = role[static_cast<std::size_t>(c)];
    if (s >= 3) {
      r = Role::start;
      any_start = true;
    } else if (s == 2) {
      r = Role::interior;
    } else if (s == 1) {
      r = Role::terminal;
      any_terminal = true;
    }
  }
  if (!any_start || !any_terminal) return std::nullopt;

  std::vector<int> level(static_cast<std::size_t>(k), -1);
  std::vector<int> frontier;
  for (int c = 0; c < k; ++c) {
    if (role[static_cast<std::size_t>(c)] == Role::start) {
      level[static_cast<std::size_t>(c)] = 0;
      frontier.push_back(c);
    }
  }

  std::map<std::pair<int, int>, Token> arcs;
  int target_level = -1;
  for (int depth = 0; !frontier.empty() && target_level < 0; ++depth) {
    std::vector<Probe> probes;
    for (int x : frontier) {
      const auto& held = ta.tokens(x);
      for (int y = 0; y < k; ++y) {
        const auto ry = role[static_cast<std::size_t>(y)];
        if (y == x || level[static_cast<std::size_t>(y)] != -1) continue;
        if (ry != Role::interior && ry != Role::terminal) continue;
        for (std::size_t i = 0; i < held.size(); ++i) {
          if (i > 0 && held[i] == held[i - 1]) continue;
          if (held[i].is_subset_of(cg.clique(y))) probes.push_back(Probe{x, y, &held[i]});
        }
      }
    }
    auto found = evaluate_probes(cg, ta, probes, options);
    std::vector<int> next;
    for (const auto& [key, token] : found) {
      const int y = key.second;
      if (level[static_cast<std::size_t>(y)] == -1) {
        level[static_cast<std::size_t>(y)] = depth + 1;
        next.push_back(y);
        if (role[static_cast<std::size_t>(y)] == Role::terminal) target_level = depth + 1;
      }
      arcs.emplace(key, token);
    }
    std::sort(next.begin(), next.end());
    // Terminals end a path; only interior cliques are expanded further.
    std::erase_if(next, [&](int y) { return role[static_cast<std::size_t>(y)] != Role::interior; });
    frontier = std::move(next);
  }
  if (target_level < 0) return std::nullopt;

  // good[c]: some level-increasing arc sequence leads from c to a terminal at target_level.
  std::vector<char> good(static_cast<std::size_t>(k), 0);
  for (int c = 0; c < k; ++c) {
    good[static_cast<std::size_t>(c)] = level[static_cast<std::size_t>(c)] == target_level &&
                                        role[static_cast<std::size_t>(c)] == Role::terminal;
  }
  for (int depth = target_level - 1; depth >= 0; --depth) {
    for (const auto& [key, token] : arcs) {
      const auto [x, y] = key;
      if (level[static_cast<std::size_t>(x)] == depth && level[static_cast<std::size_t>(y)] == depth + 1 &&
          good[static_cast<std::size_t>(y)]) {
        good[static_cast<std::size_t>(x)] = 1;
      }
    }
  }

  AugmentingPath path;
  int current = -1;
  for (int c = 0; c < k && current < 0; ++c) {
    if (level[static_cast<std::size_t>(c)] == 0 && good[static_cast<std::size_t>(c)]) current = c;
  }
  for (int depth = 0; depth < target_level; ++depth) {
    int chosen = -1;
    for (const auto& [key, token] : arcs) {
      if (key.first == current && level[static_cast<std::size_t>(key.second)] == depth + 1 &&
          good[static_cast<std::size_t>(key.second)]) {
        chosen = key.second;
        break;  // arcs are ordered by (from, to)
      }
    }
    path.moves.push_back(TokenMove{current, chosen, arcs.at({current, chosen})});
    current = chosen;
  }
  return path;
}

}  // namespace

bool is_augmenting_path(const CliqueGraph& cg, const TokenAssignment& ta, const AugmentingPath& path,
                        const LeafageOptions& options) {
  if (path.moves.empty()) return false;
  const auto cliques = path.cliques();
  for (std::size_t j = 0; j + 1 < cliques.size(); ++j) {
    const auto& mv = path.moves[j];
    if (j > 0 && mv.from != path.moves[j - 1].to) return false;
    const int size = ta.size(mv.from);
    if (j == 0 ? size < 3 : size != 2) return false;
    if (ta.count(mv.from, mv.token) == 0) return false;
    if (!mv.token.is_subset_of(cg.clique(mv.to))) return false;
    if (!realizer_of(options).realize(cg, apply_move(ta, mv))) return false;
  }
  return ta.size(cliques.back()) == 1;
}

std::optional<AugmentingPath> shortest_augmenting_path(const CliqueGraph& cg, const TokenAssignment& ta,
                                                       const LeafageOptions& options) {
  if (!realizer_of(options).realize(cg, ta)) throw PreconditionError("token assignment is not realizable");
  return search_path(cg, ta, options);
}

LeafageResult minimize_leafage(const CliqueGraph& cg, const CliqueTree& t, const LeafageOptions& options) {
  if (!verify_clique_tree(cg, t)) throw PreconditionError("input is not a clique tree");
  const auto& realizer = realizer_of(options);
  const int n = cg.vertex_count();

  LeafageResult result{t, {}};
  TokenAssignment tau = epsilon_of_tree(t);
  int leaves = t.leaf_count();
  auto vertex_leaves = subtree_leaf_counts(t, n);
  const int max_iterations = std::max(0, leaves - 2);

  while (auto path = search_path(cg, tau, options)) {
    TokenAssignment next = tau;
    for (const auto& mv : path->moves) next = apply_move(next, mv);

    auto tree = realizer.realize(cg, next);
    if (!tree) throw InvariantViolation("assignment after an augmenting path is not realizable");
    const int next_leaves = tree->leaf_count();
    if (next_leaves != leaves - 1 || next.leaf_count() != next_leaves) {
      throw InvariantViolation("augmenting path did not remove exactly one host leaf");
    }
    auto next_vertex_leaves = subtree_leaf_counts(*tree, n);
    for (std::size_t u = 0; u < next_vertex_leaves.size(); ++u) {
      if (next_vertex_leaves[u] > vertex_leaves[u]) {
        throw InvariantViolation("augmenting path increased a vertex subtree's leaves");
      }
    }
    result.trace.push_back(LeafageIteration{*path, leaves, next_leaves});
    if (static_cast<int>(result.trace.size()) > max_iterations) {
      throw InvariantViolation("more iterations than initial leaves allow");
    }
    tau = std::move(next);
    result.tree = std::move(*tree);
    leaves = next_leaves;
    vertex_leaves = std::move(next_vertex_leaves);
  }
  return result;
}

LeafageResult minimize_leafage(const Graph& g, const LeafageOptions& options) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const auto cg = clique_graph(g);
  return minimize_leafage(cg, build_clique_tree(cg), options);
}

int leafage_of(const Graph& g, const LeafageOptions& options) {
  return minimize_leafage(g, options).tree.leaf_count();
}

}  // namespace leafage
