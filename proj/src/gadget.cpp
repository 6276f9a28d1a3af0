#include "leafage/gadget.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "leafage/errors.hpp"
#include "leafage/tree_model.hpp"

namespace leafage {

namespace {

// clauses_of[i]: sorted clause indices containing variable i.
std::vector<std::vector<int>> clauses_of(const NaeInstance& inst) {
  std::vector<std::vector<int>> out(inst.variables.size());
  for (int j = 0; j < inst.clause_count(); ++j) {
    for (int v : inst.clauses[static_cast<std::size_t>(j)]) out[static_cast<std::size_t>(v)].push_back(j);
  }
  return out;
}

std::optional<std::pair<int, int>> first_dominated(const NaeInstance& inst) {
  const auto occ = clauses_of(inst);
  for (int i = 0; i < inst.variable_count(); ++i) {
    for (int j = 0; j < inst.variable_count(); ++j) {
      if (i == j) continue;
      const auto& a = occ[static_cast<std::size_t>(i)];
      const auto& b = occ[static_cast<std::size_t>(j)];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

// Keeps the variables flagged in `keep` and the clauses flagged in `keep_clause`,
// renumbering indices.
NaeInstance restrict(const NaeInstance& inst, const std::vector<char>& keep, const std::vector<char>& keep_clause) {
  NaeInstance out;
  out.k = inst.k;
  std::vector<int> index(inst.variables.size(), -1);
  for (std::size_t i = 0; i < inst.variables.size(); ++i) {
    if (!keep[i]) continue;
    index[i] = static_cast<int>(out.variables.size());
    out.variables.push_back(inst.variables[i]);
  }
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    if (!keep_clause[j]) continue;
    std::vector<int> c;
    for (int v : inst.clauses[j]) c.push_back(index[static_cast<std::size_t>(v)]);
    std::sort(c.begin(), c.end());
    out.clauses.push_back(std::move(c));
  }
  return out;
}

int subtree_max(const GadgetGraph& gg, const CliqueTree& t) {
  const auto counts = subtree_leaf_counts(t, gg.graph.vertex_count());
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

}  // namespace

NaeInstance make_instance(const std::vector<std::vector<std::string>>& clauses) {
  NaeInstance inst;
  std::map<std::string, int> index;
  for (const auto& clause : clauses) {
    if (inst.k == 0) inst.k = static_cast<int>(clause.size());
    if (static_cast<int>(clause.size()) != inst.k) throw PreconditionError("clauses have different widths");
    std::vector<int> c;
    for (const auto& name : clause) {
      auto [it, fresh] = index.emplace(name, inst.variable_count());
      if (fresh) inst.variables.push_back(name);
      c.push_back(it->second);
    }
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw PreconditionError("variable repeated inside a clause");
    inst.clauses.push_back(std::move(c));
  }
  if (!clauses.empty() && inst.k < 1) throw PreconditionError("empty clause");
  return inst;
}

NaeInstance parse_clauses(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<int> declared;
  bool seen_content = false;
  std::vector<std::vector<std::string>> clauses;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!seen_content && tok.size() == 2 && tok[0] == "k") {
      int k = 0;
      const auto& s = tok[1];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
      if (ec != std::errc() || ptr != s.data() + s.size() || k < 1) {
        throw ParseError(line_no, "invalid clause width '" + s + "'");
      }
      declared = k;
      seen_content = true;
      continue;
    }
    seen_content = true;
    for (const auto& t : tok) {
      if (!is_valid_vertex_name(t)) throw ParseError(line_no, "invalid variable name '" + t + "'");
    }
    const int width = declared ? *declared : (clauses.empty() ? static_cast<int>(tok.size()) : static_cast<int>(clauses[0].size()));
    if (static_cast<int>(tok.size()) != width) {
      throw ParseError(line_no, "clause has " + std::to_string(tok.size()) + " variables, expected " + std::to_string(width));
    }
    if (std::set<std::string>(tok.begin(), tok.end()).size() != tok.size()) {
      throw ParseError(line_no, "variable repeated inside a clause");
    }
    clauses.push_back(std::move(tok));
  }
  auto inst = make_instance(clauses);
  if (declared) inst.k = *declared;
  return inst;
}

std::string to_clause_file(const NaeInstance& inst) {
  std::string out = "k " + std::to_string(inst.k) + "\n";
  for (const auto& c : inst.clauses) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ' ';
      out += inst.variables[static_cast<std::size_t>(c[i])];
    }
    out += '\n';
  }
  return out;
}

bool is_nae_solution(const NaeInstance& inst, const NaeSolution& s) {
  std::vector<char> in(inst.variables.size(), 0);
  for (int v : s.chosen) {
    if (v < 0 || v >= inst.variable_count()) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (const auto& c : inst.clauses) {
    const auto inside = std::count_if(c.begin(), c.end(), [&](int v) { return in[static_cast<std::size_t>(v)] != 0; });
    if (inside == 0 || inside == static_cast<long>(c.size())) return false;
  }
  return true;
}

std::optional<NaeSolution> solve_nae(const NaeInstance& inst) {
  const int n = inst.variable_count();
  if (n > 30) throw PreconditionError("too many variables for brute force");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    NaeSolution s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.chosen.push_back(i);
    }
    if (is_nae_solution(inst, s)) return s;
  }
  return std::nullopt;
}

bool satisfies_star(const NaeInstance& inst) { return !first_dominated(inst).has_value(); }

NaeInstance normalize_star(NaeInstance inst) {
  while (auto pair = first_dominated(inst)) {
    const int v = pair->first;
    std::vector<char> keep(inst.variables.size(), 1);
    std::vector<char> keep_clause(inst.clauses.size(), 1);
    keep[static_cast<std::size_t>(v)] = 0;
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
      const auto& c = inst.clauses[j];
      if (std::find(c.begin(), c.end(), v) != c.end()) keep_clause[j] = 0;
    }
    inst = restrict(inst, keep, keep_clause);
  }
  const auto occ = clauses_of(inst);
  std::vector<char> keep(inst.variables.size(), 1);
  for (std::size_t i = 0; i < occ.size(); ++i) keep[i] = occ[i].empty() ? 0 : 1;
  return restrict(inst, keep, std::vector<char>(inst.clauses.size(), 1));
}

std::string GadgetGraph::clique_name(int id) const {
  if (id == a) return "A";
  if (id == b) return "B";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == id) return "Q" + std::to_string(i + 1);
  }
  throw PreconditionError("unknown gadget clique " + std::to_string(id));
}

GadgetGraph build_gadget(const NaeInstance& inst, bool require_star) {
  if (inst.k < 3) throw PreconditionError("clause width must be at least 3");
  if (inst.clauses.empty()) throw PreconditionError("instance has no clauses");
  for (const auto& c : inst.clauses) {
    if (static_cast<int>(c.size()) != inst.k) throw PreconditionError("clause width differs from k");
  }
  const auto occ = clauses_of(inst);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i].empty()) throw PreconditionError("variable " + inst.variables[i] + " is in no clause");
  }
  if (require_star && !satisfies_star(inst)) {
    const auto [v, w] = *first_dominated(inst);
    throw PreconditionError("variable " + inst.variables[static_cast<std::size_t>(v)] + " is dominated by " +
                            inst.variables[static_cast<std::size_t>(w)] + "; normalize the instance first");
  }

  const int m = inst.clause_count();
  std::vector<std::string> ys;
  for (int j = 1; j <= m; ++j) ys.push_back("y" + std::to_string(j));
  std::set<std::string> reserved(ys.begin(), ys.end());
  reserved.insert({"z1", "z2"});
  for (const auto& v : inst.variables) {
    if (reserved.contains(v)) throw PreconditionError("variable name " + v + " collides with a gadget vertex");
  }

  std::vector<std::string> names = inst.variables;
  names.insert(names.end(), ys.begin(), ys.end());
  names.emplace_back("z1");
  names.emplace_back("z2");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j < m; ++j) {
    for (int l = j + 1; l < m; ++l) edges.emplace_back(ys[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(l)]);
    edges.emplace_back("z1", ys[static_cast<std::size_t>(j)]);
    edges.emplace_back("z2", ys[static_cast<std::size_t>(j)]);
    for (int v : inst.clauses[static_cast<std::size_t>(j)]) {
      edges.emplace_back(inst.variables[static_cast<std::size_t>(v)], ys[static_cast<std::size_t>(j)]);
    }
  }

  GadgetGraph gg;
  gg.instance = inst;
  gg.graph = Graph(std::move(names), edges);
  gg.cliques = clique_graph(gg.graph);
  const auto& g = gg.graph;
  std::vector<VertexId> y_ids;
  for (const auto& y : ys) y_ids.push_back(g.id(y));
  auto with = [&](std::vector<VertexId> extra) {
    extra.insert(extra.end(), y_ids.begin(), y_ids.end());
    return VertexSet(std::move(extra));
  };
  gg.a = gg.cliques.find_clique(with({g.id("z1")}));
  gg.b = gg.cliques.find_clique(with({g.id("z2")}));
  for (std::size_t i = 0; i < inst.variables.size(); ++i) {
    std::vector<VertexId> members{g.id(inst.variables[i])};
    for (int j : occ[i]) members.push_back(y_ids[static_cast<std::size_t>(j)]);
    gg.q.push_back(gg.cliques.find_clique(VertexSet(std::move(members))));
  }
  const bool named = gg.a >= 0 && gg.b >= 0 && std::none_of(gg.q.begin(), gg.q.end(), [](int c) { return c < 0; });
  if (!named || gg.cliques.size() != inst.variable_count() + 2) {
    throw InvariantViolation("gadget cliques differ from A, B, Q_1..Q_n");
  }
  return gg;
}

CliqueTree solution_to_tree(const GadgetGraph& gg, const NaeSolution& s) {
  if (!is_nae_solution(gg.instance, s)) throw PreconditionError("not a NOT-ALL-EQUAL solution");
  std::vector<TreeEdge> edges{{gg.a, gg.b}};
  for (std::size_t i = 0; i < gg.q.size(); ++i) {
    const bool in_s = std::binary_search(s.chosen.begin(), s.chosen.end(), static_cast<int>(i));
    edges.emplace_back(in_s ? gg.a : gg.b, gg.q[i]);
  }
  CliqueTree t(gg.cliques.clique_sets(), std::move(edges));
  if (!verify_clique_tree(gg.cliques, t)) throw InvariantViolation("solution tree is not a clique tree");
  return t;
}

NaeSolution tree_to_solution(const GadgetGraph& gg, const CliqueTree& t) {
  if (!verify_clique_tree(gg.cliques, t)) throw PreconditionError("not a clique tree of the gadget");
  if (subtree_max(gg, t) > gg.instance.k) throw PreconditionError("some subtree has more than k leaves");
  NaeSolution s;
  for (std::size_t i = 0; i < gg.q.size(); ++i) {
    if (t.has_edge(gg.a, gg.q[i])) s.chosen.push_back(static_cast<int>(i));
  }
  if (!is_nae_solution(gg.instance, s)) throw InvariantViolation("recovered set is not a solution");
  return s;
}

ReductionReport verify_reduction(const NaeInstance& inst, std::size_t limit) {
  const auto gg = build_gadget(inst, false);
  ReductionReport r;
  r.k = inst.k;
  r.variables = inst.variable_count();
  r.clauses = inst.clause_count();
  r.satisfies_star = satisfies_star(inst);
  r.solution = solve_nae(inst);
  r.solvable = r.solution.has_value();
  const auto optima = oracle_optima(gg.graph, limit);
  r.vertex_leafage = optima.vertex_leafage;
  r.tree_count = optima.tree_count;
  r.upper_bound_holds = r.vertex_leafage <= inst.k + 1;
  r.equivalence_holds = r.solvable == (r.vertex_leafage <= inst.k);
  r.round_trip_holds = true;
  if (r.solution) {
    const auto t = solution_to_tree(gg, *r.solution);
    r.round_trip_holds = subtree_max(gg, t) <= inst.k && tree_to_solution(gg, t) == *r.solution;
  }
  return r;
}

}  // namespace leafage
