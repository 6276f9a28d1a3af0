#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "leafage/chordal.hpp"
#include "leafage/errors.hpp"
#include "leafage/gadget.hpp"
#include "leafage/oracle.hpp"
#include "leafage/tree_model.hpp"
#include "nae_corpus.hpp"

using namespace leafage;

namespace {

NaeInstance two_clauses() { return make_instance({{"v1", "v2", "v3"}, {"v2", "v3", "v4"}}); }

NaeInstance four_clauses() {
  return make_instance({{"v1", "v2", "v3"}, {"v1", "v4", "v5"}, {"v2", "v4", "v6"}, {"v3", "v5", "v6"}});
}

int variable(const NaeInstance& inst, const std::string& name) {
  const auto it = std::find(inst.variables.begin(), inst.variables.end(), name);
  return static_cast<int>(it - inst.variables.begin());
}

}  // namespace

TEST(NaeInstance, MakeInstanceOrdersByFirstAppearance) {
  const auto inst = make_instance({{"x", "b", "a"}, {"a", "q", "x"}});
  EXPECT_EQ(inst.k, 3);
  EXPECT_EQ(inst.variables, (std::vector<std::string>{"x", "b", "a", "q"}));
  EXPECT_EQ(inst.clauses, (std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}}));
  EXPECT_THROW(make_instance({{"a", "b", "c"}, {"a", "b"}}), PreconditionError);
  EXPECT_THROW(make_instance({{"a", "a", "c"}}), PreconditionError);
}

TEST(NaeInstance, ParseClauseFile) {
  const auto inst = parse_clauses("# two clauses\nk 3\nv1 v2 v3\n\nv2 v3 v4  # trailing\n");
  EXPECT_EQ(inst, two_clauses());
  EXPECT_EQ(parse_clauses(to_clause_file(inst)), inst);
  EXPECT_EQ(parse_clauses("a b c\nb c d\n").k, 3);
}

TEST(NaeInstance, ParseErrors) {
  auto line_of = [](std::string_view text) {
    try {
      parse_clauses(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("k 3\na b\n"), 2);
  EXPECT_EQ(line_of("a b c\na b c d\n"), 2);
  EXPECT_EQ(line_of("k x\n"), 1);
  EXPECT_EQ(line_of("a b a\n"), 1);
  EXPECT_EQ(line_of("a b c-d\n"), 1);
}

TEST(NaeSolution, Semantics) {
  const auto inst = two_clauses();
  EXPECT_TRUE(is_nae_solution(inst, {{variable(inst, "v2")}}));
  EXPECT_FALSE(is_nae_solution(inst, {{}}));
  EXPECT_FALSE(is_nae_solution(inst, {{0, 1, 2, 3}}));
  // v1 v2 v3 all chosen: first clause is all-equal
  EXPECT_FALSE(is_nae_solution(inst, {{0, 1, 2}}));
  const auto s = solve_nae(inst);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_nae_solution(inst, *s));
  EXPECT_EQ(s->chosen, std::vector<int>{1});  // {v1} misses the second clause
  EXPECT_FALSE(solve_nae(nae_corpus::instance(nae_corpus::fano())).has_value());
}

TEST(Star, Detection) {
  EXPECT_FALSE(satisfies_star(two_clauses()));
  EXPECT_TRUE(satisfies_star(four_clauses()));
  EXPECT_TRUE(satisfies_star(nae_corpus::instance(nae_corpus::fano())));
}

TEST(Star, NormalizeFixedPoint) {
  EXPECT_EQ(normalize_star(four_clauses()), four_clauses());
}

TEST(Star, NormalizeRemovesDominatedVariable) {
  const auto out = normalize_star(make_instance({{"v1", "v2", "v3"}, {"v1", "v2", "v4"}}));
  EXPECT_TRUE(out.clauses.empty());
  EXPECT_TRUE(out.variables.empty());
  EXPECT_TRUE(satisfies_star(out));
}

TEST(Star, NormalizeOverlappingTriples) {
  // every clause with v1 also has v3; dropping v1 leaves one clause, whose
  // variables then dominate each other
  const auto inst = make_instance({{"v1", "v2", "v3"}, {"v2", "v3", "v4"}, {"v1", "v3", "v4"}});
  EXPECT_FALSE(satisfies_star(inst));
  const auto out = normalize_star(inst);
  EXPECT_TRUE(satisfies_star(out));
  EXPECT_EQ(out.clause_count(), 0);
}

TEST(Star, NormalizePreservesSolvability) {
  int checked = 0;
  // every set of three triples over five variables
  std::vector<std::vector<int>> triples;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c) triples.push_back({a, b, c});
    }
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      for (std::size_t l = j + 1; l < triples.size(); ++l) {
        const std::vector<std::vector<int>> clauses{triples[i], triples[j], triples[l]};
        const auto inst = nae_corpus::instance(clauses);
        const auto norm = normalize_star(inst);
        EXPECT_TRUE(satisfies_star(norm));
        EXPECT_EQ(solve_nae(inst).has_value(), solve_nae(norm).has_value());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Gadget, SingleClause) {
  const auto gg = build_gadget(make_instance({{"v1", "v2", "v3"}}), false);
  const auto& g = gg.graph;
  EXPECT_EQ(g.vertex_count(), 6);
  const auto y1 = g.id("y1");
  for (const char* name : {"v1", "v2", "v3", "z1", "z2"}) EXPECT_TRUE(g.adjacent(y1, g.id(name)));
  EXPECT_FALSE(g.adjacent(g.id("v1"), g.id("v2")));
  EXPECT_FALSE(g.adjacent(g.id("z1"), g.id("z2")));
  EXPECT_EQ(gg.cliques.size(), 5);
}

TEST(Gadget, CliquesFollowMembership) {
  const auto inst = two_clauses();
  const auto gg = build_gadget(inst, false);
  const auto& g = gg.graph;
  const int v2 = variable(inst, "v2");
  EXPECT_EQ(gg.cliques.clique(gg.q[static_cast<std::size_t>(v2)]), g.set_of({"v2", "y1", "y2"}));
  EXPECT_EQ(gg.cliques.clique(gg.a), g.set_of({"z1", "y1", "y2"}));
  EXPECT_EQ(gg.cliques.clique(gg.b), g.set_of({"z2", "y1", "y2"}));
  EXPECT_EQ(gg.clique_name(gg.a), "A");
  EXPECT_EQ(gg.clique_name(gg.b), "B");
  EXPECT_EQ(gg.clique_name(gg.q[static_cast<std::size_t>(v2)]), "Q" + std::to_string(v2 + 1));
}

TEST(Gadget, SweepInstancesAreSplitAndChordal) {
  for (const auto& clauses : nae_corpus::star_sweep(6, 4)) {
    const auto inst = nae_corpus::instance(clauses);
    const auto gg = build_gadget(inst);
    ASSERT_TRUE(check_chordal(gg.graph).chordal());
    EXPECT_TRUE(is_connected(gg.graph));
    EXPECT_EQ(gg.cliques.size(), inst.variable_count() + 2);
    std::vector<VertexId> independent;
    for (const auto& v : inst.variables) independent.push_back(gg.graph.id(v));
    independent.push_back(gg.graph.id("z1"));
    independent.push_back(gg.graph.id("z2"));
    for (std::size_t i = 0; i < independent.size(); ++i) {
      for (std::size_t j = i + 1; j < independent.size(); ++j) {
        EXPECT_FALSE(gg.graph.adjacent(independent[i], independent[j]));
      }
    }
    std::vector<VertexId> ys;
    for (int j = 1; j <= inst.clause_count(); ++j) ys.push_back(gg.graph.id("y" + std::to_string(j)));
    EXPECT_TRUE(gg.graph.is_clique(VertexSet(ys)));
  }
}

TEST(Gadget, BuildRejects) {
  EXPECT_THROW(build_gadget(two_clauses()), PreconditionError);
  EXPECT_THROW(build_gadget(make_instance({{"a", "b"}, {"b", "c"}}), false), PreconditionError);
  EXPECT_THROW(build_gadget(NaeInstance{3, {}, {}}), PreconditionError);
  EXPECT_THROW(build_gadget(NaeInstance{3, {"a", "b", "c", "d"}, {{0, 1, 2}}}, false), PreconditionError);
  EXPECT_THROW(build_gadget(make_instance({{"y1", "b", "c"}}), false), PreconditionError);
  EXPECT_THROW(build_gadget(make_instance({{"z2", "b", "c"}}), false), PreconditionError);
}

TEST(Gadget, SolutionToTreeExample) {
  const auto inst = two_clauses();
  const auto gg = build_gadget(inst, false);
  const NaeSolution s{{variable(inst, "v2")}};
  const auto t = solution_to_tree(gg, s);
  std::vector<TreeEdge> expected{{std::min(gg.a, gg.b), std::max(gg.a, gg.b)}};
  for (int i = 0; i < inst.variable_count(); ++i) {
    const int hub = (i == variable(inst, "v2")) ? gg.a : gg.b;
    const int q = gg.q[static_cast<std::size_t>(i)];
    expected.emplace_back(std::min(hub, q), std::max(hub, q));
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(t.edges(), expected);
  EXPECT_TRUE(verify_clique_tree(gg.cliques, t));
  const auto r = leaf_report(model_from_clique_tree(gg.graph, t));
  EXPECT_LE(r.max_vertex_leaves, 3);
  for (const auto& v : inst.variables) EXPECT_EQ(r.per_vertex_leaves[static_cast<std::size_t>(gg.graph.id(v))], 0);
  for (const char* y : {"y1", "y2"}) EXPECT_EQ(r.per_vertex_leaves[static_cast<std::size_t>(gg.graph.id(y))], 3);
  EXPECT_EQ(tree_to_solution(gg, t), s);
}

TEST(Gadget, SolutionToTreeRejectsNonSolutions) {
  const auto inst = two_clauses();
  const auto gg = build_gadget(inst, false);
  EXPECT_THROW(solution_to_tree(gg, {{0, 1, 2}}), PreconditionError);
}

TEST(Gadget, TreeToSolutionRejectsTooManyLeaves) {
  const auto inst = nae_corpus::instance(nae_corpus::fano());
  const auto gg = build_gadget(inst);
  // every variable hangs on A: each y_j subtree then has k + 1 leaves
  std::vector<TreeEdge> edges{{std::min(gg.a, gg.b), std::max(gg.a, gg.b)}};
  for (int q : gg.q) edges.emplace_back(std::min(gg.a, q), std::max(gg.a, q));
  const CliqueTree t(gg.cliques.clique_sets(), edges);
  ASSERT_TRUE(verify_clique_tree(gg.cliques, t));
  EXPECT_THROW(tree_to_solution(gg, t), PreconditionError);
}

TEST(Gadget, RoundTripOnEverySolution) {
  for (const auto& clauses : nae_corpus::star_sweep(6, 4)) {
    const auto inst = nae_corpus::instance(clauses);
    const auto gg = build_gadget(inst);
    const int n = inst.variable_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      NaeSolution s;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1U) s.chosen.push_back(i);
      }
      if (!is_nae_solution(inst, s)) continue;
      ASSERT_EQ(tree_to_solution(gg, solution_to_tree(gg, s)), s);
    }
  }
}

TEST(Gadget, OracleTreesWithinBoundYieldSolutions) {
  const auto sweep = nae_corpus::star_sweep(6, 4);
  for (std::size_t idx = 0; idx < sweep.size(); idx += 37) {
    const auto inst = nae_corpus::instance(sweep[idx]);
    const auto gg = build_gadget(inst);
    enumerate_clique_trees(gg.cliques, [&](const CliqueTree& t) {
      const auto r = leaf_report(model_from_clique_tree(gg.graph, t));
      ASSERT_LE(r.max_vertex_leaves, inst.k + 1);
      if (r.max_vertex_leaves <= inst.k) EXPECT_TRUE(is_nae_solution(inst, tree_to_solution(gg, t)));
    });
  }
}

TEST(Reduction, TwoClauseExample) {
  const auto r = verify_reduction(two_clauses());
  EXPECT_FALSE(r.satisfies_star);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(r.vertex_leafage, 2);
  EXPECT_TRUE(r.upper_bound_holds);
  EXPECT_TRUE(r.equivalence_holds);
  EXPECT_TRUE(r.holds());
}

TEST(Reduction, FanoPlaneIsUnsolvable) {
  const auto inst = nae_corpus::instance(nae_corpus::fano());
  const auto r = verify_reduction(inst);
  EXPECT_TRUE(r.satisfies_star);
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.vertex_leafage, 4);
  EXPECT_TRUE(r.holds());
}

TEST(Reduction, SweepMatchesBruteForce) {
  const auto sweep = nae_corpus::star_sweep(6, 4);
  ASSERT_EQ(sweep.size(), 744U);
  for (std::size_t idx = 0; idx < sweep.size(); idx += 7) {
    const auto& clauses = sweep[idx];
    const auto inst = nae_corpus::instance(clauses);
    const auto r = verify_reduction(inst);
    const int n = inst.variable_count();
    EXPECT_EQ(r.solvable, brute::nae_solvable(n, clauses));
    EXPECT_TRUE(r.satisfies_star);
    EXPECT_TRUE(r.holds());
    EXPECT_TRUE(r.vertex_leafage == 3 || r.vertex_leafage == 4);
  }
}
