#include <gtest/gtest.h>

#include "corpus.hpp"
#include "leafage/chordal.hpp"
#include "leafage/errors.hpp"
#include "leafage/oracle.hpp"
#include "leafage/realizability.hpp"
#include "leafage/samples.hpp"
#include "leafage/tokens.hpp"
#include "leafage/tree_model.hpp"

using namespace leafage;

namespace {

struct Worked {
  Graph g = samples::worked_example_graph();
  CliqueGraph cg = clique_graph(g);
  int clique(std::initializer_list<std::string_view> names) const { return cg.find_clique(g.set_of(names)); }
  Token token(std::initializer_list<std::string_view> names) const { return g.set_of(names); }
};

}  // namespace

TEST(Epsilon, WorkedExampleTokens) {
  const Worked w;
  const auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  auto sorted = [](std::vector<Token> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(ta.tokens(w.clique({"a", "c", "d"})),
            sorted({w.token({"c", "d"}), w.token({"a", "c"}), w.token({"a", "d"})}));
  EXPECT_EQ(ta.tokens(w.clique({"a", "b", "c"})),
            sorted({w.token({"a", "c"}), w.token({"a"}), w.token({"a"}), w.token({"b", "c"})}));
  EXPECT_EQ(ta.count(w.clique({"a", "b", "c"}), w.token({"a"})), 2);
  EXPECT_EQ(ta.tokens(w.clique({"d", "e"})), std::vector<Token>{w.token({"d"})});
  EXPECT_EQ(ta.total(), 16);
  EXPECT_EQ(ta.leaf_count(), 5);

  const auto after = epsilon_of_tree(samples::worked_example_augmented_tree(w.g));
  EXPECT_EQ(after.tokens(w.clique({"c", "d", "k"})), sorted({w.token({"c", "d"}), w.token({"d"})}));
  EXPECT_EQ(after.tokens(w.clique({"a", "d", "f"})), sorted({w.token({"a", "d"}), w.token({"a"})}));
}

TEST(TokenDegrees, VertexA) {
  const Worked w;
  const auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  const auto deg = token_degrees(ta, w.cg.clique_sets(), w.g.id("a"));
  const std::map<int, int> expected{{w.clique({"a", "d", "f"}), 1}, {w.clique({"a", "c", "d"}), 2},
                                    {w.clique({"a", "g"}), 1},      {w.clique({"a", "h"}), 1},
                                    {w.clique({"a", "b", "c"}), 3}};
  EXPECT_EQ(deg, expected);
  EXPECT_EQ(token_vertex_leaves(ta, w.g.vertex_count())[static_cast<std::size_t>(w.g.id("a"))], 3);
}

TEST(TokenDegrees, MatchTreeDegreesOnOracleTrees) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = corpus::random_graph(seed);
    const auto cg = clique_graph(g);
    const auto sets = cg.clique_sets();
    enumerate_clique_trees(cg, [&](const CliqueTree& t) {
      const auto ta = epsilon_of_tree(t);
      ASSERT_EQ(token_degrees(ta), tree_degrees(t.size(), t.edges()));
      const auto model = model_from_clique_tree(g, t);
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto deg = token_degrees(ta, sets, u);
        const auto& nodes = model.subtrees[static_cast<std::size_t>(u)];
        ASSERT_EQ(deg.size(), nodes.size());
        for (int c : nodes) {
          int actual = 0;
          for (int x : t.neighbors(c)) actual += t.node(x).contains(u) ? 1 : 0;
          EXPECT_EQ(deg.at(c), actual);
        }
      }
      EXPECT_EQ(token_vertex_leaves(ta, g.vertex_count()), subtree_leaf_counts(t, g.vertex_count()));
    });
  }
}

TEST(ApplyMove, MovesOneInstance) {
  const Worked w;
  const auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  const int abc = w.clique({"a", "b", "c"});
  const int adf = w.clique({"a", "d", "f"});
  const auto moved = apply_move(ta, {abc, adf, w.token({"a"})});
  EXPECT_EQ(moved.count(abc, w.token({"a"})), 1);
  EXPECT_EQ(moved.count(adf, w.token({"a"})), 1);
  EXPECT_EQ(moved.total(), ta.total());
  EXPECT_EQ(apply_move(ta, {abc, abc, w.token({"a"})}), ta);
  EXPECT_THROW(apply_move(ta, {adf, abc, w.token({"a"})}), PreconditionError);
}

TEST(Realizability, RoundTripWorkedExample) {
  const Worked w;
  for (const auto& t : {samples::worked_example_initial_tree(w.g), samples::worked_example_augmented_tree(w.g)}) {
    const auto ta = epsilon_of_tree(t);
    const auto r = is_realizable(w.cg, ta);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(verify_clique_tree(w.cg, *r));
    EXPECT_EQ(epsilon_of_tree(*r), ta);
  }
}

TEST(Realizability, BrokenParityIsRejected) {
  const Worked w;
  auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  ASSERT_TRUE(ta.remove(w.clique({"d", "e"}), w.token({"d"})));
  EXPECT_FALSE(is_realizable(w.cg, ta).has_value());
}

TEST(Realizability, TokenOutsideCliqueThrows) {
  const Worked w;
  auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  ta.add(w.clique({"d", "e"}), w.token({"a"}));
  EXPECT_THROW(is_realizable(w.cg, ta), PreconditionError);
}

TEST(Realizability, SingleMovesFromWorkedExample) {
  const Worked w;
  const auto ta = epsilon_of_tree(samples::worked_example_initial_tree(w.g));
  const auto first = apply_move(ta, {w.clique({"a", "b", "c"}), w.clique({"a", "d", "f"}), w.token({"a"})});
  EXPECT_TRUE(is_realizable(w.cg, first).has_value());
  const auto second = apply_move(ta, {w.clique({"a", "d", "f"}), w.clique({"c", "d", "k"}), w.token({"d"})});
  EXPECT_TRUE(is_realizable(w.cg, second).has_value());
  const auto both = apply_move(first, {w.clique({"a", "d", "f"}), w.clique({"c", "d", "k"}), w.token({"d"})});
  const auto t = is_realizable(w.cg, both);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(epsilon_of_tree(*t), epsilon_of_tree(samples::worked_example_augmented_tree(w.g)));
}

TEST(Realizability, RoundTripOnOracleTrees) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto g = corpus::random_graph(seed);
    const auto cg = clique_graph(g);
    enumerate_clique_trees(cg, [&](const CliqueTree& t) {
      const auto ta = epsilon_of_tree(t);
      const auto r = is_realizable(cg, ta);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(epsilon_of_tree(*r), ta);
    });
  }
}

TEST(Realizability, AgreesWithTreeEnumeration) {
  // A random single move from a valid assignment is realizable iff its result
  // is the epsilon of some enumerated clique tree.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = corpus::random_graph(seed);
    const auto cg = clique_graph(g);
    std::vector<TokenAssignment> reachable;
    enumerate_clique_trees(cg, [&](const CliqueTree& t) { reachable.push_back(epsilon_of_tree(t)); });
    const auto ta = reachable.front();
    for (int from = 0; from < cg.size(); ++from) {
      for (const auto& token : ta.tokens(from)) {
        for (int to = 0; to < cg.size(); ++to) {
          if (to == from || !token.is_subset_of(cg.clique(to))) continue;
          const auto moved = apply_move(ta, {from, to, token});
          const bool expected = std::find(reachable.begin(), reachable.end(), moved) != reachable.end();
          ASSERT_EQ(is_realizable(cg, moved).has_value(), expected);
        }
      }
    }
  }
}
