#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "corpus.hpp"
#include "leafage/chordal.hpp"
#include "leafage/errors.hpp"
#include "leafage/oracle.hpp"
#include "leafage/samples.hpp"
#include "leafage/tree_model.hpp"

using namespace leafage;

TEST(Oracle, TwoCliquesHaveOneTree) {
  const auto trees = all_clique_trees(parse_graph("e a b\ne b c\n"));
  ASSERT_EQ(trees.size(), 1U);
  EXPECT_EQ(trees[0].edges(), (std::vector<TreeEdge>{{0, 1}}));
}

TEST(Oracle, SingleCliqueAndSingleVertex) {
  EXPECT_EQ(all_clique_trees(corpus::complete(4)).size(), 1U);
  const auto r = oracle_optima(Graph({"x"}, {}));
  EXPECT_EQ(r.leafage, 0);
  EXPECT_EQ(r.vertex_leafage, 0);
  EXPECT_EQ(r.tree_count, 1U);
}

TEST(Oracle, WorkedExample) {
  const auto g = samples::worked_example_graph();
  const auto trees = all_clique_trees(g);
  EXPECT_EQ(trees.size(), 180U);
  EXPECT_NE(std::find(trees.begin(), trees.end(), samples::worked_example_initial_tree(g)), trees.end());
  EXPECT_NE(std::find(trees.begin(), trees.end(), samples::worked_example_augmented_tree(g)), trees.end());
  const auto r = oracle_optima(g);
  EXPECT_EQ(r.leafage, 3);
  EXPECT_EQ(r.vertex_leafage, 2);
  EXPECT_EQ(r.tree_count, 180U);
  EXPECT_EQ(r.leafage_witness.leaf_count(), 3);
  EXPECT_EQ(r.joint_witness.leaf_count(), 3);
  EXPECT_EQ(leaf_report(model_from_clique_tree(g, r.joint_witness)).max_vertex_leaves, 2);
}

TEST(Oracle, RejectsBadInput) {
  EXPECT_THROW(all_clique_trees(parse_graph("e a b\ne b c\ne c d\ne d a\n")), PreconditionError);
  EXPECT_THROW(all_clique_trees(parse_graph("e a b\ne c d\n")), PreconditionError);
}

TEST(Oracle, LimitIsEnforced) {
  const auto g = samples::worked_example_graph();
  EXPECT_THROW(all_clique_trees(g, 10), OracleLimitExceeded);
  EXPECT_EQ(all_clique_trees(g, 180).size(), 180U);
  try {
    oracle_optima(g, 179);
    FAIL();
  } catch (const OracleLimitExceeded& e) {
    EXPECT_EQ(e.limit(), 179U);
  }
}

TEST(Oracle, MatchesPruferEnumeration) {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto g = corpus::random_graph(seed);
    if (clique_graph(g).size() > 7) continue;
    std::set<std::vector<brute::Edge>> mine;
    const auto count = enumerate_clique_trees(g, [&](const CliqueTree& t) {
      EXPECT_TRUE(mine.insert(t.edges()).second);
    });
    EXPECT_EQ(count, mine.size());
    ASSERT_EQ(mine, brute::clique_trees(g)) << to_edge_list(g);
    const auto r = oracle_optima(g);
    const auto b = brute::optima(g);
    EXPECT_EQ(r.leafage, b.leafage);
    EXPECT_EQ(r.vertex_leafage, b.vertex_leafage);
    EXPECT_EQ(r.tree_count, b.trees);
    ++compared;
  }
  EXPECT_GT(compared, 60);
}

TEST(Oracle, EnumerationOrderIsStable) {
  const auto g = corpus::random_graph(17);
  EXPECT_EQ(all_clique_trees(g), all_clique_trees(g));
}

TEST(RandomChordal, DeterministicChordalConnected) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = random_chordal(10, 0.2, seed);
    EXPECT_EQ(g, random_chordal(10, 0.2, seed));
    EXPECT_EQ(g.vertex_count(), 10);
    EXPECT_TRUE(check_chordal(g).chordal());
    EXPECT_TRUE(brute::is_chordal(g));
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_NE(random_chordal(10, 0.2, 1), random_chordal(10, 0.2, 2));
}

TEST(RandomChordal, NamesAndSmallSizes) {
  const auto g = random_chordal(12, 0.1, 5);
  EXPECT_EQ(g.name(0), "v00");
  EXPECT_EQ(g.name(11), "v11");
  EXPECT_EQ(random_chordal(1, 0.5, 3).vertex_count(), 1);
  EXPECT_THROW(random_chordal(0, 0.5, 3), PreconditionError);
  EXPECT_THROW(random_chordal(3, 1.5, 3), PreconditionError);
}

TEST(RandomChordal, CorpusIsNotAllIntervalGraphs) {
  int branching = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = corpus::random_graph(seed);
    EXPECT_LE(clique_graph(g).size(), 10);
    if (oracle_optima(g).leafage >= 3) ++branching;
  }
  EXPECT_GE(branching, 10);
}
