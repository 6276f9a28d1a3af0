#include <gtest/gtest.h>

#include "leafage/errors.hpp"
#include "leafage/graph.hpp"
#include "leafage/samples.hpp"

using namespace leafage;

TEST(Graph, IdsFollowNameOrder) {
  const Graph g({"c", "a", "b"}, {{"a", "c"}, {"b", "c"}});
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.id("a"), 0);
  EXPECT_EQ(g.id("c"), 2);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {1, 2}}));
}

TEST(Graph, RejectsBadConstruction) {
  EXPECT_THROW(Graph({"a", "a"}, {}), PreconditionError);
  EXPECT_THROW(Graph({"a"}, {{"a", "a"}}), PreconditionError);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PreconditionError);
  EXPECT_THROW(Graph({"a"}, {{"a", "b"}}), PreconditionError);
}

TEST(Graph, CliquesAndLabels) {
  const auto g = samples::worked_example_graph();
  EXPECT_TRUE(g.is_clique(g.set_of({"a", "b", "c"})));
  EXPECT_FALSE(g.is_clique(g.set_of({"a", "b", "d"})));
  EXPECT_FALSE(g.is_complete());
  EXPECT_EQ(g.label(g.set_of({"c", "a", "b"})), "abc");
  const Graph long_names({"x1", "x2"}, {{"x1", "x2"}});
  EXPECT_EQ(long_names.label(VertexSet{0, 1}), "x1,x2");
  EXPECT_TRUE(long_names.is_complete());
}

TEST(VertexSet, SetOperations) {
  const VertexSet a{3, 1, 2, 2};
  EXPECT_EQ(a.members(), (std::vector<VertexId>{1, 2, 3}));
  const VertexSet b{2, 5};
  EXPECT_EQ(set_intersection(a, b), VertexSet{2});
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 5}));
  EXPECT_TRUE(VertexSet{2}.is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_LT((VertexSet{1, 2}), (VertexSet{1, 3}));
  EXPECT_LT((VertexSet{1}), (VertexSet{1, 2}));
}

TEST(Parse, EdgeListRoundTrip) {
  const auto g = parse_graph("# comment\nv lonely\ne a b  # trailing\n\ne b c\n");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(to_edge_list(g), "v lonely\ne a b\ne b c\n");
  EXPECT_EQ(parse_graph(to_edge_list(g)), g);
}

TEST(Parse, WorkedExampleShape) {
  const auto g = samples::worked_example_graph();
  EXPECT_EQ(g.vertex_count(), 11);
  EXPECT_EQ(g.edge_count(), 15U);
  EXPECT_TRUE(is_connected(g));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("e a b\nx a b\n"), 2);
  EXPECT_EQ(line_of("e a\n"), 1);
  EXPECT_EQ(line_of("e a b\n\ne a a\n"), 3);
  EXPECT_EQ(line_of("e a b\ne b a\n"), 2);
  EXPECT_EQ(line_of("v bad-name\n"), 1);
  EXPECT_EQ(line_of("v a b\n"), 1);
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(Graph({}, {})));
  EXPECT_TRUE(is_connected(Graph({"a"}, {})));
  EXPECT_FALSE(is_connected(Graph({"a", "b"}, {})));
  EXPECT_FALSE(is_connected(parse_graph("e a b\ne c d\n")));
}
