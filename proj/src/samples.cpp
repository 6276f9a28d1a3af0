#include "leafage/samples.hpp"

#include "leafage/chordal.hpp"
#include "leafage/errors.hpp"

namespace leafage::samples {

std::string_view worked_example_edge_list() {
  return "# eleven-vertex chordal graph, nine maximal cliques\n"
         "e e d\n"
         "e f d\n"
         "e d k\n"
         "e f a\n"
         "e d a\n"
         "e d c\n"
         "e k c\n"
         "e a c\n"
         "e a h\n"
         "e a g\n"
         "e a b\n"
         "e c b\n"
         "e c i\n"
         "e c j\n"
         "e b i\n";
}

Graph worked_example_graph() { return parse_graph(worked_example_edge_list()); }

CliqueTree clique_tree_from_labels(const Graph& g,
                                   std::initializer_list<std::pair<std::string_view, std::string_view>> edges) {
  const auto cg = clique_graph(g);
  auto lookup = [&](std::string_view label) {
    for (int c = 0; c < cg.size(); ++c) {
      if (g.label(cg.clique(c)) == label) return c;
    }
    throw PreconditionError("no maximal clique labelled " + std::string(label));
  };
  std::vector<TreeEdge> out;
  for (const auto& [a, b] : edges) out.emplace_back(lookup(a), lookup(b));
  return CliqueTree(cg.clique_sets(), std::move(out));
}

CliqueTree worked_example_initial_tree(const Graph& g) {
  return clique_tree_from_labels(g, {{"de", "adf"},
                                     {"adf", "acd"},
                                     {"acd", "cdk"},
                                     {"abc", "ag"},
                                     {"abc", "ah"},
                                     {"acd", "abc"},
                                     {"bci", "cj"},
                                     {"abc", "bci"}});
}

CliqueTree worked_example_augmented_tree(const Graph& g) {
  return clique_tree_from_labels(g, {{"de", "cdk"},
                                     {"adf", "acd"},
                                     {"acd", "cdk"},
                                     {"adf", "ag"},
                                     {"abc", "ah"},
                                     {"acd", "abc"},
                                     {"bci", "cj"},
                                     {"abc", "bci"}});
}

}  // namespace leafage::samples
