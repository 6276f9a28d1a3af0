#pragma once

#include <string_view>

#include "leafage/clique_tree.hpp"
#include "leafage/graph.hpp"

namespace leafage::samples {

/// Eleven-vertex chordal graph used by the worked example and `repro-figure1`.
/// Its nine maximal cliques are de, adf, acd, cdk, ag, ah, abc, cj, bci.
std::string_view worked_example_edge_list();
Graph worked_example_graph();

/// Clique tree of the worked example with five leaves.
CliqueTree worked_example_initial_tree(const Graph& g);

/// Clique tree reached from the initial one by re-hanging de on cdk and ag on adf.
CliqueTree worked_example_augmented_tree(const Graph& g);

/// Clique tree over `g`'s maximal cliques from edges given as clique labels
/// (e.g. {"de", "adf"} for single-character names, or comma-joined names).
CliqueTree clique_tree_from_labels(const Graph& g,
                                   std::initializer_list<std::pair<std::string_view, std::string_view>> edges);

}  // namespace leafage::samples
