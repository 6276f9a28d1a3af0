#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "leafage/chordal.hpp"
#include "leafage/clique_tree.hpp"
#include "leafage/gadget.hpp"
#include "leafage/graph.hpp"
#include "leafage/leafage.hpp"
#include "leafage/oracle.hpp"
#include "leafage/tokens.hpp"
#include "leafage/tree_model.hpp"
#include "leafage/vertex_leafage.hpp"

namespace leafage {

/// JSON with keys kept in insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Sorted member names joined by commas.
std::string clique_label(const Graph& g, const VertexSet& s);

Json names_json(const Graph& g, const VertexSet& s);
Json names_json(const Graph& g, const std::vector<VertexId>& vertices);

/// {"chordal", "peo"} or {"chordal", "cycle"}.
Json chordality_json(const Graph& g, const ChordalityResult& r);

/// [[label, label], ...] in canonical edge order.
Json tree_edges_json(const Graph& g, const CliqueTree& t);
Json tree_edges_json(const Graph& g, const CliqueGraph& cg, const std::vector<TreeEdge>& edges);

/// [{"clique", "members", "tokens"}, ...] by clique id; multiplicities explicit.
Json tokens_json(const Graph& g, const CliqueGraph& cg, const TokenAssignment& ta);

/// [{"from", "to", "token"}, ...]
Json path_json(const Graph& g, const CliqueGraph& cg, const AugmentingPath& path);

/// [{"path", "leaves_before", "leaves_after"}, ...]
Json trace_json(const Graph& g, const CliqueGraph& cg, const std::vector<LeafageIteration>& trace);

/// {"host_leaves", "per_vertex_leaves", "max_vertex_leaves"}
Json leaf_report_json(const Graph& g, const LeafReport& r);

/// {"host_nodes", "host_edges", "subtrees"}; host nodes are labelled by their contents.
Json tree_model_json(const Graph& g, const TreeModel& m);

/// {"leafage", "tree_edges", "trace"}
Json leafage_json(const Graph& g, const CliqueGraph& cg, const LeafageResult& r);

/// {"leafage", "vertex_leafage", "tree_edges", "per_vertex_leaves", "branch_edge_set"}
Json certificate_json(const Graph& g, const VlCertificate& c);

/// {"leafage", "vertex_leafage", "tree_count", "witnesses": {"leafage", "vertex_leafage", "joint"}}
Json oracle_json(const Graph& g, const OracleResult& r);

/// {"host_leaves", "max_vertex_leaves", "per_vertex_leaves", "model", "certificate"}
Json simultaneous_json(const Graph& g, const SimultaneousOptimum& s);

Json reduction_json(const NaeInstance& inst, const ReductionReport& r);

/// Undirected DOT graph of a tree model; node labels are clique_label of the
/// node contents, edge labels the shared vertices.
std::string model_dot(const Graph& g, const TreeModel& m);

}  // namespace leafage
