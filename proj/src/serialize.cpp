#include "leafage/serialize.hpp"

namespace leafage {

std::string clique_label(const Graph& g, const VertexSet& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ',';
    out += g.name(v);
  }
  return out;
}

Json names_json(const Graph& g, const VertexSet& s) { return names_json(g, s.members()); }

Json names_json(const Graph& g, const std::vector<VertexId>& vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(g.name(v));
  return out;
}

Json chordality_json(const Graph& g, const ChordalityResult& r) {
  Json out;
  out["chordal"] = r.chordal();
  if (r.peo) {
    out["peo"] = names_json(g, r.peo->order);
  } else {
    out["cycle"] = names_json(g, r.cycle);
  }
  return out;
}

Json tree_edges_json(const Graph& g, const CliqueTree& t) {
  Json out = Json::array();
  for (const auto& [a, b] : t.edges()) out.push_back(Json::array({clique_label(g, t.node(a)), clique_label(g, t.node(b))}));
  return out;
}

Json tree_edges_json(const Graph& g, const CliqueGraph& cg, const std::vector<TreeEdge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back(Json::array({clique_label(g, cg.clique(a)), clique_label(g, cg.clique(b))}));
  return out;
}

Json tokens_json(const Graph& g, const CliqueGraph& cg, const TokenAssignment& ta) {
  Json out = Json::array();
  for (int c = 0; c < ta.clique_count(); ++c) {
    Json entry;
    entry["clique"] = c;
    entry["members"] = names_json(g, cg.clique(c));
    Json tokens = Json::array();
    for (const auto& tok : ta.tokens(c)) tokens.push_back(names_json(g, tok));
    entry["tokens"] = std::move(tokens);
    out.push_back(std::move(entry));
  }
  return out;
}

Json path_json(const Graph& g, const CliqueGraph& cg, const AugmentingPath& path) {
  Json out = Json::array();
  for (const auto& mv : path.moves) {
    Json m;
    m["from"] = clique_label(g, cg.clique(mv.from));
    m["to"] = clique_label(g, cg.clique(mv.to));
    m["token"] = names_json(g, mv.token);
    out.push_back(std::move(m));
  }
  return out;
}

Json trace_json(const Graph& g, const CliqueGraph& cg, const std::vector<LeafageIteration>& trace) {
  Json out = Json::array();
  for (const auto& it : trace) {
    Json entry;
    entry["path"] = path_json(g, cg, it.path);
    entry["leaves_before"] = it.leaves_before;
    entry["leaves_after"] = it.leaves_after;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

Json per_vertex_json(const Graph& g, const std::vector<int>& counts) {
  Json out = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[g.name(v)] = counts.at(static_cast<std::size_t>(v));
  return out;
}

}  // namespace

Json leaf_report_json(const Graph& g, const LeafReport& r) {
  Json out;
  out["host_leaves"] = r.host_leaves;
  out["per_vertex_leaves"] = per_vertex_json(g, r.per_vertex_leaves);
  out["max_vertex_leaves"] = r.max_vertex_leaves;
  return out;
}

Json tree_model_json(const Graph& g, const TreeModel& m) {
  const auto contents = node_contents(m);
  Json out;
  Json nodes = Json::array();
  for (const auto& c : contents) nodes.push_back(clique_label(g, c));
  out["host_nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [a, b] : m.host_edges) {
    edges.push_back(Json::array({clique_label(g, contents[static_cast<std::size_t>(a)]),
                                 clique_label(g, contents[static_cast<std::size_t>(b)])}));
  }
  out["host_edges"] = std::move(edges);
  Json subtrees = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json nodes_of = Json::array();
    for (int x : m.subtrees[static_cast<std::size_t>(v)]) nodes_of.push_back(clique_label(g, contents[static_cast<std::size_t>(x)]));
    subtrees[g.name(v)] = std::move(nodes_of);
  }
  out["subtrees"] = std::move(subtrees);
  return out;
}

Json leafage_json(const Graph& g, const CliqueGraph& cg, const LeafageResult& r) {
  Json out;
  out["leafage"] = r.tree.leaf_count();
  out["tree_edges"] = tree_edges_json(g, r.tree);
  out["trace"] = trace_json(g, cg, r.trace);
  return out;
}

Json certificate_json(const Graph& g, const VlCertificate& c) {
  Json out;
  out["leafage"] = c.leafage;
  out["vertex_leafage"] = c.value;
  out["tree_edges"] = tree_edges_json(g, c.tree);
  out["per_vertex_leaves"] = per_vertex_json(g, c.per_vertex);
  Json f = Json::array();
  for (const auto& [a, b] : c.branch_edge_set.edges) {
    f.push_back(Json::array({clique_label(g, c.tree.node(a)), clique_label(g, c.tree.node(b))}));
  }
  out["branch_edge_set"] = std::move(f);
  return out;
}

Json oracle_json(const Graph& g, const OracleResult& r) {
  Json out;
  out["leafage"] = r.leafage;
  out["vertex_leafage"] = r.vertex_leafage;
  out["tree_count"] = r.tree_count;
  Json w;
  w["leafage"] = tree_edges_json(g, r.leafage_witness);
  w["vertex_leafage"] = tree_edges_json(g, r.vertex_leafage_witness);
  w["joint"] = tree_edges_json(g, r.joint_witness);
  out["witnesses"] = std::move(w);
  return out;
}

Json simultaneous_json(const Graph& g, const SimultaneousOptimum& s) {
  Json out;
  out["host_leaves"] = s.report.host_leaves;
  out["max_vertex_leaves"] = s.report.max_vertex_leaves;
  out["per_vertex_leaves"] = per_vertex_json(g, s.report.per_vertex_leaves);
  out["model"] = tree_model_json(g, s.model);
  out["certificate"] = certificate_json(g, s.certificate);
  return out;
}

Json reduction_json(const NaeInstance& inst, const ReductionReport& r) {
  Json out;
  out["k"] = r.k;
  out["variables"] = r.variables;
  out["clauses"] = r.clauses;
  out["satisfies_star"] = r.satisfies_star;
  out["solvable"] = r.solvable;
  if (r.solution) {
    Json s = Json::array();
    for (int v : r.solution->chosen) s.push_back(inst.variables[static_cast<std::size_t>(v)]);
    out["solution"] = std::move(s);
  } else {
    out["solution"] = nullptr;
  }
  out["vertex_leafage"] = r.vertex_leafage;
  out["tree_count"] = r.tree_count;
  out["upper_bound_holds"] = r.upper_bound_holds;
  out["equivalence_holds"] = r.equivalence_holds;
  out["round_trip_holds"] = r.round_trip_holds;
  out["holds"] = r.holds();
  return out;
}

std::string model_dot(const Graph& g, const TreeModel& m) {
  const auto contents = node_contents(m);
  std::string out = "graph tree_model {\n";
  for (std::size_t i = 0; i < contents.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + clique_label(g, contents[i]) + "\"];\n";
  }
  for (const auto& [a, b] : m.host_edges) {
    const auto shared = set_intersection(contents[static_cast<std::size_t>(a)], contents[static_cast<std::size_t>(b)]);
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + " [label=\"" + clique_label(g, shared) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace leafage
