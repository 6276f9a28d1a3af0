#include "leafage/tree_model.hpp"

#include <algorithm>
#include <map>

#include "leafage/chordal.hpp"
#include "leafage/errors.hpp"

namespace leafage {

namespace {

bool sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x == *y) return true;
    if (*x < *y) {
      ++x;
    } else {
      ++y;
    }
  }
  return false;
}

bool induces_connected(const std::vector<int>& nodes, std::span<const TreeEdge> edges) {
  if (nodes.empty()) return false;
  // A node subset of a tree is connected iff it spans |nodes| - 1 internal edges.
  std::size_t internal = 0;
  for (const auto& [a, b] : edges) {
    if (std::binary_search(nodes.begin(), nodes.end(), a) &&
        std::binary_search(nodes.begin(), nodes.end(), b)) {
      ++internal;
    }
  }
  return internal + 1 == nodes.size();
}

bool same_intersection_graph(const Graph& g, const std::vector<std::vector<int>>& subtrees) {
  const int n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (sorted_intersect(subtrees[static_cast<std::size_t>(u)], subtrees[static_cast<std::size_t>(v)]) !=
          g.adjacent(u, v)) {
        return false;
      }
    }
  }
  return true;
}

// Merges node `drop` into `keep` and closes the gap left in the id range.
TreeModel contract_edge(const TreeModel& m, int keep, int drop) {
  auto relabel = [&](int x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  TreeModel out;
  out.host_size = m.host_size - 1;
  for (const auto& [a, b] : m.host_edges) {
    if ((a == keep && b == drop) || (a == drop && b == keep)) continue;
    out.host_edges.emplace_back(relabel(a), relabel(b));
  }
  out.host_edges = canonical_tree_edges(out.host_size, std::move(out.host_edges));
  out.subtrees.reserve(m.subtrees.size());
  for (const auto& nodes : m.subtrees) {
    std::vector<int> mapped;
    mapped.reserve(nodes.size());
    for (int x : nodes) mapped.push_back(relabel(x));
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    out.subtrees.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

std::optional<std::string> model_violation(const Graph& g, const TreeModel& m) {
  if (!is_spanning_tree(m.host_size, m.host_edges)) return "host is not a tree";
  if (m.subtrees.size() != static_cast<std::size_t>(g.vertex_count())) {
    return "subtree count differs from vertex count";
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto& nodes = m.subtrees[static_cast<std::size_t>(u)];
    if (!std::is_sorted(nodes.begin(), nodes.end()) ||
        std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      return "subtree of " + g.name(u) + " is not a sorted node set";
    }
    if (!nodes.empty() && (nodes.front() < 0 || nodes.back() >= m.host_size)) {
      return "subtree of " + g.name(u) + " names an unknown host node";
    }
    if (!induces_connected(nodes, m.host_edges)) {
      return "subtree of " + g.name(u) + " is empty or disconnected";
    }
  }
  if (!same_intersection_graph(g, m.subtrees)) return "intersection graph differs from the graph";
  return std::nullopt;
}

TreeModel model_from_clique_tree(const Graph& g, const CliqueTree& t) {
  TreeModel m;
  m.host_size = t.size();
  m.host_edges = t.edges();
  m.subtrees.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int c = 0; c < t.size(); ++c) {
    for (VertexId u : t.node(c)) m.subtrees[static_cast<std::size_t>(u)].push_back(c);
  }
  return m;
}

std::vector<VertexSet> node_contents(const TreeModel& m) {
  std::vector<std::vector<VertexId>> members(static_cast<std::size_t>(m.host_size));
  for (std::size_t u = 0; u < m.subtrees.size(); ++u) {
    for (int x : m.subtrees[u]) members[static_cast<std::size_t>(x)].push_back(static_cast<VertexId>(u));
  }
  std::vector<VertexSet> out;
  out.reserve(members.size());
  for (auto& v : members) out.emplace_back(std::move(v));
  return out;
}

bool is_minimal_model(const Graph& g, const TreeModel& m) {
  auto contents = node_contents(m);
  std::sort(contents.begin(), contents.end());
  return contents == clique_graph(g).clique_sets();
}

TreeModel contract_to_minimal(const Graph& g, TreeModel m) {
  if (auto why = model_violation(g, m)) throw PreconditionError("not a tree model: " + *why);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : m.host_edges) {
      auto candidate = contract_edge(m, a, b);
      if (same_intersection_graph(g, candidate.subtrees)) {
        m = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return m;
}

LeafReport leaf_report(const TreeModel& m) {
  LeafReport r;
  r.host_leaves = tree_leaf_count(m.host_size, m.host_edges);
  r.per_vertex_leaves.reserve(m.subtrees.size());
  for (const auto& nodes : m.subtrees) {
    std::map<int, int> deg;
    for (const auto& [a, b] : m.host_edges) {
      if (std::binary_search(nodes.begin(), nodes.end(), a) &&
          std::binary_search(nodes.begin(), nodes.end(), b)) {
        ++deg[a];
        ++deg[b];
      }
    }
    const int leaves = static_cast<int>(
        std::count_if(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 1; }));
    r.per_vertex_leaves.push_back(leaves);
    r.max_vertex_leaves = std::max(r.max_vertex_leaves, leaves);
  }
  return r;
}

std::vector<int> subtree_leaf_counts(const CliqueTree& t, int vertex_count) {
  const auto k = static_cast<std::size_t>(t.size());
  std::vector<int> deg(static_cast<std::size_t>(vertex_count) * k, 0);
  for (const auto& [a, b] : t.edges()) {
    for (VertexId u : set_intersection(t.node(a), t.node(b))) {
      ++deg[static_cast<std::size_t>(u) * k + static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(u) * k + static_cast<std::size_t>(b)];
    }
  }
  std::vector<int> leaves(static_cast<std::size_t>(vertex_count), 0);
  for (std::size_t u = 0; u < leaves.size(); ++u) {
    for (std::size_t c = 0; c < k; ++c) leaves[u] += deg[u * k + c] == 1 ? 1 : 0;
  }
  return leaves;
}

BranchingSets branching_sets(int node_count, std::span<const TreeEdge> edges) {
  if (node_count < 1) throw PreconditionError("tree must have at least one node");
  const auto deg = tree_degrees(node_count, edges);
  BranchingSets out;
  out.leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  for (int v = 0; v < node_count; ++v) {
    if (deg[static_cast<std::size_t>(v)] >= 3) {
      out.high_nodes.push_back(v);
      out.excess += deg[static_cast<std::size_t>(v)] - 2;
    }
  }
  for (const auto& e : edges) {
    if (deg[static_cast<std::size_t>(e.first)] >= 3 || deg[static_cast<std::size_t>(e.second)] >= 3) {
      out.incident_edges.push_back(e);
    }
  }
  std::sort(out.incident_edges.begin(), out.incident_edges.end());
  if (node_count >= 2) {
    const int high = static_cast<int>(out.high_nodes.size());
    if (high > out.excess || out.excess != out.leaves - 2) {
      throw InvariantViolation("branching-node bound violated");
    }
  }
  return out;
}

}  // namespace leafage
