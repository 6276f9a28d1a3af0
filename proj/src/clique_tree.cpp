#include "leafage/clique_tree.hpp"

#include <algorithm>

#include "leafage/errors.hpp"
#include "union_find.hpp"

namespace leafage {

bool is_spanning_tree(int node_count, std::span<const TreeEdge> edges) {
  if (node_count <= 0) return false;
  if (edges.size() != static_cast<std::size_t>(node_count - 1)) return false;
  detail::UnionFind uf(node_count);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count || a == b) return false;
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

std::vector<TreeEdge> canonical_tree_edges(int node_count, std::vector<TreeEdge> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (!is_spanning_tree(node_count, edges)) throw PreconditionError("edges do not form a spanning tree");
  return edges;
}

std::vector<int> tree_degrees(int node_count, std::span<const TreeEdge> edges) {
  std::vector<int> deg(static_cast<std::size_t>(node_count), 0);
  for (const auto& [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

int tree_leaf_count(int node_count, std::span<const TreeEdge> edges) {
  const auto deg = tree_degrees(node_count, edges);
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

std::vector<int> tree_path(int node_count, std::span<const TreeEdge> edges, int from, int to) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> parent(static_cast<std::size_t>(node_count), -2);
  std::vector<int> stack{from};
  parent[static_cast<std::size_t>(from)] = -1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == to) break;
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> path;
  if (parent[static_cast<std::size_t>(to)] == -2) return path;
  for (int u = to; u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

CliqueTree::CliqueTree(std::vector<VertexSet> nodes, std::vector<TreeEdge> edges)
    : nodes_(std::move(nodes)) {
  edges_ = canonical_tree_edges(size(), std::move(edges));
}

bool CliqueTree::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), TreeEdge{a, b});
}

int CliqueTree::degree(int id) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [id](const TreeEdge& e) {
    return e.first == id || e.second == id;
  }));
}

std::vector<int> CliqueTree::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueTree build_clique_tree(const CliqueGraph& cg) {
  if (cg.size() == 0) throw PreconditionError("empty clique graph");
  if (!cg.connected()) throw PreconditionError("clique graph is disconnected");
  auto order = cg.edges();
  std::stable_sort(order.begin(), order.end(),
                   [](const CliqueEdge& x, const CliqueEdge& y) { return x.weight > y.weight; });
  detail::UnionFind uf(cg.size());
  std::vector<TreeEdge> chosen;
  for (const auto& e : order) {
    if (uf.unite(e.a, e.b)) chosen.emplace_back(e.a, e.b);
  }
  CliqueTree tree(cg.clique_sets(), std::move(chosen));
  if (!verify_clique_tree(cg, tree)) {
    throw InvariantViolation("maximum-weight spanning tree failed path containment");
  }
  return tree;
}

CliqueTreeCheck check_path_containment(const CliqueTree& t) {
  const int k = t.size();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const auto common = set_intersection(t.node(a), t.node(b));
      if (common.empty()) continue;
      for (int via : tree_path(k, t.edges(), a, b)) {
        if (!common.is_subset_of(t.node(via))) return {false, PathViolation{a, b, via}};
      }
    }
  }
  return {true, std::nullopt};
}

CliqueTreeCheck verify_clique_tree(const CliqueGraph& cg, const CliqueTree& t) {
  if (t.nodes() != cg.clique_sets()) {
    throw PreconditionError("tree nodes are not the maximal cliques of the graph");
  }
  return check_path_containment(t);
}

CliqueTreeCheck verify_clique_tree(const Graph& g, const CliqueTree& t) {
  return verify_clique_tree(clique_graph(g), t);
}

}  // namespace leafage
