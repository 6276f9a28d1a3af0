#include "leafage/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "leafage/errors.hpp"
#include "leafage/tree_model.hpp"
#include "union_find.hpp"

namespace leafage {

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const CliqueGraph& cg, const std::function<void(const CliqueTree&)>& visit, std::size_t limit)
      : cg_(cg), visit_(visit), limit_(limit), uf_(cg.size()), nodes_(cg.clique_sets()) {
    edges_ = cg.edges();
    std::stable_sort(edges_.begin(), edges_.end(),
                     [](const CliqueEdge& x, const CliqueEdge& y) { return x.weight > y.weight; });
    class_end_.resize(edges_.size());
    for (std::size_t i = edges_.size(); i-- > 0;) {
      class_end_[i] = (i + 1 < edges_.size() && edges_[i + 1].weight == edges_[i].weight) ? class_end_[i + 1] : i + 1;
    }
  }

  std::size_t run() {
    if (cg_.size() == 0) return 0;
    if (!cg_.connected()) throw PreconditionError("clique graph is not connected");
    recurse(0);
    return count_;
  }

 private:
  // True if a and b can still be joined using the undecided edges of the same
  // weight class after index i (included edges are already merged in uf_).
  bool joinable_later(std::size_t i, int a, int b) const {
    a = uf_.find(a);
    b = uf_.find(b);
    if (a == b) return true;
    std::vector<int> stack{a};
    std::set<int> seen{a};
    while (!stack.empty()) {
      const int r = stack.back();
      stack.pop_back();
      for (std::size_t j = i + 1; j < class_end_[i]; ++j) {
        const int x = uf_.find(edges_[j].a);
        const int y = uf_.find(edges_[j].b);
        int other = -1;
        if (x == r) other = y;
        else if (y == r) other = x;
        if (other < 0 || seen.contains(other)) continue;
        if (other == b) return true;
        seen.insert(other);
        stack.push_back(other);
      }
    }
    return false;
  }

  void emit() {
    if (count_ == limit_) throw OracleLimitExceeded(limit_);
    CliqueTree t(nodes_, chosen_);
    if (!check_path_containment(t)) throw InvariantViolation("maximum-weight spanning tree is not a clique tree");
    ++count_;
    visit_(t);
  }

  void recurse(std::size_t i) {
    if (static_cast<int>(chosen_.size()) == cg_.size() - 1) {
      // Remaining edges all close cycles; skipping them is forced.
      emit();
      return;
    }
    if (i == edges_.size()) return;
    const auto& e = edges_[i];
    if (uf_.unite(e.a, e.b)) {
      chosen_.emplace_back(e.a, e.b);
      recurse(i + 1);
      chosen_.pop_back();
      uf_.undo();
      if (joinable_later(i, e.a, e.b)) recurse(i + 1);
    } else {
      recurse(i + 1);
    }
  }

  const CliqueGraph& cg_;
  const std::function<void(const CliqueTree&)>& visit_;
  std::size_t limit_;
  detail::UndoUnionFind uf_;
  std::vector<VertexSet> nodes_;
  std::vector<CliqueEdge> edges_;
  std::vector<std::size_t> class_end_;
  std::vector<TreeEdge> chosen_;
  std::size_t count_ = 0;
};

// Uniform draw in [0, bound) by rejection, independent of the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

std::size_t enumerate_clique_trees(const CliqueGraph& cg, const std::function<void(const CliqueTree&)>& visit,
                                   std::size_t limit) {
  return TreeEnumerator(cg, visit, limit).run();
}

std::size_t enumerate_clique_trees(const Graph& g, const std::function<void(const CliqueTree&)>& visit,
                                   std::size_t limit) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  return enumerate_clique_trees(clique_graph(g), visit, limit);
}

std::vector<CliqueTree> all_clique_trees(const Graph& g, std::size_t limit) {
  std::vector<CliqueTree> out;
  enumerate_clique_trees(g, [&](const CliqueTree& t) { out.push_back(t); }, limit);
  return out;
}

OracleResult oracle_optima(const Graph& g, std::size_t limit) {
  const int n = g.vertex_count();
  OracleResult r;
  int best_leaves = -1;
  int best_vl = -1;
  std::pair<int, int> best_joint{-1, -1};
  r.tree_count = enumerate_clique_trees(
      g,
      [&](const CliqueTree& t) {
        const int leaves = t.leaf_count();
        const auto per_vertex = subtree_leaf_counts(t, n);
        const int vl = per_vertex.empty() ? 0 : *std::max_element(per_vertex.begin(), per_vertex.end());
        if (best_leaves < 0 || leaves < best_leaves) {
          best_leaves = leaves;
          r.leafage_witness = t;
        }
        if (best_vl < 0 || vl < best_vl) {
          best_vl = vl;
          r.vertex_leafage_witness = t;
        }
        if (best_joint.first < 0 || std::pair{leaves, vl} < best_joint) {
          best_joint = {leaves, vl};
          r.joint_witness = t;
        }
      },
      limit);
  r.leafage = best_leaves;
  r.vertex_leafage = best_vl;
  if (best_joint != std::pair{best_leaves, best_vl}) {
    throw InvariantViolation("no clique tree is optimal for leafage and vertex leafage at once");
  }
  return r;
}

Graph random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_chordal needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must be in [0, 1]");
  std::mt19937_64 rng(seed);
  const auto nv = static_cast<std::size_t>(n);
  const std::size_t h = 2 * nv;

  std::vector<std::vector<int>> host(h);
  for (std::size_t i = 1; i < h; ++i) {
    const auto j = static_cast<int>(draw(rng, i));
    host[i].push_back(j);
    host[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
  }

  std::vector<std::vector<char>> member(nv, std::vector<char>(h, 0));
  std::vector<char> covered(h, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    const auto start = static_cast<int>(draw(rng, h));
    auto& mine = member[u];
    mine[static_cast<std::size_t>(start)] = 1;
    if (u > 0 && !covered[static_cast<std::size_t>(start)]) {
      // Walk back along the host path to the nearest covered node.
      std::vector<int> parent(h, -1);
      std::vector<int> queue{start};
      parent[static_cast<std::size_t>(start)] = start;
      int hit = -1;
      for (std::size_t q = 0; q < queue.size() && hit < 0; ++q) {
        for (int y : host[static_cast<std::size_t>(queue[q])]) {
          if (parent[static_cast<std::size_t>(y)] >= 0) continue;
          parent[static_cast<std::size_t>(y)] = queue[q];
          if (covered[static_cast<std::size_t>(y)]) {
            hit = y;
            break;
          }
          queue.push_back(y);
        }
      }
      for (int x = hit; x != start; x = parent[static_cast<std::size_t>(x)]) mine[static_cast<std::size_t>(x)] = 1;
    }
    auto size = static_cast<std::size_t>(std::count(mine.begin(), mine.end(), 1));
    while (size < h && coin(rng, density)) {
      std::vector<int> boundary;
      for (std::size_t x = 0; x < h; ++x) {
        if (mine[x]) continue;
        for (int y : host[x]) {
          if (mine[static_cast<std::size_t>(y)]) {
            boundary.push_back(static_cast<int>(x));
            break;
          }
        }
      }
      mine[static_cast<std::size_t>(boundary[draw(rng, boundary.size())])] = 1;
      ++size;
    }
    for (std::size_t x = 0; x < h; ++x) covered[x] = covered[x] || mine[x];
  }

  const auto width = std::to_string(n - 1).size();
  std::vector<std::string> names;
  for (int u = 0; u < n; ++u) {
    auto digits = std::to_string(u);
    names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      for (std::size_t x = 0; x < h; ++x) {
        if (member[u][x] && member[v][x]) {
          edges.emplace_back(names[u], names[v]);
          break;
        }
      }
    }
  }
  return Graph(std::move(names), edges);
}

}  // namespace leafage
