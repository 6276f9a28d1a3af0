#include "leafage/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "leafage/errors.hpp"
#include "union_find.hpp"

namespace leafage {

namespace {

// Shortest path x -> y avoiding `blocked`; neighbours expanded in id order so
// the result is deterministic. Empty when y is unreachable.
std::vector<VertexId> shortest_path_avoiding(const Graph& g, VertexId x, VertexId y,
                                             const std::vector<char>& blocked) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<VertexId> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{x};
  seen[static_cast<std::size_t>(x)] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    if (u == y) break;
    for (VertexId w : g.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (seen[wi] || blocked[wi]) continue;
      seen[wi] = 1;
      parent[wi] = u;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(y)]) return {};
  std::vector<VertexId> path;
  for (VertexId u = y; u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

// Any chordless cycle through v with cycle-neighbours x, y is v followed by an
// induced x..y path avoiding the rest of N[v]. Scanning every (v, x, y) finds
// one whenever the graph is not chordal.
std::vector<VertexId> find_chordless_cycle(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const VertexId x = nv[i];
        const VertexId y = nv[j];
        if (g.adjacent(x, y)) continue;
        std::vector<char> blocked(n, 0);
        blocked[static_cast<std::size_t>(v)] = 1;
        for (VertexId w : nv) {
          if (w != x && w != y) blocked[static_cast<std::size_t>(w)] = 1;
        }
        auto path = shortest_path_avoiding(g, x, y, blocked);
        if (path.empty()) continue;
        std::vector<VertexId> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult check_chordal(const Graph& g) {
  const int n = g.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> weight(un, 0);
  std::vector<char> numbered(un, 0);
  std::vector<VertexId> visit;
  visit.reserve(un);
  for (int step = 0; step < n; ++step) {
    VertexId best = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (numbered[static_cast<std::size_t>(v)]) continue;
      if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    numbered[static_cast<std::size_t>(best)] = 1;
    visit.push_back(best);
    for (VertexId w : g.neighbors(best)) {
      if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
  }
  PerfectEliminationOrder peo{std::vector<VertexId>(visit.rbegin(), visit.rend())};
  ChordalityResult result;
  if (is_perfect_elimination_order(g, peo)) {
    result.peo = std::move(peo);
  } else {
    result.cycle = find_chordless_cycle(g);
    if (result.cycle.empty()) {
      throw InvariantViolation("maximum-cardinality search failed but no chordless cycle exists");
    }
  }
  return result;
}

bool is_perfect_elimination_order(const Graph& g, const PerfectEliminationOrder& peo) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (peo.order.size() != n) return false;
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = peo.order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] != -1) {
      return false;
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> later;
    for (VertexId w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    }
    if (!g.is_clique(VertexSet(std::move(later)))) return false;
  }
  return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  if (VertexSet(cycle).size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::vector<MaximalClique> maximal_cliques(const Graph& g, const PerfectEliminationOrder& peo) {
  if (!is_perfect_elimination_order(g, peo)) {
    throw PreconditionError("not a perfect elimination order");
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo.order[i])] = static_cast<int>(i);

  std::vector<VertexSet> candidates;
  candidates.reserve(n);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> members{v};
    for (VertexId w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) members.push_back(w);
    }
    candidates.emplace_back(std::move(members));
  }
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = i != j && candidates[i].size() < candidates[j].size() &&
                  candidates[i].is_subset_of(candidates[j]);
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<MaximalClique> out;
  out.reserve(maximal.size());
  for (auto& members : maximal) {
    out.push_back(MaximalClique{static_cast<int>(out.size()), std::move(members)});
  }
  return out;
}

std::vector<MaximalClique> maximal_cliques(const Graph& g) {
  auto check = check_chordal(g);
  if (!check.chordal()) throw PreconditionError("graph is not chordal");
  return maximal_cliques(g, *check.peo);
}

CliqueGraph::CliqueGraph(std::vector<MaximalClique> cliques, int vertex_count)
    : cliques_(std::move(cliques)), vertex_count_(vertex_count) {
  const int k = size();
  for (int i = 0; i < k; ++i) {
    if (cliques_[static_cast<std::size_t>(i)].id != i) {
      throw PreconditionError("clique ids must be 0..k-1 in order");
    }
  }
  intersections_.resize(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a) {
    intersections_[static_cast<std::size_t>(a * k + a)] = clique(a);
    for (int b = a + 1; b < k; ++b) {
      auto s = set_intersection(clique(a), clique(b));
      if (!s.empty()) edges_.push_back(CliqueEdge{a, b, static_cast<int>(s.size())});
      intersections_[static_cast<std::size_t>(a * k + b)] = s;
      intersections_[static_cast<std::size_t>(b * k + a)] = std::move(s);
    }
  }
  auto order = edges_;
  std::stable_sort(order.begin(), order.end(),
                   [](const CliqueEdge& x, const CliqueEdge& y) { return x.weight > y.weight; });
  detail::UnionFind uf(k);
  for (const auto& e : order) {
    if (uf.unite(e.a, e.b)) max_weight_ += e.weight;
  }
}

std::vector<VertexSet> CliqueGraph::clique_sets() const {
  std::vector<VertexSet> out;
  out.reserve(cliques_.size());
  for (const auto& c : cliques_) out.push_back(c.members);
  return out;
}

int CliqueGraph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const CliqueEdge& e, const std::pair<int, int>& key) {
                               return std::pair{e.a, e.b} < key;
                             });
  if (it == edges_.end() || it->a != a || it->b != b) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool CliqueGraph::connected() const {
  detail::UnionFind uf(size());
  int components = size();
  for (const auto& e : edges_) {
    if (uf.unite(e.a, e.b)) --components;
  }
  return components <= 1;
}

int CliqueGraph::find_clique(const VertexSet& s) const {
  auto it = std::lower_bound(cliques_.begin(), cliques_.end(), s,
                             [](const MaximalClique& c, const VertexSet& key) { return c.members < key; });
  if (it == cliques_.end() || it->members != s) return -1;
  return it->id;
}

CliqueGraph clique_graph(const Graph& g, std::vector<MaximalClique> cliques) {
  return CliqueGraph(std::move(cliques), g.vertex_count());
}

CliqueGraph clique_graph(const Graph& g) { return clique_graph(g, maximal_cliques(g)); }

}  // namespace leafage
