#include "leafage/vertex_leafage.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "leafage/errors.hpp"
#include "union_find.hpp"

namespace leafage {

namespace {

std::vector<int> f_degrees(int k, const BranchEdgeSet& f) {
  std::vector<int> deg(static_cast<std::size_t>(k), 0);
  for (const auto& [a, b] : f.edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

// Largest weight of a spanning tree containing `forced` and avoiding `banned`
// equals the clique graph's maximum, i.e. some clique tree does both.
bool extends_to_clique_tree(const CliqueGraph& cg, const std::vector<int>& forced, const std::vector<char>& banned) {
  const int k = cg.size();
  detail::UnionFind uf(k);
  int weight = 0;
  int used = 0;
  for (int idx : forced) {
    const auto& e = cg.edges()[static_cast<std::size_t>(idx)];
    if (!uf.unite(e.a, e.b)) return false;
    weight += e.weight;
    ++used;
  }
  std::vector<int> order(cg.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return cg.edges()[static_cast<std::size_t>(x)].weight > cg.edges()[static_cast<std::size_t>(y)].weight;
  });
  for (int idx : order) {
    if (banned[static_cast<std::size_t>(idx)]) continue;
    const auto& e = cg.edges()[static_cast<std::size_t>(idx)];
    if (uf.unite(e.a, e.b)) {
      weight += e.weight;
      ++used;
    }
  }
  return used == k - 1 && weight == cg.max_spanning_weight();
}

class CandidateSearch {
 public:
  CandidateSearch(const CliqueGraph& cg, int leafage, int budget)
      : cg_(cg), k_(cg.size()), cap_(leafage - 2), budget_(budget), uf_(cg.size()) {}

  std::vector<BranchEdgeSet> run() {
    out_.emplace_back();
    if (cap_ < 1 || budget_ < 3) return out_;
    for (int s = 1; s <= std::min(cap_, k_); ++s) {
      std::vector<int> hubs(static_cast<std::size_t>(s));
      std::iota(hubs.begin(), hubs.end(), 0);
      while (true) {
        search_hubs(hubs);
        int i = s - 1;
        while (i >= 0 && hubs[static_cast<std::size_t>(i)] == k_ - s + i) --i;
        if (i < 0) break;
        ++hubs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j) hubs[static_cast<std::size_t>(j)] = hubs[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    std::sort(out_.begin(), out_.end(), canonical_less);
    return out_;
  }

 private:
  void search_hubs(const std::vector<int>& hubs) {
    is_hub_.assign(static_cast<std::size_t>(k_), 0);
    for (int h : hubs) is_hub_[static_cast<std::size_t>(h)] = 1;
    local_.clear();
    for (std::size_t i = 0; i < cg_.edges().size(); ++i) {
      const auto& e = cg_.edges()[i];
      if (is_hub_[static_cast<std::size_t>(e.a)] || is_hub_[static_cast<std::size_t>(e.b)]) {
        local_.push_back(static_cast<int>(i));
      }
    }
    // remaining_[i][c]: edges of local_[i..] touching hub c.
    remaining_.assign(local_.size() + 1, std::vector<int>(static_cast<std::size_t>(k_), 0));
    for (std::size_t i = local_.size(); i-- > 0;) {
      remaining_[i] = remaining_[i + 1];
      const auto& e = cg_.edges()[static_cast<std::size_t>(local_[i])];
      ++remaining_[i][static_cast<std::size_t>(e.a)];
      ++remaining_[i][static_cast<std::size_t>(e.b)];
    }
    hubs_ = hubs;
    max_hub_degree_ = 2 + cap_ - (static_cast<int>(hubs.size()) - 1);
    deg_.assign(static_cast<std::size_t>(k_), 0);
    chosen_.clear();
    recurse(0);
  }

  void recurse(std::size_t i) {
    for (int h : hubs_) {
      if (deg_[static_cast<std::size_t>(h)] + remaining_[i][static_cast<std::size_t>(h)] < 3) return;
    }
    if (i == local_.size()) {
      accept();
      return;
    }
    const int idx = local_[i];
    const auto& e = cg_.edges()[static_cast<std::size_t>(idx)];
    if (static_cast<int>(chosen_.size()) < budget_ && room(e.a) && room(e.b) && uf_.unite(e.a, e.b)) {
      ++deg_[static_cast<std::size_t>(e.a)];
      ++deg_[static_cast<std::size_t>(e.b)];
      chosen_.push_back(idx);
      recurse(i + 1);
      chosen_.pop_back();
      --deg_[static_cast<std::size_t>(e.a)];
      --deg_[static_cast<std::size_t>(e.b)];
      uf_.undo();
    }
    recurse(i + 1);
  }

  bool room(int c) const {
    const int limit = is_hub_[static_cast<std::size_t>(c)] ? max_hub_degree_ : 2;
    return deg_[static_cast<std::size_t>(c)] < limit;
  }

  void accept() {
    int excess = 0;
    for (int h : hubs_) excess += deg_[static_cast<std::size_t>(h)] - 2;
    if (excess > cap_) return;
    std::vector<char> banned(cg_.edges().size(), 0);
    for (int idx : local_) banned[static_cast<std::size_t>(idx)] = 1;
    for (int idx : chosen_) banned[static_cast<std::size_t>(idx)] = 0;
    if (!extends_to_clique_tree(cg_, chosen_, banned)) return;
    std::vector<TreeEdge> edges;
    for (int idx : chosen_) {
      const auto& e = cg_.edges()[static_cast<std::size_t>(idx)];
      edges.emplace_back(e.a, e.b);
    }
    out_.emplace_back(std::move(edges));
  }

  const CliqueGraph& cg_;
  int k_;
  int cap_;
  int budget_;
  detail::UndoUnionFind uf_;
  std::vector<char> is_hub_;
  std::vector<int> hubs_;
  std::vector<int> local_;
  std::vector<std::vector<int>> remaining_;
  std::vector<int> deg_;
  std::vector<int> chosen_;
  int max_hub_degree_ = 0;
  std::vector<BranchEdgeSet> out_;
};

VlCertificate make_certificate(const Graph& g, CliqueTree t, int leafage, BranchEdgeSet f) {
  VlCertificate c;
  c.per_vertex = subtree_leaf_counts(t, g.vertex_count());
  c.value = c.per_vertex.empty() ? 0 : *std::max_element(c.per_vertex.begin(), c.per_vertex.end());
  c.leafage = leafage;
  c.tree = std::move(t);
  c.branch_edge_set = std::move(f);
  return c;
}

CliqueGraph checked_clique_graph(const Graph& g) {
  auto cg = clique_graph(g);
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  return cg;
}

}  // namespace

BranchEdgeSet::BranchEdgeSet(std::vector<TreeEdge> e) : edges(std::move(e)) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool canonical_less(const BranchEdgeSet& a, const BranchEdgeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edges < b.edges;
}

BranchEdgeSet branch_edges(const CliqueTree& t) { return BranchEdgeSet(branching_sets(t).incident_edges); }

std::string branch_vertex_name(int a, int b) { return "edge:" + std::to_string(a) + "-" + std::to_string(b); }

Graph augmented_graph(const Graph& g, const CliqueGraph& cg, const BranchEdgeSet& f) {
  auto names = g.names();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(g.name(u), g.name(v));
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const auto [a, b] = f.edges[i];
    if (a < 0 || b >= cg.size() || !cg.has_edge(a, b)) {
      throw PreconditionError("branch edge " + std::to_string(a) + "-" + std::to_string(b) + " is not a clique-graph edge");
    }
    const auto name = branch_vertex_name(a, b);
    if (g.find(name)) throw PreconditionError("vertex name " + name + " is reserved");
    names.push_back(name);
    for (VertexId u : set_union(cg.clique(a), cg.clique(b))) edges.emplace_back(g.name(u), name);
    for (std::size_t j = 0; j < i; ++j) {
      const auto [c, d] = f.edges[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(branch_vertex_name(c, d), name);
    }
  }
  return Graph(std::move(names), edges);
}

std::optional<CliqueTree> clique_tree_with_branching(const Graph& g, const CliqueGraph& cg, const BranchEdgeSet& f,
                                                     const LeafageOptions& options) {
  for (const auto& [a, b] : f.edges) {
    if (a < 0 || b >= cg.size()) throw PreconditionError("branch edge refers to an unknown clique");
    if (!cg.has_edge(a, b)) return std::nullopt;
  }
  if (static_cast<int>(f.size()) >= cg.size()) return std::nullopt;
  const auto gp = augmented_graph(g, cg, f);
  if (!check_chordal(gp).chordal()) return std::nullopt;

  const auto cgp = clique_graph(gp);
  const auto tp = minimize_leafage(cgp, build_clique_tree(cgp), options).tree;
  if (tp.size() != cg.size()) return std::nullopt;

  std::vector<int> to_g(static_cast<std::size_t>(gp.vertex_count()), -1);
  for (VertexId v = 0; v < gp.vertex_count(); ++v) {
    if (auto id = g.find(gp.name(v))) to_g[static_cast<std::size_t>(v)] = *id;
  }
  std::vector<int> node_to_clique;
  std::vector<char> taken(static_cast<std::size_t>(cg.size()), 0);
  for (const auto& node : tp.nodes()) {
    std::vector<VertexId> members;
    for (VertexId v : node) {
      if (to_g[static_cast<std::size_t>(v)] >= 0) members.push_back(to_g[static_cast<std::size_t>(v)]);
    }
    const int c = cg.find_clique(VertexSet(std::move(members)));
    if (c < 0 || taken[static_cast<std::size_t>(c)]) return std::nullopt;
    taken[static_cast<std::size_t>(c)] = 1;
    node_to_clique.push_back(c);
  }
  std::vector<TreeEdge> edges;
  for (const auto& [x, y] : tp.edges()) {
    edges.emplace_back(node_to_clique[static_cast<std::size_t>(x)], node_to_clique[static_cast<std::size_t>(y)]);
  }
  CliqueTree t(cg.clique_sets(), std::move(edges));
  if (!verify_clique_tree(cg, t)) return std::nullopt;
  if (branch_edges(t) != f) return std::nullopt;
  return t;
}

std::optional<CliqueTree> clique_tree_with_branching(const Graph& g, const BranchEdgeSet& f,
                                                     const LeafageOptions& options) {
  return clique_tree_with_branching(g, checked_clique_graph(g), f, options);
}

int branch_budget(int ell, BudgetMode mode) {
  if (ell < 2) return 0;
  return mode == BudgetMode::tight ? ell - 2 : 3 * (ell - 2);
}

int predicted_vertex_leafage(const CliqueGraph& cg, const BranchEdgeSet& f) {
  const int k = cg.size();
  const auto deg = f_degrees(k, f);
  int best = 0;
  for (VertexId u = 0; u < cg.vertex_count(); ++u) {
    int holders = 0;
    for (int c = 0; c < k; ++c) holders += cg.clique(c).contains(u) ? 1 : 0;
    if (holders < 2) continue;
    int leaves = 2;
    for (int h = 0; h < k; ++h) {
      if (deg[static_cast<std::size_t>(h)] < 3 || !cg.clique(h).contains(u)) continue;
      int toward = 0;
      for (const auto& [a, b] : f.edges) {
        if (a == h && cg.clique(b).contains(u)) ++toward;
        if (b == h && cg.clique(a).contains(u)) ++toward;
      }
      leaves += std::max(0, toward - 2);
    }
    best = std::max(best, leaves);
  }
  return best;
}

std::vector<BranchEdgeSet> branch_candidates(const CliqueGraph& cg, int leafage, int budget) {
  return CandidateSearch(cg, leafage, budget).run();
}

std::optional<VlCertificate> vertex_leafage_bounded(const Graph& g, std::optional<int> ell,
                                                    const VertexLeafageOptions& options) {
  const auto cg = checked_clique_graph(g);
  const LeafageOptions inner{Execution::serial, nullptr};
  const int l = minimize_leafage(cg, build_clique_tree(cg), LeafageOptions{options.execution, nullptr}).tree.leaf_count();
  if (ell && l > *ell) return std::nullopt;

  const auto candidates = branch_candidates(cg, l, branch_budget(ell ? *ell : l, options.budget));
  std::vector<int> predicted;
  predicted.reserve(candidates.size());
  for (const auto& f : candidates) predicted.push_back(predicted_vertex_leafage(cg, f));
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return predicted[x] < predicted[y]; });

  auto accept = [&](std::size_t i, CliqueTree t) {
    auto cert = make_certificate(g, std::move(t), l, candidates[i]);
    if (cert.value != predicted[i]) throw InvariantViolation("branch edge set predicted a different vertex leafage");
    return cert;
  };

  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    while (hi < order.size() && predicted[order[hi]] == predicted[order[lo]]) ++hi;
    if (options.execution == Execution::serial) {
      for (std::size_t j = lo; j < hi; ++j) {
        if (auto t = clique_tree_with_branching(g, cg, candidates[order[j]], inner)) return accept(order[j], std::move(*t));
      }
    } else {
      // chunks of a few candidates per thread; the first hit in the earliest chunk wins
      const std::size_t chunk = 2 * static_cast<std::size_t>(std::max(1, max_threads()));
      for (std::size_t from = lo; from < hi; from += chunk) {
        const std::size_t to = std::min(hi, from + chunk);
        std::vector<std::optional<CliqueTree>> found(to - from);
        std::exception_ptr failure;
        const auto count = static_cast<long>(to - from);
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < count; ++j) {
          try {
            found[static_cast<std::size_t>(j)] =
                clique_tree_with_branching(g, cg, candidates[order[from + static_cast<std::size_t>(j)]], inner);
          } catch (...) {
#pragma omp critical(leafage_branch_failure)
            if (!failure) failure = std::current_exception();
          }
        }
        if (failure) std::rethrow_exception(failure);
        for (std::size_t j = 0; j < found.size(); ++j) {
          if (found[j]) return accept(order[from + j], std::move(*found[j]));
        }
      }
    }
    lo = hi;
  }
  return std::nullopt;
}

std::optional<VlCertificate> vertex_leafage_exhaustive(const Graph& g, std::optional<int> ell, BudgetMode mode) {
  const auto cg = checked_clique_graph(g);
  const LeafageOptions inner{Execution::serial, nullptr};
  const int l = minimize_leafage(cg, build_clique_tree(cg), inner).tree.leaf_count();
  if (ell && l > *ell) return std::nullopt;
  const int budget = std::min(branch_budget(ell ? *ell : l, mode), cg.size() - 1);

  std::optional<VlCertificate> best;
  const auto m = static_cast<int>(cg.edges().size());
  for (int size = 0; size <= std::min(budget, m); ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<TreeEdge> edges;
      for (int idx : pick) edges.emplace_back(cg.edges()[static_cast<std::size_t>(idx)].a, cg.edges()[static_cast<std::size_t>(idx)].b);
      BranchEdgeSet f(std::move(edges));
      if (auto t = clique_tree_with_branching(g, cg, f, inner)) {
        auto cert = make_certificate(g, std::move(*t), l, std::move(f));
        if (!best || cert.value < best->value) best = std::move(cert);
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

SimultaneousOptimum simultaneous_optimum(const Graph& g, const VertexLeafageOptions& options) {
  auto cert = vertex_leafage_bounded(g, std::nullopt, options);
  if (!cert) throw InvariantViolation("no branch edge set within budget realizes a clique tree");
  const auto cg = clique_graph(g);
  auto tree = minimize_leafage(cg, cert->tree, LeafageOptions{options.execution, nullptr}).tree;
  auto model = model_from_clique_tree(g, tree);
  auto report = leaf_report(model);
  if (report.host_leaves != cert->leafage || report.max_vertex_leaves != cert->value) {
    throw InvariantViolation("model is not optimal for leafage and vertex leafage at once");
  }
  return SimultaneousOptimum{std::move(tree), std::move(model), std::move(report), std::move(*cert)};
}

}  // namespace leafage
