#include "leafage/realizability.hpp"

#include <algorithm>
#include <map>

#include "leafage/errors.hpp"
#include "union_find.hpp"

namespace leafage {

namespace {

class PairingSearch {
 public:
  PairingSearch(const CliqueGraph& cg, std::vector<int> remaining, std::vector<int> value_of_pair,
                int value_count)
      : cg_(cg),
        k_(cg.size()),
        values_(value_count),
        value_of_pair_(std::move(value_of_pair)),
        rem_(std::move(remaining)),
        last_partner_(static_cast<std::size_t>(k_ * values_), -1),
        parent_(static_cast<std::size_t>(k_)) {
    for (int i = 0; i < k_; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  std::optional<CliqueTree> run() {
    if (solve(0)) return found_;
    return std::nullopt;
  }

 private:
  int& rem(int c, int v) { return rem_[static_cast<std::size_t>(c * values_ + v)]; }
  int value(int a, int b) const { return value_of_pair_[static_cast<std::size_t>(a * k_ + b)]; }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  // Every outstanding token must still have enough admissible partners.
  bool feasible(int from) {
    for (int d = from; d < k_; ++d) {
      for (int v = 0; v < values_; ++v) {
        const int need = rem(d, v);
        if (need == 0) continue;
        const int root = find(d);
        int available = 0;
        for (int e = 0; e < k_ && available < need; ++e) {
          if (e != d && value(d, e) == v && rem(e, v) > 0 && find(e) != root) ++available;
        }
        if (available < need) return false;
      }
    }
    return true;
  }

  bool solve(int c) {
    while (c < k_) {
      bool pending = false;
      for (int v = 0; v < values_ && !pending; ++v) pending = rem(c, v) > 0;
      if (pending) break;
      ++c;
    }
    if (c == k_) {
      CliqueTree tree(cg_.clique_sets(), edges_);
      if (!check_path_containment(tree)) return false;
      found_ = std::move(tree);
      return true;
    }
    if (!feasible(c)) return false;

    int v = 0;
    while (rem(c, v) == 0) ++v;
    auto& last = last_partner_[static_cast<std::size_t>(c * values_ + v)];
    const int saved_last = last;
    const int root = find(c);
    for (int d = std::max(c + 1, saved_last + 1); d < k_; ++d) {
      if (value(c, d) != v || rem(d, v) == 0) continue;
      const int droot = find(d);
      if (droot == root) continue;

      --rem(c, v);
      --rem(d, v);
      const int lo = std::min(root, droot);
      const int hi = std::max(root, droot);
      parent_[static_cast<std::size_t>(hi)] = lo;
      edges_.emplace_back(c, d);
      last = d;

      if (solve(c)) return true;

      edges_.pop_back();
      parent_[static_cast<std::size_t>(hi)] = hi;
      ++rem(c, v);
      ++rem(d, v);
    }
    last = saved_last;
    return false;
  }

  const CliqueGraph& cg_;
  int k_;
  int values_;
  std::vector<int> value_of_pair_;
  std::vector<int> rem_;
  std::vector<int> last_partner_;
  std::vector<int> parent_;  // union-find without path compression, so unions undo exactly
  std::vector<TreeEdge> edges_;
  std::optional<CliqueTree> found_;
};

}  // namespace

std::optional<CliqueTree> BacktrackingRealizer::realize(const CliqueGraph& cg, const TokenAssignment& ta) const {
  const int k = cg.size();
  if (ta.clique_count() != k) throw PreconditionError("token assignment and clique graph differ in size");
  int weight_sum = 0;
  for (int c = 0; c < k; ++c) {
    for (const auto& s : ta.tokens(c)) {
      if (!s.is_subset_of(cg.clique(c))) throw PreconditionError("token is not a subset of its clique");
      weight_sum += static_cast<int>(s.size());
    }
  }
  if (k == 0) return std::nullopt;
  if (ta.total() != 2 * (k - 1)) return std::nullopt;
  if (k == 1) return CliqueTree(cg.clique_sets(), {});
  if (weight_sum != 2 * cg.max_spanning_weight()) return std::nullopt;

  // Intern the distinct nonempty pairwise intersections.
  std::map<VertexSet, int> value_ids;
  std::vector<int> value_of_pair(static_cast<std::size_t>(k * k), -1);
  for (const auto& e : cg.edges()) {
    auto [it, inserted] = value_ids.emplace(cg.intersection(e.a, e.b), static_cast<int>(value_ids.size()));
    value_of_pair[static_cast<std::size_t>(e.a * k + e.b)] = it->second;
    value_of_pair[static_cast<std::size_t>(e.b * k + e.a)] = it->second;
  }
  const int values = static_cast<int>(value_ids.size());
  std::vector<int> remaining(static_cast<std::size_t>(k * values), 0);
  for (int c = 0; c < k; ++c) {
    for (const auto& s : ta.tokens(c)) {
      auto it = value_ids.find(s);
      if (it == value_ids.end()) return std::nullopt;
      ++remaining[static_cast<std::size_t>(c * values + it->second)];
    }
  }
  return PairingSearch(cg, std::move(remaining), std::move(value_of_pair), values).run();
}

const RealizabilityOracle& default_realizer() {
  static const BacktrackingRealizer realizer;
  return realizer;
}

std::optional<CliqueTree> is_realizable(const CliqueGraph& cg, const TokenAssignment& ta) {
  return default_realizer().realize(cg, ta);
}

}  // namespace leafage
