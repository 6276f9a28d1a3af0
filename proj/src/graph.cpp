#include "leafage/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "leafage/errors.hpp"

namespace leafage {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw PreconditionError("duplicate vertex name");
  }
  adjacency_.resize(names_.size());
  for (const auto& [a, b] : edges) {
    const VertexId u = id(a);
    const VertexId v = id(b);
    if (u == v) throw PreconditionError("self-loop at " + a);
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) {
      throw PreconditionError("duplicate edge " + a + " " + b);
    }
    nu.push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PreconditionError("unknown vertex " + std::string(name));
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (auto a = s.begin(); a != s.end(); ++a) {
    for (auto b = std::next(a); b != s.end(); ++b) {
      if (!adjacent(*a, *b)) return false;
    }
  }
  return true;
}

bool Graph::is_complete() const {
  const auto n = static_cast<std::size_t>(vertex_count());
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

VertexSet Graph::set_of(std::initializer_list<std::string_view> names) const {
  std::vector<VertexId> ids;
  ids.reserve(names.size());
  for (auto n : names) ids.push_back(id(n));
  return VertexSet(std::move(ids));
}

std::vector<std::string> Graph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(name(v));
  return out;
}

std::string Graph::label(const VertexSet& s) const {
  const bool short_names =
      std::all_of(s.begin(), s.end(), [&](VertexId v) { return name(v).size() == 1; });
  std::string out;
  for (VertexId v : s) {
    if (!short_names && !out.empty()) out += ',';
    out += name(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool is_valid_vertex_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

Graph parse_graph(std::string_view text) {
  std::set<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> seen_edges;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line_no, "expected `v <name>`");
      if (!is_valid_vertex_name(tok[1])) throw ParseError(line_no, "invalid vertex name '" + tok[1] + "'");
      vertices.insert(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "expected `e <name> <name>`");
      for (int i = 1; i <= 2; ++i) {
        if (!is_valid_vertex_name(tok[i])) {
          throw ParseError(line_no, "invalid vertex name '" + tok[i] + "'");
        }
      }
      if (tok[1] == tok[2]) throw ParseError(line_no, "self-loop at " + tok[1]);
      auto key = std::minmax(tok[1], tok[2]);
      if (!seen_edges.emplace(key.first, key.second).second) {
        throw ParseError(line_no, "duplicate edge " + tok[1] + " " + tok[2]);
      }
      vertices.insert(tok[1]);
      vertices.insert(tok[2]);
      edges.emplace_back(tok[1], tok[2]);
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  return Graph(std::vector<std::string>(vertices.begin(), vertices.end()), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "v " + g.name(v) + "\n";
  }
  for (const auto& [u, v] : g.edges()) out += "e " + g.name(u) + " " + g.name(v) + "\n";
  return out;
}

}  // namespace leafage
