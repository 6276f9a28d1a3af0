#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "leafage/graph.hpp"
#include "leafage/oracle.hpp"

namespace corpus {

/// Seeded random chordal graphs: n in 9..10, density in 0..0.5.
inline leafage::Graph random_graph(std::uint64_t seed) {
  const int n = 9 + static_cast<int>(seed % 2);
  const double density = 0.1 * static_cast<double>(seed % 6);
  return leafage::random_chordal(n, density, seed);
}

inline std::vector<leafage::Graph> random_graphs(std::uint64_t first, std::uint64_t count) {
  std::vector<leafage::Graph> out;
  for (std::uint64_t s = first; s < first + count; ++s) out.push_back(random_graph(s));
  return out;
}

inline leafage::Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> names;
  for (const auto& [a, b] : edges) {
    names.push_back(a);
    names.push_back(b);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return leafage::Graph(names, edges);
}

inline leafage::Graph complete(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
  }
  return leafage::Graph(names, edges);
}

/// Path of n vertices: an interval graph with n - 1 maximal cliques.
inline leafage::Graph path(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(i + 1)]);
  return leafage::Graph(names, edges);
}

/// Centre triangle x,y,z with a pendant path of length two at each corner;
/// needs three host leaves.
inline leafage::Graph spider3() {
  return from_edges({{"x", "y"}, {"y", "z"}, {"x", "z"}, {"x", "x1"}, {"x1", "x2"},
                     {"y", "y1"}, {"y1", "y2"}, {"z", "z1"}, {"z1", "z2"}});
}

/// Centre K4 with a pendant path of length two at each corner; leafage 4.
inline leafage::Graph spider4() {
  return from_edges({{"w", "x"}, {"w", "y"}, {"w", "z"}, {"x", "y"}, {"x", "z"}, {"y", "z"},
                     {"w", "w1"}, {"w1", "w2"}, {"x", "x1"}, {"x1", "x2"},
                     {"y", "y1"}, {"y1", "y2"}, {"z", "z1"}, {"z1", "z2"}});
}

/// Two overlapping triangles with a pendant path of length two at each corner.
inline leafage::Graph double_fork() {
  return from_edges({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
                     {"a", "a1"}, {"a1", "a2"}, {"b", "b1"}, {"b1", "b2"},
                     {"c", "c1"}, {"c1", "c2"}, {"d", "d1"}, {"d1", "d2"}});
}

/// Split graph whose only clique tree is a star with `arms` leaves, all
/// containing u: leafage = vertex leafage = arms.
inline leafage::Graph forced_star(int arms) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> hub{"u", "z"};
  for (int i = 1; i <= arms; ++i) hub.push_back("y" + std::to_string(i));
  for (std::size_t i = 0; i < hub.size(); ++i) {
    for (std::size_t j = i + 1; j < hub.size(); ++j) edges.emplace_back(hub[i], hub[j]);
  }
  for (int i = 1; i <= arms; ++i) {
    const auto x = "x" + std::to_string(i);
    edges.emplace_back("u", x);
    edges.emplace_back("y" + std::to_string(i), x);
  }
  return from_edges(edges);
}

}  // namespace corpus
