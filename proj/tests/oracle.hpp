// Brute-force reading enumeration, kept independent of the library's
// backtracking search: it walks every hole-to-label bijection and filters
// with its own admissibility test (Kahn's algorithm for cycles, breadth
// first search for reachability).

#ifndef SEMDB_TESTS_ORACLE_HPP
#define SEMDB_TESTS_ORACLE_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semdb/scope.hpp"

namespace semdb::testing {

inline std::multimap<std::string, std::string> oracle_edges(
    const ScopeGraph& graph, const Plugging& plugging) {
  std::multimap<std::string, std::string> edges;
  for (const auto& [parent, children] : graph.containment)
    for (const auto& child : children) edges.emplace(parent, child);
  for (const auto& [hole, label] : plugging.assignment)
    edges.emplace(hole, label);
  return edges;
}

inline bool oracle_admissible(const ScopeGraph& graph,
                              const Plugging& plugging) {
  auto edges = oracle_edges(graph, plugging);

  std::set<std::string> nodes;
  std::map<std::string, int> indegree;
  for (const auto& [from, to] : edges) {
    nodes.insert(from);
    nodes.insert(to);
    ++indegree[to];
  }
  nodes.insert(graph.root_label);

  // at most one parent each, root unparented
  for (const auto& [node, degree] : indegree)
    if (degree > 1) return false;
  if (indegree.count(graph.root_label)) return false;

  // no cycles: repeatedly strip nodes without incoming edges
  {
    std::map<std::string, int> remaining = indegree;
    std::deque<std::string> queue;
    for (const auto& node : nodes)
      if (!remaining.count(node)) queue.push_back(node);
    std::size_t stripped = 0;
    while (!queue.empty()) {
      std::string node = queue.front();
      queue.pop_front();
      ++stripped;
      auto [lo, hi] = edges.equal_range(node);
      for (auto it = lo; it != hi; ++it)
        if (--remaining[it->second] == 0) {
          remaining.erase(it->second);
          queue.push_back(it->second);
        }
    }
    if (stripped != nodes.size()) return false;
  }

  auto bfs_from = [&](const std::string& start) {
    std::set<std::string> seen{start};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      std::string node = queue.front();
      queue.pop_front();
      auto [lo, hi] = edges.equal_range(node);
      for (auto it = lo; it != hi; ++it)
        if (seen.insert(it->second).second) queue.push_back(it->second);
    }
    return seen;
  };

  std::set<std::string> from_root = bfs_from(graph.root_label);
  for (const auto& hole : graph.holes)
    if (!from_root.count(hole)) return false;
  for (const auto& label : graph.floating_labels)
    if (!from_root.count(label)) return false;

  for (const auto& [lower, upper] : graph.leq)
    if (!bfs_from(upper).count(lower)) return false;

  return true;
}

inline std::vector<Plugging> oracle_enumerate(const ScopeGraph& graph) {
  std::vector<Plugging> out;
  if (graph.holes.size() != graph.floating_labels.size()) return out;
  std::vector<std::string> labels = graph.floating_labels;
  std::sort(labels.begin(), labels.end());
  do {
    Plugging candidate;
    for (std::size_t i = 0; i < graph.holes.size(); ++i)
      candidate.assignment[graph.holes[i]] = labels[i];
    if (oracle_admissible(graph, candidate)) out.push_back(candidate);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace semdb::testing

#endif  // SEMDB_TESTS_ORACLE_HPP
