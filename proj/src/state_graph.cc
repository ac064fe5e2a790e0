//
// state_graph.cc
//
// Labeled directed state graph shared by the toss and poi models.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/state_graph.h"

#include <algorithm>
#include <stdexcept>

namespace juggle {

std::size_t StateGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& out : edges) {
    count += out.size();
  }
  return count;
}

std::uint32_t StateGraph::index_of(const std::string& id) const {
  const auto it = std::find(node_ids.begin(), node_ids.end(), id);
  if (it == node_ids.end()) {
    throw std::invalid_argument("no such state in graph: \"" + id + "\"");
  }
  return static_cast<std::uint32_t>(it - node_ids.begin());
}

namespace {

// Nodes reachable from `start` along the given adjacency.
std::size_t count_reachable(const std::vector<std::vector<std::uint32_t>>& adj,
                            std::uint32_t start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::uint32_t> stack{start};
  seen[start] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    ++count;
    for (const std::uint32_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const StateGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0)
    return false;
  std::vector<std::vector<std::uint32_t>> forward(n), backward(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (const GraphEdge& e : graph.edges[u]) {
      forward[u].push_back(e.to);
      backward[e.to].push_back(u);
    }
  }
  return count_reachable(forward, 0) == n && count_reachable(backward, 0) == n;
}

}  // namespace juggle
