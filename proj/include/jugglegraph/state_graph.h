//
// state_graph.h
//
// Labeled directed state graph shared by the toss and poi models.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_STATE_GRAPH_H_
#define JUGGLEGRAPH_STATE_GRAPH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace juggle {

enum class GraphKind { toss, poi };

struct GraphEdge {
  char label = '0';  // toss: throw digit/letter; poi: 'R' or 'B'
  std::uint32_t to = 0;

  bool operator==(const GraphEdge&) const = default;
};

// Nodes are held in a canonical order fixed at construction (toss: subsets in
// lexicographic element order; poi: identifier order). Per-node edge lists
// are sorted by ascending label.
struct StateGraph {
  GraphKind kind = GraphKind::toss;
  int balls = 0;      // toss: k; poi: 0
  int max_throw = 0;  // toss: m; poi: 0

  std::vector<std::string> node_ids;
  std::vector<std::vector<GraphEdge>> edges;  // edges[node] -> outgoing

  std::size_t node_count() const { return node_ids.size(); }
  std::size_t edge_count() const;
  std::size_t out_degree(std::uint32_t node) const { return edges[node].size(); }

  // Index of the node with the given identifier.
  // Throws std::invalid_argument if absent.
  std::uint32_t index_of(const std::string& id) const;

  bool operator==(const StateGraph&) const = default;
};

// True iff every ordered node pair is connected by a directed path.
bool is_strongly_connected(const StateGraph& graph);

}  // namespace juggle

#endif  // JUGGLEGRAPH_STATE_GRAPH_H_
