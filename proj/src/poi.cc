//
// poi.cc
//
// The poi spin state machine: states, R/B transitions, pattern words,
// entry search, and spin-graph kernels.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/poi.h"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <sstream>

namespace juggle {

namespace {

Side flipped(Side s) {
  return s == Side::left ? Side::right : Side::left;
}

Hand other(Hand h) {
  return h == Hand::left ? Hand::right : Hand::left;
}

}  // namespace

PoiState PoiState::mirrored() const {
  return PoiState{other(up), flipped(right_hand), flipped(left_hand)};
}

std::string PoiState::id() const {
  std::ostringstream oss;
  oss << "up=" << static_cast<char>(up)
      << ";L@" << static_cast<char>(left_hand)
      << ";R@" << static_cast<char>(right_hand)
      << ";c=" << crossing_count();
  return oss.str();
}

PoiWord parse_poi_word(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty poi word");
  }
  PoiWord word;
  word.reserve(text.size());
  for (const char c : text) {
    const char upper =
        static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == 'R') {
      word.push_back(MoveLabel::R);
    } else if (upper == 'B') {
      word.push_back(MoveLabel::B);
    } else {
      std::ostringstream oss;
      oss << "invalid poi move '" << c << "': expected R or B";
      throw std::invalid_argument(oss.str());
    }
  }
  return word;
}

std::string render_poi_word(const PoiWord& word) {
  std::string out;
  out.reserve(word.size());
  for (const MoveLabel l : word) {
    out.push_back(static_cast<char>(l));
  }
  return out;
}

PoiState parse_poi_state_id(const std::string& text) {
  // up=<L|R>;L@<l|r>;R@<l|r>[;c=<n>]
  std::vector<std::string> parts;
  std::istringstream iss(text);
  std::string part;
  while (std::getline(iss, part, ';')) {
    parts.push_back(part);
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw std::invalid_argument("bad poi state \"" + text + "\"");
  }
  const auto fail = [&text]() -> char {
    throw std::invalid_argument("bad poi state \"" + text + "\"");
  };
  const auto field = [&](std::size_t i, const std::string& prefix) {
    if (parts[i].size() != prefix.size() + 1 ||
        parts[i].compare(0, prefix.size(), prefix) != 0)
      fail();
    return parts[i].back();
  };
  const char up = field(0, "up=");
  const char left = field(1, "L@");
  const char right = field(2, "R@");
  if ((up != 'L' && up != 'R') || (left != 'l' && left != 'r') ||
      (right != 'l' && right != 'r'))
    fail();

  PoiState state{up == 'L' ? Hand::left : Hand::right,
                 left == 'l' ? Side::left : Side::right,
                 right == 'l' ? Side::left : Side::right};
  if (parts.size() == 4) {
    const char c = field(3, "c=");
    if (c < '0' || c > '2' || c - '0' != state.crossing_count())
      fail();
  }
  return state;
}

PoiState poi_advance(const PoiState& state, MoveLabel label) {
  const Hand ascending = other(state.up);
  PoiState next = state;
  next.up = ascending;
  if (label == MoveLabel::R) {
    if (ascending == Hand::left) {
      next.left_hand = flipped(next.left_hand);
    } else {
      next.right_hand = flipped(next.right_hand);
    }
  }
  return next;
}

std::vector<PoiState> poi_graph_states() {
  std::vector<PoiState> states;
  states.reserve(8);
  for (const Hand up : {Hand::left, Hand::right}) {
    for (const Side l : {Side::left, Side::right}) {
      for (const Side r : {Side::left, Side::right}) {
        states.push_back(PoiState{up, l, r});
      }
    }
  }
  return states;
}

StateGraph build_poi_graph() {
  const std::vector<PoiState> states = poi_graph_states();

  StateGraph graph;
  graph.kind = GraphKind::poi;
  graph.node_ids.reserve(states.size());
  graph.edges.resize(states.size());
  for (const PoiState& s : states) {
    graph.node_ids.push_back(s.id());
  }

  const auto index_of = [&states](const PoiState& s) {
    const auto it = std::find(states.begin(), states.end(), s);
    assert(it != states.end());
    return static_cast<std::uint32_t>(it - states.begin());
  };
  for (std::uint32_t i = 0; i < states.size(); ++i) {
    // ascending label order: B before R
    graph.edges[i].push_back(
        {'B', index_of(poi_advance(states[i], MoveLabel::B))});
    graph.edges[i].push_back(
        {'R', index_of(poi_advance(states[i], MoveLabel::R))});
  }
  return graph;
}

WordRun run_word(const PoiState& start, const PoiWord& word) {
  if (word.empty()) {
    throw std::invalid_argument("empty poi word");
  }
  WordRun run;
  run.trajectory.reserve(word.size() + 1);
  run.trajectory.push_back(start);
  PoiState at = start;
  for (const MoveLabel l : word) {
    at = poi_advance(at, l);
    run.trajectory.push_back(at);
  }
  run.final_state = at;
  return run;
}

bool is_cycle(const PoiState& start, const PoiWord& word) {
  return run_word(start, word).final_state == start;
}

bool word_closes(const PoiState& start, const PoiWord& word) {
  const PoiState end = run_word(start, word).final_state;
  return word.size() % 2 == 0 ? end == start : end == start.mirrored();
}

EntryResult find_entry(const PoiWord& target) {
  const std::vector<PoiState> states = poi_graph_states();
  std::vector<bool> closes;
  closes.reserve(states.size());
  bool any = false;
  for (const PoiState& s : states) {
    closes.push_back(word_closes(s, target));
    any = any || closes.back();
  }
  if (!any) {
    throw NoCycle("no state closes the word " + render_poi_word(target));
  }

  const auto index_of = [&states](const PoiState& s) {
    return static_cast<std::size_t>(
        std::find(states.begin(), states.end(), s) - states.begin());
  };

  // Breadth-first over label words, expanding B before R: the first anchor
  // found is reached by the shortest, most-B word.
  struct Node {
    PoiState state;
    PoiState ground;
    PoiWord path;
  };
  std::deque<Node> queue;
  std::vector<bool> seen(states.size(), false);
  for (const PoiState& g : {kGroundLeftUp, kGroundRightUp}) {
    if (!seen[index_of(g)]) {
      seen[index_of(g)] = true;
      queue.push_back({g, g, {}});
    }
  }
  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    if (closes[index_of(node.state)]) {
      return EntryResult{node.path, node.ground, node.state};
    }
    for (const MoveLabel l : {MoveLabel::B, MoveLabel::R}) {
      const PoiState next = poi_advance(node.state, l);
      if (!seen[index_of(next)]) {
        seen[index_of(next)] = true;
        PoiWord path = node.path;
        path.push_back(l);
        queue.push_back({next, node.ground, std::move(path)});
      }
    }
  }
  // Unreachable: the poi graph is strongly connected.
  throw std::logic_error("entry search exhausted the graph");
}

TransitionKernel poi_kernel(const StateGraph& graph, const Rational& p_r) {
  if (graph.kind != GraphKind::poi) {
    throw std::invalid_argument("poi kernel needs a poi graph");
  }
  if (p_r <= 0 || p_r >= 1) {
    throw std::invalid_argument("crossing probability must be in (0, 1)");
  }
  TransitionKernel kernel;
  kernel.graph = &graph;
  kernel.probabilities.resize(graph.node_count());
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    kernel.probabilities[u].reserve(graph.edges[u].size());
    for (const GraphEdge& e : graph.edges[u]) {
      kernel.probabilities[u].push_back(e.label == 'R' ? p_r
                                                       : Rational(1) - p_r);
    }
  }
  return kernel;
}

}  // namespace juggle
