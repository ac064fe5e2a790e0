//
// toss.cc
//
// Toss-juggling states, transition semantics, state-graph construction,
// pattern/cycle conversion, and transition search.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/toss.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace juggle {

TossState::TossState(std::uint64_t mask, int capacity)
    : mask_(mask), capacity_(capacity) {
  if (capacity < 1 || capacity > kMaxThrowValue) {
    throw std::invalid_argument("state capacity outside [1, 35]");
  }
  if (capacity < 64 && (mask >> capacity) != 0) {
    throw std::invalid_argument("state element outside [0, capacity-1]");
  }
}

TossState TossState::from_elements(const std::vector<int>& elements,
                                   int capacity) {
  std::uint64_t mask = 0;
  for (const int x : elements) {
    if (x < 0 || x >= capacity) {
      std::ostringstream oss;
      oss << "state element " << x << " outside [0, " << capacity - 1 << "]";
      throw std::invalid_argument(oss.str());
    }
    if (mask & (1ULL << x)) {
      std::ostringstream oss;
      oss << "duplicate state element " << x;
      throw std::invalid_argument(oss.str());
    }
    mask |= 1ULL << x;
  }
  return TossState(mask, capacity);
}

int TossState::size() const {
  return static_cast<int>(__builtin_popcountll(mask_));
}

bool TossState::contains(int offset) const {
  return offset >= 0 && offset < capacity_ && (mask_ & (1ULL << offset)) != 0;
}

std::vector<int> TossState::elements() const {
  std::vector<int> out;
  for (int x = 0; x < capacity_; ++x) {
    if (mask_ & (1ULL << x))
      out.push_back(x);
  }
  return out;
}

std::string TossState::id() const {
  std::ostringstream oss;
  bool first = true;
  for (const int x : elements()) {
    if (!first)
      oss << ',';
    oss << x;
    first = false;
  }
  return oss.str();
}

std::strong_ordering TossState::operator<=>(const TossState& other) const {
  const std::vector<int> a = elements();
  const std::vector<int> b = other.elements();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i])
      return a[i] <=> b[i];
  }
  if (a.size() != b.size())
    return a.size() <=> b.size();
  return capacity_ <=> other.capacity_;
}

TossState parse_state_id(const std::string& text, int capacity) {
  std::vector<int> elements;
  if (!text.empty()) {
    std::istringstream iss(text);
    std::string part;
    int prev = -1;
    while (std::getline(iss, part, ',')) {
      std::size_t used = 0;
      int value;
      try {
        value = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad state element \"" + part + "\"");
      }
      if (used != part.size()) {
        throw std::invalid_argument("bad state element \"" + part + "\"");
      }
      if (value <= prev) {
        throw std::invalid_argument(
            "state elements must be strictly ascending: \"" + text + "\"");
      }
      elements.push_back(value);
      prev = value;
    }
    if (text.back() == ',') {
      throw std::invalid_argument("trailing comma in state \"" + text + "\"");
    }
  }
  return TossState::from_elements(elements, capacity);
}

TossState advance(const TossState& state, int throw_value) {
  const int m = state.capacity();
  if (throw_value < 0 || throw_value > m) {
    std::ostringstream oss;
    oss << "throw " << throw_value << " out of range for capacity " << m;
    throw ThrowError(oss.str(), ThrowErrorKind::out_of_range);
  }

  const bool lands_now = state.contains(0);
  const std::uint64_t shifted = state.mask() >> 1;

  if (!lands_now) {
    if (throw_value != 0) {
      throw ThrowError("nothing lands now; the juggler must wait (throw 0)",
                       ThrowErrorKind::must_wait);
    }
    return TossState(shifted, m);
  }

  if (throw_value == 0) {
    throw ThrowError("a particle lands now; the 0-throw is impossible",
                     ThrowErrorKind::must_throw);
  }
  const std::uint64_t slot = 1ULL << (throw_value - 1);
  if (shifted & slot) {
    std::ostringstream oss;
    oss << "throw " << throw_value << " collides with an occupied landing";
    throw ThrowError(oss.str(), ThrowErrorKind::collision);
  }
  return TossState(shifted | slot, m);
}

std::vector<int> admissible_throws(const TossState& state) {
  if (!state.contains(0)) {
    return {0};
  }
  const int m = state.capacity();
  const std::uint64_t shifted = state.mask() >> 1;
  std::vector<int> out;
  for (int t = 1; t <= m; ++t) {
    if ((shifted & (1ULL << (t - 1))) == 0)
      out.push_back(t);
  }
  assert(static_cast<int>(out.size()) == m - state.size() + 1);
  return out;
}

namespace {

// All k-subsets of {0,...,m-1} in lexicographic element order.
std::vector<std::uint64_t> subsets_lex(int k, int m) {
  std::vector<std::uint64_t> out;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i)
    combo[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (const int x : combo)
      mask |= 1ULL << x;
    out.push_back(mask);
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && combo[i] == m - k + i)
      --i;
    if (i < 0)
      break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j)
      combo[j] = combo[j - 1] + 1;
  }
  return out;
}

}  // namespace

StateGraph build_state_graph(int balls, int max_throw) {
  if (balls < 0 || max_throw < 1 || balls > max_throw ||
      max_throw > kMaxThrowValue) {
    std::ostringstream oss;
    oss << "bad graph parameters: balls " << balls << ", max throw "
        << max_throw;
    throw std::invalid_argument(oss.str());
  }

  const std::vector<std::uint64_t> masks = subsets_lex(balls, max_throw);

  StateGraph graph;
  graph.kind = GraphKind::toss;
  graph.balls = balls;
  graph.max_throw = max_throw;
  graph.node_ids.reserve(masks.size());
  graph.edges.resize(masks.size());

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(masks.size());
  for (std::uint32_t i = 0; i < masks.size(); ++i) {
    index.emplace(masks[i], i);
    graph.node_ids.push_back(TossState(masks[i], max_throw).id());
  }

  for (std::uint32_t i = 0; i < masks.size(); ++i) {
    const TossState state(masks[i], max_throw);
    for (const int t : admissible_throws(state)) {
      const TossState next = advance(state, t);
      graph.edges[i].push_back({throw_char(t), index.at(next.mask())});
    }
  }
  return graph;
}

TossState graph_state(const StateGraph& graph, std::uint32_t node) {
  if (graph.kind != GraphKind::toss) {
    throw std::invalid_argument("not a toss graph");
  }
  return parse_state_id(graph.node_ids.at(node), graph.max_throw);
}

std::vector<TossState> pattern_states(const SiteswapPattern& pattern,
                                      int max_throw) {
  const ValidityReport report = validate(pattern);
  if (!report.valid) {
    throw std::invalid_argument("pattern " + pattern.render() +
                                " is not a valid siteswap");
  }
  if (max_throw < pattern.max_throw()) {
    std::ostringstream oss;
    oss << "capacity " << max_throw << " below largest throw "
        << pattern.max_throw();
    throw std::invalid_argument(oss.str());
  }
  if (max_throw < 1) {
    throw std::invalid_argument("capacity must be at least 1");
  }

  const auto& throws = pattern.throws();
  const int n = static_cast<int>(pattern.period());
  const int m = max_throw;
  // Window of past beats wide enough to cover every airborne particle.
  const int window = m * ((m + n - 1) / n + 1);

  std::vector<TossState> states;
  states.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t mask = 0;
    for (int j = i - window; j < i; ++j) {
      const int t = throws[((j % n) + n) % n];
      const int d = j + t - i;
      if (d >= 0) {
        assert(d < m);
        mask |= 1ULL << d;
      }
    }
    states.emplace_back(mask, m);
    assert(states.back().size() == report.particle_count);
  }

  // The throw sequence replays the cycle.
  for (int i = 0; i < n; ++i) {
    assert(advance(states[i], throws[i]) == states[(i + 1) % n]);
  }
  return states;
}

std::vector<TossState> pattern_states(const SiteswapPattern& pattern) {
  return pattern_states(pattern, std::max(pattern.max_throw(), 1));
}

SiteswapPattern cycle_to_pattern(const std::vector<TossState>& states) {
  if (states.empty()) {
    throw std::invalid_argument("empty state cycle");
  }
  const std::size_t n = states.size();
  std::vector<int> throws;
  throws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const TossState& from = states[i];
    const TossState& to = states[(i + 1) % n];
    bool found = false;
    for (const int t : admissible_throws(from)) {
      if (advance(from, t) == to) {
        throws.push_back(t);
        found = true;
        break;  // distinct throws reach distinct states
      }
    }
    if (!found) {
      std::ostringstream oss;
      oss << "no throw connects cycle step " << i << " ({" << from.id()
          << "} to {" << to.id() << "})";
      throw NotATransition(oss.str(), i);
    }
  }
  return SiteswapPattern(std::move(throws));
}

std::vector<int> find_transition(const TossState& from, const TossState& to) {
  if (from.capacity() != to.capacity() || from.size() != to.size()) {
    throw std::invalid_argument(
        "transition endpoints must share capacity and particle count");
  }
  if (from == to) {
    return {};
  }

  // Breadth-first search expanding throws in ascending order; the first
  // discovery of a state is therefore along the lexicographically smallest
  // shortest throw sequence.
  struct Discovery {
    std::uint64_t parent;
    int throw_value;
  };
  const int m = from.capacity();
  std::unordered_map<std::uint64_t, Discovery> seen;
  std::deque<std::uint64_t> queue;
  seen.emplace(from.mask(), Discovery{0, -1});
  queue.push_back(from.mask());

  while (!queue.empty()) {
    const std::uint64_t mask = queue.front();
    queue.pop_front();
    const TossState state(mask, m);
    for (const int t : admissible_throws(state)) {
      const std::uint64_t next = advance(state, t).mask();
      if (seen.emplace(next, Discovery{mask, t}).second) {
        if (next == to.mask()) {
          std::vector<int> path;
          std::uint64_t at = next;
          while (true) {
            const Discovery& d = seen.at(at);
            if (d.throw_value < 0)
              break;
            path.push_back(d.throw_value);
            at = d.parent;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(next);
      }
    }
  }
  // Unreachable: the state graph is strongly connected.
  throw std::logic_error("no transition found");
}

}  // namespace juggle
