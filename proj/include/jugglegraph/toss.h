//
// toss.h
//
// Toss-juggling states, transition semantics, state-graph construction,
// pattern/cycle conversion, and transition search.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_TOSS_H_
#define JUGGLEGRAPH_TOSS_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jugglegraph/siteswap.h"
#include "jugglegraph/state_graph.h"

namespace juggle {

// A juggling state: the set of future beat offsets (relative to now) at which
// airborne particles land. Offsets live in {0, ..., capacity-1}.
//
// Stored as an occupancy bit mask; equality and ordering are defined on the
// sorted element list.
class TossState {
 public:
  TossState() = default;  // empty state, capacity 1

  TossState(std::uint64_t mask, int capacity);

  static TossState from_elements(const std::vector<int>& elements,
                                 int capacity);

  int capacity() const { return capacity_; }        // m
  int size() const;                                 // k
  bool contains(int offset) const;
  std::uint64_t mask() const { return mask_; }
  std::vector<int> elements() const;                // ascending

  // Comma-separated sorted elements, e.g. "0,2,3"; empty state renders "".
  std::string id() const;

  bool operator==(const TossState& other) const {
    return capacity_ == other.capacity_ && mask_ == other.mask_;
  }
  // Lexicographic on the sorted element list, then capacity.
  std::strong_ordering operator<=>(const TossState& other) const;

 private:
  std::uint64_t mask_ = 0;
  int capacity_ = 1;
};

// Parse a state id of the form "0,2,3" (sorted ascending). An empty string is
// the empty state. Throws std::invalid_argument on malformed input.
TossState parse_state_id(const std::string& text, int capacity);

enum class ThrowErrorKind {
  must_wait,    // nothing lands now, only the 0-throw is possible
  must_throw,   // a particle lands now, the 0-throw is impossible
  collision,    // the landing offset is already occupied
  out_of_range  // throw value exceeds the state capacity
};

class ThrowError : public std::invalid_argument {
 public:
  ThrowError(const std::string& msg, ThrowErrorKind kind)
      : std::invalid_argument(msg), kind_(kind) {}
  ThrowErrorKind kind() const { return kind_; }

 private:
  ThrowErrorKind kind_;
};

// Advance one beat with the given throw. With S = the remaining offsets
// shifted down by one: if 0 is unoccupied the throw must be 0 and the result
// is S; otherwise the throw t must satisfy t >= 1 and t-1 not in S, and the
// result is S plus {t-1}. Throws ThrowError on an inadmissible throw.
TossState advance(const TossState& state, int throw_value);

// Exactly the throw values for which advance succeeds, ascending. Cardinality
// is 1 when offset 0 is unoccupied and m-k+1 otherwise.
std::vector<int> admissible_throws(const TossState& state);

// Full state graph for `balls` particles and maximum throw `max_throw`:
// all k-subsets of {0,...,m-1} with one edge per admissible throw.
// Requires 0 <= balls <= max_throw <= 35 and max_throw >= 1.
StateGraph build_state_graph(int balls, int max_throw);

// The TossState behind a graph node.
TossState graph_state(const StateGraph& graph, std::uint32_t node);

// The cyclic state sequence of a valid pattern: entry i is the state just
// before beat i. Requires max_throw >= the pattern's largest throw.
std::vector<TossState> pattern_states(const SiteswapPattern& pattern,
                                      int max_throw);
// Capacity defaults to the pattern's largest throw (at least 1).
std::vector<TossState> pattern_states(const SiteswapPattern& pattern);

class NotATransition : public std::invalid_argument {
 public:
  NotATransition(const std::string& msg, std::size_t index)
      : std::invalid_argument(msg), index_(index) {}
  // Index of the cycle step with no connecting throw.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Edge labels along a closed state cycle. Throws NotATransition if some
// consecutive pair is not connected.
SiteswapPattern cycle_to_pattern(const std::vector<TossState>& states);

// Shortest throw sequence from `from` to `to`; ties broken by the
// lexicographically smallest sequence. Empty iff from == to. Both states must
// share capacity and cardinality.
std::vector<int> find_transition(const TossState& from, const TossState& to);

}  // namespace juggle

#endif  // JUGGLEGRAPH_TOSS_H_
