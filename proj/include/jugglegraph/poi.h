//
// poi.h
//
// The poi spin state machine: states, R/B transitions, pattern words,
// entry search, and spin-graph kernels.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_POI_H_
#define JUGGLEGRAPH_POI_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "jugglegraph/random_walk.h"
#include "jugglegraph/state_graph.h"

namespace juggle {

enum class Hand : char { left = 'L', right = 'R' };
enum class Side : char { left = 'l', right = 'r' };

// One beat rotates each hand 180 degrees: the down hand ascends, the up hand
// descends. A state records which hand is up and which side of the shoulder
// line each hand hangs on.
struct PoiState {
  Hand up = Hand::left;
  Side left_hand = Side::left;
  Side right_hand = Side::right;

  // Number of hands off their natural side; the tether braiding level.
  int crossing_count() const {
    return (left_hand != Side::left ? 1 : 0) +
           (right_hand != Side::right ? 1 : 0);
  }
  bool is_ground() const { return crossing_count() == 0; }

  // Swap hands and sides; an automorphism of the transition rules.
  PoiState mirrored() const;

  // Export identifier, e.g. "up=L;L@l;R@r;c=0".
  std::string id() const;

  auto operator<=>(const PoiState&) const = default;
};

inline constexpr PoiState kGroundLeftUp{Hand::left, Side::left, Side::right};
inline constexpr PoiState kGroundRightUp{Hand::right, Side::left, Side::right};

// Move labels: R crosses the shoulder line, B does not.
enum class MoveLabel : char { B = 'B', R = 'R' };

using PoiWord = std::vector<MoveLabel>;

// Parse "RRB" (case-insensitive). Throws std::invalid_argument on other
// characters or an empty word.
PoiWord parse_poi_word(const std::string& text);
std::string render_poi_word(const PoiWord& word);

// Parse an identifier as produced by PoiState::id(); the ";c=N" suffix is
// optional but checked when present.
PoiState parse_poi_state_id(const std::string& text);

// One beat: the down hand ascends and becomes the up hand; on R it also moves
// to the other side of the body. Side moves happen only while rotating from
// down to up, so the descending hand never changes side. Total on all states.
PoiState poi_advance(const PoiState& state, MoveLabel label);

// The 8-state graph with one R-edge and one B-edge out of every node.
StateGraph build_poi_graph();

// States behind the graph nodes, in node order.
std::vector<PoiState> poi_graph_states();

struct WordRun {
  PoiState final_state;
  std::vector<PoiState> trajectory;  // start state, then one entry per move
};

WordRun run_word(const PoiState& start, const PoiWord& word);

// True iff run_word returns to the start state.
bool is_cycle(const PoiState& start, const PoiWord& word);

// Whether the word, repeated from this state, traces a closed pattern.
// Every move flips the up hand, so an even word must return to the start
// exactly, while an odd word closes by returning to the mirrored start (each
// repetition is the mirror image of the previous one, and the doubled word
// returns exactly).
bool word_closes(const PoiState& start, const PoiWord& word);

class NoCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EntryResult {
  PoiWord entry;     // empty when the pattern's cycle contains a ground state
  PoiState ground;   // the ground state the entry leaves from
  PoiState anchor;   // the state where the target word starts
};

// Shortest label word from a ground state to a state that closes the target
// word; ties prefer B over R at each position. Throws NoCycle when no state
// closes the word.
EntryResult find_entry(const PoiWord& target);

// Kernel on the poi graph: probability p_r on each R-edge and 1 - p_r on
// each B-edge. Requires 0 < p_r < 1 and a poi graph.
TransitionKernel poi_kernel(const StateGraph& graph, const Rational& p_r);

}  // namespace juggle

#endif  // JUGGLEGRAPH_POI_H_
