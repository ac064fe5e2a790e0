//
// test_poi.cc
//
// This file is distributed under the MIT License.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "jugglegraph/poi.h"

using namespace juggle;

namespace {

const PoiState kPostEntryWeave{Hand::right, Side::left, Side::left};

}  // namespace

TEST_CASE("state identity") {
  CHECK(kGroundLeftUp.id() == "up=L;L@l;R@r;c=0");
  CHECK(kGroundLeftUp.crossing_count() == 0);
  CHECK(kGroundLeftUp.is_ground());
  CHECK(kPostEntryWeave.id() == "up=R;L@l;R@l;c=1");
  CHECK(kPostEntryWeave.crossing_count() == 1);

  for (const PoiState& s : poi_graph_states()) {
    CHECK(parse_poi_state_id(s.id()) == s);
    CHECK(s.mirrored().mirrored() == s);
    CHECK(s.mirrored().crossing_count() == s.crossing_count());
  }
  CHECK(parse_poi_state_id("up=L;L@l;R@r") == kGroundLeftUp);
  CHECK_THROWS_AS(parse_poi_state_id("up=L;L@l;R@r;c=2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_poi_state_id("up=X;L@l;R@r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poi_state_id("garbage"), std::invalid_argument);
}

TEST_CASE("word parsing") {
  CHECK(parse_poi_word("RRB") ==
        PoiWord{MoveLabel::R, MoveLabel::R, MoveLabel::B});
  CHECK(parse_poi_word("rrb") == parse_poi_word("RRB"));
  CHECK(render_poi_word(parse_poi_word("BRRBB")) == "BRRBB");
  CHECK_THROWS_AS(parse_poi_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poi_word("RXB"), std::invalid_argument);
}

TEST_CASE("advance moves the ascending hand") {
  // non-move: the down hand rises in place
  CHECK(poi_advance(kGroundLeftUp, MoveLabel::B) == kGroundRightUp);
  // crossing move: the rising right hand crosses to the left side
  CHECK(poi_advance(kGroundLeftUp, MoveLabel::R) ==
        PoiState{Hand::right, Side::left, Side::left});
  // a second crossing move takes the left hand over as well
  CHECK(poi_advance(PoiState{Hand::right, Side::left, Side::left},
                    MoveLabel::R) ==
        PoiState{Hand::left, Side::right, Side::left});
  CHECK(PoiState{Hand::left, Side::right, Side::left}.crossing_count() == 2);
}

TEST_CASE("graph structure") {
  const StateGraph graph = build_poi_graph();
  CHECK(graph.kind == GraphKind::poi);
  CHECK(graph.node_count() == 8);
  CHECK(graph.edge_count() == 16);

  int grounds = 0;
  for (const PoiState& s : poi_graph_states()) {
    if (s.is_ground())
      ++grounds;
    CHECK(s.crossing_count() >= 0);
    CHECK(s.crossing_count() <= 2);
  }
  CHECK(grounds == 2);

  // each node: one R-edge and one B-edge out...
  std::map<char, std::map<std::uint32_t, int>> incoming;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    REQUIRE(graph.edges[u].size() == 2);
    CHECK(graph.edges[u][0].label == 'B');
    CHECK(graph.edges[u][1].label == 'R');
    for (const GraphEdge& e : graph.edges[u]) {
      ++incoming[e.label][e.to];
    }
  }
  // ...and, by bijectivity per label, one R-edge and one B-edge in
  for (const char label : {'B', 'R'}) {
    CHECK(incoming[label].size() == 8);
    for (const auto& [node, count] : incoming[label]) {
      CHECK(count == 1);
    }
  }
  CHECK(is_strongly_connected(graph));
}

TEST_CASE("mirror symmetry commutes with advance") {
  for (const PoiState& s : poi_graph_states()) {
    for (const MoveLabel l : {MoveLabel::B, MoveLabel::R}) {
      CHECK(poi_advance(s.mirrored(), l) == poi_advance(s, l).mirrored());
    }
  }
}

TEST_CASE("up hand alternates") {
  for (const PoiState& s : poi_graph_states()) {
    for (const MoveLabel l : {MoveLabel::B, MoveLabel::R}) {
      CHECK(poi_advance(s, l).up != s.up);
    }
    // odd words can never fix a state
    CHECK_FALSE(is_cycle(s, parse_poi_word("B")));
    CHECK_FALSE(is_cycle(s, parse_poi_word("RRB")));
  }
}

TEST_CASE("paper words return to ground") {
  for (const PoiState& ground : {kGroundLeftUp, kGroundRightUp}) {
    const WordRun weave3 = run_word(ground, parse_poi_word("RRRBRRR"));
    CHECK(weave3.final_state.is_ground());
    const WordRun weave5 = run_word(ground, parse_poi_word("RBRRBBBRRBR"));
    CHECK(weave5.final_state.is_ground());
  }
}

TEST_CASE("ground pattern cycles") {
  CHECK(is_cycle(kGroundLeftUp, parse_poi_word("BB")));
  CHECK_FALSE(is_cycle(kGroundLeftUp, parse_poi_word("B")));
  const WordRun run = run_word(kGroundLeftUp, parse_poi_word("BB"));
  CHECK(run.final_state == kGroundLeftUp);
  CHECK(run.trajectory ==
        std::vector<PoiState>{kGroundLeftUp, kGroundRightUp, kGroundLeftUp});
}

TEST_CASE("the 3-weave cycle avoids ground") {
  const PoiWord doubled = parse_poi_word("RRBRRB");
  CHECK(is_cycle(kPostEntryWeave, doubled));
  const WordRun run = run_word(kPostEntryWeave, doubled);
  const std::set<PoiState> distinct(run.trajectory.begin(),
                                    run.trajectory.end());
  CHECK(distinct.size() == 6);
  for (const PoiState& s : run.trajectory) {
    CHECK(s.crossing_count() > 0);
  }
}

TEST_CASE("word closure follows up-hand parity") {
  // even words close exactly; odd words close onto the mirrored state
  CHECK(word_closes(kGroundLeftUp, parse_poi_word("BB")));
  CHECK(word_closes(kGroundLeftUp, parse_poi_word("B")));
  CHECK(word_closes(kPostEntryWeave, parse_poi_word("RRB")));
  CHECK_FALSE(word_closes(kGroundLeftUp, parse_poi_word("RRB")));

  // an anchor of an odd word is an exact anchor of its double
  for (const PoiState& s : poi_graph_states()) {
    const PoiWord word = parse_poi_word("BRRBB");
    PoiWord twice = word;
    twice.insert(twice.end(), word.begin(), word.end());
    if (word_closes(s, word)) {
      CHECK(is_cycle(s, twice));
    }
  }
}

TEST_CASE("entry search") {
  const EntryResult weave3 = find_entry(parse_poi_word("RRB"));
  CHECK(render_poi_word(weave3.entry) == "R");
  CHECK(weave3.ground == kGroundLeftUp);
  CHECK(weave3.anchor == kPostEntryWeave);

  const EntryResult weave5 = find_entry(parse_poi_word("BRRBB"));
  CHECK(render_poi_word(weave5.entry) == "R");
  CHECK_FALSE(weave5.anchor.is_ground());

  const EntryResult ground2 = find_entry(parse_poi_word("BB"));
  CHECK(ground2.entry.empty());
  CHECK(ground2.anchor.is_ground());

  const EntryResult ground1 = find_entry(parse_poi_word("B"));
  CHECK(ground1.entry.empty());
  CHECK(ground1.anchor.is_ground());

  // BR shifts a hand sideways every repetition and never closes
  CHECK_THROWS_AS(find_entry(parse_poi_word("BR")), NoCycle);
}

TEST_CASE("spin kernels have the uniform stationary distribution") {
  const StateGraph graph = build_poi_graph();
  for (const Rational& p : {Rational(1, 2), Rational(3, 10), Rational(1, 10)}) {
    const TransitionKernel kernel = poi_kernel(graph, p);
    const StateDistribution pi = stationary_exact(kernel);
    for (const Rational& w : pi.rational_weights) {
      CHECK(w == Rational(1, 8));
    }
  }
  CHECK_THROWS_AS(poi_kernel(graph, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(poi_kernel(graph, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(poi_kernel(graph, Rational(-1, 2)), std::invalid_argument);
}
