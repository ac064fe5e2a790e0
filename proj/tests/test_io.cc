//
// test_io.cc
//
// This file is distributed under the MIT License.
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "jugglegraph/combine.h"
#include "jugglegraph/io.h"
#include "jugglegraph/poi.h"
#include "jugglegraph/random_walk.h"
#include "jugglegraph/toss.h"

using namespace juggle;

namespace {

int count_lines_containing(const std::string& text, const std::string& needle) {
  int count = 0;
  std::istringstream iss(text);
  std::string line;
  while (std::getline(iss, line)) {
    if (line.find(needle) != std::string::npos)
      ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("dot export of the (3,5) graph") {
  const StateGraph graph = build_state_graph(3, 5);

  // fix the edge count by enumeration before trusting the export: states
  // containing 0 have out-degree m-k+1, the rest have out-degree 1
  std::size_t expected_edges = 0;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    expected_edges += graph_state(graph, u).contains(0) ? 3 : 1;
  }
  CHECK(expected_edges == 22);
  CHECK(graph.edge_count() == expected_edges);

  const std::string dot = export_dot(graph);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_lines_containing(dot, "->") == 22);
  CHECK(count_lines_containing(dot, "\"0,1,2\";") == 1);
  CHECK(count_lines_containing(dot, "\"0,1,3\" -> \"0,2,3\" [label=\"4\"];") ==
        1);

  // deterministic output
  CHECK(export_dot(graph) == dot);
}

TEST_CASE("dot export of degenerate and poi graphs") {
  const std::string single = export_dot(build_state_graph(1, 1));
  CHECK(count_lines_containing(single, "\"0\";") == 1);
  CHECK(count_lines_containing(single, "\"0\" -> \"0\" [label=\"1\"];") == 1);

  const StateGraph poi = build_poi_graph();
  const std::string dot = export_dot(poi);
  CHECK(count_lines_containing(dot, "up=") == 8 + 16);
  CHECK(count_lines_containing(dot, "->") == 16);
}

TEST_CASE("graph json round-trips") {
  for (const StateGraph& graph :
       {build_state_graph(3, 5), build_state_graph(1, 1), build_poi_graph(),
        build_state_graph(0, 2)}) {
    const std::string json = export_graph_json(graph);
    CHECK(parse_graph_json(json) == graph);
  }
  CHECK_THROWS_AS(parse_graph_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_json("{\"schema_version\": 99}"),
                  std::invalid_argument);
}

TEST_CASE("distribution json") {
  const StateGraph graph = build_state_graph(3, 5);
  const std::string json =
      export_distribution_json(graph, warrington_distribution(3, 5));
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"mode\": \"rational\"") != std::string::npos);
  CHECK(json.find("\"0,1,2\": \"3/10\"") != std::string::npos);
  CHECK(json.find("\"2,3,4\": \"1/90\"") != std::string::npos);
}

TEST_CASE("trace json") {
  const StateGraph graph = build_state_graph(1, 1);
  const WalkTrace trace = sample_walk(uniform_kernel(graph), 0, 2, 9);
  const std::string json = export_trace_json(trace);
  CHECK(json.find("\"seed\": 9") != std::string::npos);
  CHECK(json.find("\"generator\": \"mt19937_64\"") != std::string::npos);
  CHECK(json.find("\"label\": \"1\"") != std::string::npos);
}

TEST_CASE("timeline json") {
  const CombinedPattern combined =
      combine(SiteswapPattern({5, 2, 2}), parse_poi_word("RRB"), 5);
  const std::string json = export_timeline_json(combined);
  CHECK(json.find("\"toss\": \"522\"") != std::string::npos);
  CHECK(json.find("\"word\": \"RRB\"") != std::string::npos);
  CHECK(json.find("\"full_period\": 6") != std::string::npos);
  CHECK(count_lines_containing(json, "\"beat\"") == 6);
}

TEST_CASE("probability parsing") {
  CHECK(parse_probability("1/3") == Rational(1, 3));
  CHECK(parse_probability("0.3") == Rational(3, 10));
  CHECK(parse_probability("0.25") == Rational(1, 4));
  CHECK(parse_probability("1") == 1);
  CHECK(parse_probability("0") == 0);
  CHECK(parse_probability("2/6") == Rational(1, 3));
  CHECK_THROWS_AS(parse_probability(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("-0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("3/2"), std::invalid_argument);
}

TEST_CASE("kernel files") {
  const StateGraph graph = build_state_graph(3, 5);

  // the 450 cycle pinned, everything else left uniform
  const std::string config = R"({
    "0,1,3": {"4": "1"},
    "0,2,3": {"5": "1"},
    "1,2,4": {"0": "1"}
  })";
  const TransitionKernel kernel = load_kernel(graph, config);
  const StateDistribution pi = stationary_exact(kernel);
  CHECK(pi.rational_weights[graph.index_of("0,1,3")] == Rational(1, 3));
  CHECK(pi.rational_weights[graph.index_of("0,1,2")] == 0);

  const std::uint32_t ground = graph.index_of("0,1,2");
  CHECK(kernel.probabilities[ground] ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  // rational and decimal strings mix freely
  const std::string mixed = R"({"0,1,2": {"3": "1/4", "4": "0.25", "5": "0.5"}})";
  const TransitionKernel k2 = load_kernel(graph, mixed);
  CHECK(k2.probabilities[ground] ==
        std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});

  CHECK_THROWS_AS(load_kernel(graph, "[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(load_kernel(graph, R"({"9,9": {"0": "1"}})"),
                  std::invalid_argument);
  // label 2 is not an edge of state {0,1,2}
  CHECK_THROWS_AS(load_kernel(graph, R"({"0,1,2": {"2": "1"}})"),
                  std::invalid_argument);
  // probabilities must fill the node
  CHECK_THROWS_AS(load_kernel(graph, R"({"0,1,2": {"3": "1/2"}})"),
                  std::invalid_argument);
}
