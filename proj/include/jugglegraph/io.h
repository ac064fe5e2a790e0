//
// io.h
//
// File formats: DOT and JSON graph exports, distribution/trace/timeline
// JSON documents, and kernel configuration files.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_IO_H_
#define JUGGLEGRAPH_IO_H_

#include <string>

#include "jugglegraph/combine.h"
#include "jugglegraph/random_walk.h"
#include "jugglegraph/state_graph.h"

namespace juggle {

inline constexpr int kSchemaVersion = 1;

// DOT digraph with one node line per state and one edge line per transition,
// nodes sorted by identifier and edges by (source identifier, label).
std::string export_dot(const StateGraph& graph);

// JSON document {schema_version, kind, parameters, nodes, edges} preserving
// the graph's canonical node order.
std::string export_graph_json(const StateGraph& graph);

// Rebuild a graph from export_graph_json output.
// Throws std::invalid_argument on malformed documents.
StateGraph parse_graph_json(const std::string& text);

// JSON document {schema_version, mode, weights}; rational weights render as
// "p/q" strings, floating weights as numbers.
std::string export_distribution_json(const StateGraph& graph,
                                     const StateDistribution& dist);

// JSON document {schema_version, seed, generator, start, steps}.
std::string export_trace_json(const WalkTrace& trace);

// JSON document {schema_version, toss, word, max_throw, notation_period,
// full_period, poi_start, rows}.
std::string export_timeline_json(const CombinedPattern& combined);

// Parse "p/q", a decimal like "0.125", or an integer, exactly.
// Throws std::invalid_argument on malformed input or values outside [0, 1].
Rational parse_probability(const std::string& text);

// Kernel configuration: a JSON object mapping state identifiers to
// label -> probability maps (probabilities as strings, see
// parse_probability, or as integers). States not mentioned get the uniform
// assignment. The result is validated and exactly renormalized.
TransitionKernel load_kernel(const StateGraph& graph, const std::string& text);

}  // namespace juggle

#endif  // JUGGLEGRAPH_IO_H_
