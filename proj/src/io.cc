//
// io.cc
//
// File formats: DOT and JSON exports, kernel configuration files.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/io.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace juggle {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(GraphKind kind) {
  return kind == GraphKind::toss ? "toss" : "poi";
}

std::string dot_graph_name(const StateGraph& graph) {
  if (graph.kind == GraphKind::poi) {
    return "poi_states";
  }
  std::ostringstream oss;
  oss << "toss_states_" << graph.balls << "_" << graph.max_throw;
  return oss.str();
}

}  // namespace

std::string export_dot(const StateGraph& graph) {
  std::vector<std::uint32_t> order(graph.node_count());
  for (std::uint32_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&graph](std::uint32_t a, std::uint32_t b) {
              return graph.node_ids[a] < graph.node_ids[b];
            });

  std::ostringstream oss;
  oss << "digraph " << dot_graph_name(graph) << " {\n";
  for (const std::uint32_t u : order) {
    oss << "  \"" << graph.node_ids[u] << "\";\n";
  }
  for (const std::uint32_t u : order) {
    for (const GraphEdge& e : graph.edges[u]) {
      oss << "  \"" << graph.node_ids[u] << "\" -> \"" << graph.node_ids[e.to]
          << "\" [label=\"" << e.label << "\"];\n";
    }
  }
  oss << "}\n";
  return oss.str();
}

std::string export_graph_json(const StateGraph& graph) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind_name(graph.kind);
  doc["parameters"] = ordered_json::object();
  if (graph.kind == GraphKind::toss) {
    doc["parameters"]["balls"] = graph.balls;
    doc["parameters"]["max_throw"] = graph.max_throw;
  }
  doc["nodes"] = graph.node_ids;
  ordered_json edges = ordered_json::array();
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    for (const GraphEdge& e : graph.edges[u]) {
      edges.push_back({{"from", graph.node_ids[u]},
                       {"to", graph.node_ids[e.to]},
                       {"label", std::string(1, e.label)}});
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

StateGraph parse_graph_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    StateGraph graph;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "toss") {
      graph.kind = GraphKind::toss;
      graph.balls = doc.at("parameters").at("balls").get<int>();
      graph.max_throw = doc.at("parameters").at("max_throw").get<int>();
    } else if (kind == "poi") {
      graph.kind = GraphKind::poi;
    } else {
      throw std::invalid_argument("unknown graph kind \"" + kind + "\"");
    }
    graph.node_ids = doc.at("nodes").get<std::vector<std::string>>();
    graph.edges.resize(graph.node_count());
    for (const auto& edge : doc.at("edges")) {
      const std::string label = edge.at("label").get<std::string>();
      if (label.size() != 1) {
        throw std::invalid_argument("edge label must be one character");
      }
      const std::uint32_t from =
          graph.index_of(edge.at("from").get<std::string>());
      const std::uint32_t to = graph.index_of(edge.at("to").get<std::string>());
      graph.edges[from].push_back({label[0], to});
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
}

std::string export_distribution_json(const StateGraph& graph,
                                     const StateDistribution& dist) {
  if (dist.size() != graph.node_count()) {
    throw std::invalid_argument("distribution does not match graph");
  }
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  const bool rational = dist.mode == StateDistribution::Mode::rational;
  doc["mode"] = rational ? "rational" : "float";
  ordered_json weights = ordered_json::object();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (rational) {
      weights[graph.node_ids[i]] = dist.rational_weights[i].get_str();
    } else {
      weights[graph.node_ids[i]] = dist.float_weights[i];
    }
  }
  doc["weights"] = std::move(weights);
  return doc.dump(2) + "\n";
}

std::string export_trace_json(const WalkTrace& trace) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["seed"] = trace.seed;
  doc["generator"] = trace.generator;
  doc["start"] = trace.graph->node_ids[trace.start];
  ordered_json steps = ordered_json::array();
  for (const auto& [label, node] : trace.steps) {
    steps.push_back({{"label", std::string(1, label)},
                     {"state", trace.graph->node_ids[node]}});
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

std::string export_timeline_json(const CombinedPattern& combined) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["toss"] = combined.toss.render();
  doc["word"] = render_poi_word(combined.spin);
  doc["max_throw"] = combined.max_throw;
  doc["notation_period"] = combined.notation_period;
  doc["full_period"] = combined.full_period;
  doc["poi_start"] = combined.poi_start.id();
  ordered_json rows = ordered_json::array();
  for (const TimelineEntry& entry : combined.timeline) {
    rows.push_back({{"beat", entry.beat},
                    {"throw", entry.throw_value},
                    {"label", std::string(1, static_cast<char>(entry.label))},
                    {"toss_state", entry.toss_before.id()},
                    {"poi_state", entry.poi_before.id()}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Rational parse_probability(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty probability");
  }
  const auto bad = [&text]() {
    throw std::invalid_argument("bad probability \"" + text + "\"");
  };
  const auto digits_only = [](const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) {
             return std::isdigit(c) != 0;
           });
  };

  Rational value;
  const std::size_t slash = text.find('/');
  const std::size_t dot = text.find('.');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      bad();
    const BigInt denominator(den);
    if (denominator == 0)
      bad();
    value = Rational(BigInt(num), denominator);
    value.canonicalize();
  } else if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!digits_only(whole) || !digits_only(frac))
      bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(BigInt(whole) * scale + BigInt(frac), scale);
    value.canonicalize();
  } else {
    if (!digits_only(text))
      bad();
    value = Rational(BigInt(text));
  }
  if (value < 0 || value > 1)
    bad();
  return value;
}

TransitionKernel load_kernel(const StateGraph& graph,
                             const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad kernel JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("kernel file must be a JSON object");
  }

  TransitionKernel kernel = uniform_kernel(graph);
  for (const auto& [state_id, assignment] : doc.items()) {
    const std::uint32_t u = graph.index_of(state_id);
    if (!assignment.is_object()) {
      throw std::invalid_argument("kernel entry for \"" + state_id +
                                  "\" must map labels to probabilities");
    }
    auto& row = kernel.probabilities[u];
    std::fill(row.begin(), row.end(), Rational(0));
    for (const auto& [label, prob] : assignment.items()) {
      if (label.size() != 1) {
        throw std::invalid_argument("bad edge label \"" + label + "\"");
      }
      const auto& out = graph.edges[u];
      const auto it =
          std::find_if(out.begin(), out.end(), [&label](const GraphEdge& e) {
            return e.label == label[0];
          });
      if (it == out.end()) {
        throw std::invalid_argument("state \"" + state_id +
                                    "\" has no outgoing label '" + label +
                                    "'");
      }
      Rational p;
      if (prob.is_string()) {
        p = parse_probability(prob.get<std::string>());
      } else if (prob.is_number_integer()) {
        p = Rational(prob.get<long>());
        if (p < 0 || p > 1) {
          throw std::invalid_argument("probability outside [0, 1] at \"" +
                                      state_id + "\"");
        }
      } else {
        throw std::invalid_argument(
            "probabilities must be strings (\"p/q\" or decimal) or integers");
      }
      row[it - out.begin()] = p;
    }
  }
  validate_kernel(kernel);
  return kernel;
}

}  // namespace juggle
