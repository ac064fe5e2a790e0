//
// main.cc
//
// Command-line frontend: validation, state cycles, graphs, stationary
// distributions, random walks, transitions, poi patterns, and combined
// toss+spin timelines.
//
// This file is distributed under the MIT License.
//

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jugglegraph/combine.h"
#include "jugglegraph/io.h"
#include "jugglegraph/poi.h"
#include "jugglegraph/random_walk.h"
#include "jugglegraph/siteswap.h"
#include "jugglegraph/toss.h"

namespace {

using namespace juggle;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitComputationError = 2;

std::string format_double(double value) {
  std::ostringstream oss;
  oss << std::fixed << std::setprecision(9) << value;
  return oss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read file: " + path);
  }
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

std::string state_cycle_line(const std::vector<TossState>& states,
                             const SiteswapPattern& pattern) {
  std::ostringstream oss;
  for (std::size_t i = 0; i < states.size(); ++i) {
    oss << "{" << states[i].id() << "} -" << throw_char(pattern.throws()[i])
        << "-> ";
  }
  oss << "{" << states.front().id() << "}";
  return oss.str();
}

int cmd_validate(const std::string& text) {
  const SiteswapPattern pattern = parse_siteswap(text);
  const ValidityReport report = validate(pattern);
  if (report.valid) {
    std::cout << "pattern " << pattern.render() << ": valid\n"
              << "particles: " << report.particle_count << "\n";
    return kExitOk;
  }
  std::cout << "pattern " << pattern.render() << ": invalid\n";
  const int n = static_cast<int>(pattern.period());
  for (const auto& [i, j] : report.collisions) {
    std::cout << "collision: beats " << i << " and " << j
              << " land on the same beat (residue "
              << (i + pattern.throws()[i]) % n << " mod " << n << ")\n";
  }
  return kExitUserError;
}

int cmd_states(const std::string& text, int max_throw) {
  const SiteswapPattern pattern = parse_siteswap(text);
  const int m = max_throw > 0 ? max_throw : std::max(pattern.max_throw(), 1);
  const std::vector<TossState> states = pattern_states(pattern, m);
  std::cout << state_cycle_line(states, pattern) << "\n";
  return kExitOk;
}

int cmd_graph(int balls, int max_throw, const std::string& format) {
  const StateGraph graph = build_state_graph(balls, max_throw);
  std::cout << (format == "json" ? export_graph_json(graph)
                                 : export_dot(graph));
  return kExitOk;
}

TransitionKernel make_kernel(const StateGraph& graph,
                             const std::string& kernel_path) {
  if (kernel_path.empty()) {
    return uniform_kernel(graph);
  }
  return load_kernel(graph, read_file(kernel_path));
}

void print_distribution(const StateGraph& graph,
                        const StateDistribution& dist) {
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    std::cout << graph.node_ids[i] << "\t";
    if (dist.mode == StateDistribution::Mode::rational) {
      std::cout << dist.rational_weights[i].get_str() << "\t"
                << format_double(dist.as_double(i));
    } else {
      std::cout << format_double(dist.float_weights[i]);
    }
    std::cout << "\n";
  }
}

int cmd_stationary(int balls, int max_throw, const std::string& kernel_path,
                   const std::string& method, double tolerance,
                   std::int64_t max_iterations) {
  if (method == "formula") {
    if (!kernel_path.empty()) {
      throw std::invalid_argument(
          "--method formula applies only to the uniform kernel");
    }
    const StateGraph graph = build_state_graph(balls, max_throw);
    print_distribution(graph, warrington_distribution(balls, max_throw));
    return kExitOk;
  }
  const StateGraph graph = build_state_graph(balls, max_throw);
  const TransitionKernel kernel = make_kernel(graph, kernel_path);
  if (method == "exact") {
    print_distribution(graph, stationary_exact(kernel));
  } else if (method == "numeric") {
    print_distribution(graph,
                       stationary_numeric(kernel, tolerance, max_iterations));
  } else {
    throw std::invalid_argument("unknown method \"" + method + "\"");
  }
  return kExitOk;
}

int cmd_walk(int balls, int max_throw, std::int64_t steps, std::uint64_t seed,
             const std::string& kernel_path) {
  const StateGraph graph = build_state_graph(balls, max_throw);
  const TransitionKernel kernel = make_kernel(graph, kernel_path);

  // Start from the ground state {0,...,k-1}.
  std::uint64_t ground_mask = 0;
  for (int i = 0; i < balls; ++i)
    ground_mask |= 1ULL << i;
  const std::uint32_t start =
      graph.index_of(TossState(ground_mask, max_throw).id());

  const WalkTrace trace = sample_walk(kernel, start, steps, seed);
  const StateDistribution empirical = empirical_frequencies(trace);
  const StateDistribution exact = stationary_exact(kernel);

  std::cout << "generator: " << trace.generator << "\n"
            << "seed: " << trace.seed << "\n"
            << "steps: " << steps << "\n";
  print_distribution(graph, empirical);
  std::cout << "tv_distance_to_exact: "
            << format_double(total_variation(empirical, exact)) << "\n";
  return kExitOk;
}

int cmd_transition(const std::string& from_id, const std::string& to_id,
                   int balls, int max_throw) {
  const TossState from = parse_state_id(from_id, max_throw);
  const TossState to = parse_state_id(to_id, max_throw);
  if (from.size() != balls || to.size() != balls) {
    throw std::invalid_argument("states do not match --balls");
  }
  const std::vector<int> throws = find_transition(from, to);
  std::cout << "length: " << throws.size() << "\n";
  std::string text;
  for (const int t : throws)
    text.push_back(throw_char(t));
  std::cout << "throws: " << (text.empty() ? "(none)" : text) << "\n";
  return kExitOk;
}

int cmd_poi_graph(const std::string& format) {
  const StateGraph graph = build_poi_graph();
  std::cout << (format == "json" ? export_graph_json(graph)
                                 : export_dot(graph));
  return kExitOk;
}

int cmd_poi_run(const std::string& word_text, const std::string& start_id) {
  const PoiWord word = parse_poi_word(word_text);
  const PoiState start =
      start_id.empty() ? kGroundLeftUp : parse_poi_state_id(start_id);
  const WordRun run = run_word(start, word);
  for (std::size_t i = 0; i < run.trajectory.size(); ++i) {
    std::cout << run.trajectory[i].id();
    if (i + 1 < run.trajectory.size()) {
      std::cout << "  -"
                << static_cast<char>(word[i]) << "->";
    }
    std::cout << "\n";
  }
  std::cout << "closes: " << (is_cycle(start, word) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_poi_entry(const std::string& word_text) {
  const PoiWord word = parse_poi_word(word_text);
  const EntryResult entry = find_entry(word);
  if (entry.entry.empty()) {
    std::cout << "the cycle contains a ground state; no entry needed\n";
  } else {
    std::cout << "entry: " << render_poi_word(entry.entry) << "\n";
  }
  std::cout << "ground: " << entry.ground.id() << "\n"
            << "anchor: " << entry.anchor.id() << "\n";
  return kExitOk;
}

int cmd_poi_stationary(const std::string& p_r_text) {
  const Rational p_r = parse_probability(p_r_text);
  const StateGraph graph = build_poi_graph();
  const TransitionKernel kernel = poi_kernel(graph, p_r);
  print_distribution(graph, stationary_exact(kernel));
  return kExitOk;
}

int cmd_combine(const std::string& pattern_text, const std::string& word_text,
                int max_throw, const std::string& format) {
  const SiteswapPattern pattern = parse_siteswap(pattern_text);
  const PoiWord word = parse_poi_word(word_text);
  const int m = max_throw > 0 ? max_throw : std::max(pattern.max_throw(), 1);
  const CombinedPattern combined = combine(pattern, word, m);

  if (format == "json") {
    std::cout << export_timeline_json(combined);
    return kExitOk;
  }
  std::cout << "toss: " << combined.toss.render() << "\n"
            << "word: " << render_poi_word(combined.spin) << "\n"
            << "notation_period: " << combined.notation_period << "\n"
            << "full_period: " << combined.full_period << "\n"
            << "poi_start: " << combined.poi_start.id() << "\n";
  for (const TimelineEntry& entry : combined.timeline) {
    std::cout << entry.beat << "\t" << throw_char(entry.throw_value) << "\t"
              << static_cast<char>(entry.label) << "\t{"
              << entry.toss_before.id() << "}\t" << entry.poi_before.id()
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-graph engine for toss and spin juggling"};
  app.require_subcommand(1);

  // validate
  std::string pattern_text;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check siteswap notation");
  validate_cmd->add_option("pattern", pattern_text, "siteswap text")
      ->required();

  // states
  std::string states_pattern;
  int states_max_throw = 0;
  auto* states_cmd =
      app.add_subcommand("states", "State cycle of a valid pattern");
  states_cmd->add_option("pattern", states_pattern, "siteswap text")
      ->required();
  states_cmd->add_option("--max-throw", states_max_throw,
                         "state capacity (default: largest throw)");

  // graph
  int graph_balls = 0, graph_max_throw = 0;
  std::string graph_format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "Full toss state graph");
  graph_cmd->add_option("--balls", graph_balls, "particle count")->required();
  graph_cmd->add_option("--max-throw", graph_max_throw, "maximum throw")
      ->required();
  graph_cmd->add_option("--format", graph_format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  // stationary
  int stat_balls = 0, stat_max_throw = 0;
  std::string stat_kernel, stat_method = "exact";
  double stat_tolerance = 1e-12;
  std::int64_t stat_max_iterations = 1000000;
  auto* stat_cmd =
      app.add_subcommand("stationary", "Stationary distribution table");
  stat_cmd->add_option("--balls", stat_balls, "particle count")->required();
  stat_cmd->add_option("--max-throw", stat_max_throw, "maximum throw")
      ->required();
  stat_cmd->add_option("--kernel", stat_kernel, "kernel JSON file");
  stat_cmd->add_option("--method", stat_method, "formula|exact|numeric")
      ->check(CLI::IsMember({"formula", "exact", "numeric"}));
  stat_cmd->add_option("--tolerance", stat_tolerance,
                       "numeric convergence tolerance");
  stat_cmd->add_option("--max-iterations", stat_max_iterations,
                       "numeric iteration budget");

  // walk
  int walk_balls = 0, walk_max_throw = 0;
  std::int64_t walk_steps = 0;
  std::uint64_t walk_seed = 0;
  std::string walk_kernel;
  auto* walk_cmd =
      app.add_subcommand("walk", "Seeded random walk and its frequencies");
  walk_cmd->add_option("--balls", walk_balls, "particle count")->required();
  walk_cmd->add_option("--max-throw", walk_max_throw, "maximum throw")
      ->required();
  walk_cmd->add_option("--steps", walk_steps, "number of steps")->required();
  walk_cmd->add_option("--seed", walk_seed, "generator seed")->required();
  walk_cmd->add_option("--kernel", walk_kernel, "kernel JSON file");

  // transition
  std::string trans_from, trans_to;
  int trans_balls = 0, trans_max_throw = 0;
  auto* trans_cmd =
      app.add_subcommand("transition", "Shortest throw sequence between states");
  trans_cmd->add_option("--from", trans_from, "source state, e.g. 0,1,3")
      ->required();
  trans_cmd->add_option("--to", trans_to, "target state")->required();
  trans_cmd->add_option("--balls", trans_balls, "particle count")->required();
  trans_cmd->add_option("--max-throw", trans_max_throw, "maximum throw")
      ->required();

  // poi
  auto* poi_cmd = app.add_subcommand("poi", "Poi spin state machine");
  poi_cmd->require_subcommand(1);

  std::string poi_graph_format = "dot";
  auto* poi_graph_cmd = poi_cmd->add_subcommand("graph", "Poi state graph");
  poi_graph_cmd->add_option("--format", poi_graph_format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string poi_run_word, poi_run_start;
  auto* poi_run_cmd = poi_cmd->add_subcommand("run", "Trace a label word");
  poi_run_cmd->add_option("--word", poi_run_word, "word over R/B")->required();
  poi_run_cmd->add_option("--start", poi_run_start,
                          "start state id (default: ground, left hand up)");

  std::string poi_entry_word;
  auto* poi_entry_cmd =
      poi_cmd->add_subcommand("entry", "Entry from ground into a pattern");
  poi_entry_cmd->add_option("--word", poi_entry_word, "word over R/B")
      ->required();

  std::string poi_p_r;
  auto* poi_stat_cmd =
      poi_cmd->add_subcommand("stationary", "Stationary distribution");
  poi_stat_cmd
      ->add_option("--p-r", poi_p_r, "crossing probability, e.g. 0.3 or 3/10")
      ->required();

  // combine
  std::string combine_pattern, combine_word, combine_format = "table";
  int combine_max_throw = 0;
  auto* combine_cmd =
      app.add_subcommand("combine", "Combine a siteswap with a poi word");
  combine_cmd->add_option("pattern", combine_pattern, "siteswap text")
      ->required();
  combine_cmd->add_option("--word", combine_word, "word over R/B")->required();
  combine_cmd->add_option("--max-throw", combine_max_throw,
                          "state capacity (default: largest throw)");
  combine_cmd->add_option("--format", combine_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (*validate_cmd)
      return cmd_validate(pattern_text);
    if (*states_cmd)
      return cmd_states(states_pattern, states_max_throw);
    if (*graph_cmd)
      return cmd_graph(graph_balls, graph_max_throw, graph_format);
    if (*stat_cmd)
      return cmd_stationary(stat_balls, stat_max_throw, stat_kernel,
                            stat_method, stat_tolerance, stat_max_iterations);
    if (*walk_cmd)
      return cmd_walk(walk_balls, walk_max_throw, walk_steps, walk_seed,
                      walk_kernel);
    if (*trans_cmd)
      return cmd_transition(trans_from, trans_to, trans_balls,
                            trans_max_throw);
    if (*poi_graph_cmd)
      return cmd_poi_graph(poi_graph_format);
    if (*poi_run_cmd)
      return cmd_poi_run(poi_run_word, poi_run_start);
    if (*poi_entry_cmd)
      return cmd_poi_entry(poi_entry_word);
    if (*poi_stat_cmd)
      return cmd_poi_stationary(poi_p_r);
    if (*combine_cmd)
      return cmd_combine(combine_pattern, combine_word, combine_max_throw,
                         combine_format);
    std::cerr << "no subcommand\n";
    return kExitUserError;
  } catch (const NotIrreducible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  } catch (const NoCycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  }
}
