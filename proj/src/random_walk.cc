//
// random_walk.cc
//
// Random walks on state graphs: kernels, stationary distributions, the
// closed-form frequencies, and seeded sampling.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/random_walk.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace juggle {

namespace {

constexpr double kSumSlack = 1e-12;

}  // namespace

void validate_kernel(TransitionKernel& kernel) {
  if (kernel.graph == nullptr) {
    throw std::invalid_argument("kernel has no graph");
  }
  const StateGraph& graph = *kernel.graph;
  if (kernel.probabilities.size() != graph.node_count()) {
    throw std::invalid_argument("kernel row count does not match graph");
  }
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    auto& row = kernel.probabilities[u];
    if (row.size() != graph.edges[u].size()) {
      throw std::invalid_argument("kernel row length does not match out-edges"
                                  " of state \"" + graph.node_ids[u] + "\"");
    }
    Rational sum = 0;
    for (const Rational& p : row) {
      if (p < 0) {
        throw std::invalid_argument("negative probability at state \"" +
                                    graph.node_ids[u] + "\"");
      }
      sum += p;
    }
    if (std::abs(sum.get_d() - 1.0) > kSumSlack) {
      throw std::invalid_argument("probabilities at state \"" +
                                  graph.node_ids[u] + "\" sum to " +
                                  sum.get_str() + ", not 1");
    }
    if (sum != 1) {
      for (Rational& p : row) {
        p /= sum;
      }
    }
  }
}

TransitionKernel uniform_kernel(const StateGraph& graph) {
  TransitionKernel kernel;
  kernel.graph = &graph;
  kernel.probabilities.resize(graph.node_count());
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    const std::size_t degree = graph.edges[u].size();
    assert(degree > 0);
    kernel.probabilities[u].assign(degree,
                                   Rational(1, static_cast<long>(degree)));
  }
  return kernel;
}

namespace {

// Adjacency restricted to positive-probability edges.
std::vector<std::vector<std::uint32_t>> support_adjacency(
    const TransitionKernel& kernel) {
  const StateGraph& graph = *kernel.graph;
  std::vector<std::vector<std::uint32_t>> adj(graph.node_count());
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    for (std::size_t i = 0; i < graph.edges[u].size(); ++i) {
      if (kernel.probabilities[u][i] > 0) {
        adj[u].push_back(graph.edges[u][i].to);
      }
    }
  }
  return adj;
}

// Strongly connected components, iterative Tarjan. Returns component index
// per node.
std::vector<std::uint32_t> scc_components(
    const std::vector<std::vector<std::uint32_t>>& adj,
    std::uint32_t* component_count) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0, components = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset)
      continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& frame = call.back();
      const std::uint32_t u = frame.node;
      if (frame.edge == 0) {
        index[u] = low[u] = next_index++;
        stack.push_back(u);
        on_stack[u] = true;
      }
      bool descended = false;
      while (frame.edge < adj[u].size()) {
        const std::uint32_t v = adj[u][frame.edge++];
        if (index[v] == kUnset) {
          call.push_back({v, 0});
          descended = true;
          break;
        }
        if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
      }
      if (descended)
        continue;
      if (low[u] == index[u]) {
        while (true) {
          const std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
          if (w == u)
            break;
        }
        ++components;
      }
      call.pop_back();
      if (!call.empty()) {
        low[call.back().node] = std::min(low[call.back().node], low[u]);
      }
    }
  }
  *component_count = components;
  return comp;
}

// Closed communicating classes of the support graph: SCCs with no outgoing
// edge to another SCC.
std::vector<std::vector<std::uint32_t>> closed_classes(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  std::uint32_t count = 0;
  const std::vector<std::uint32_t> comp = scc_components(adj, &count);
  std::vector<bool> closed(count, true);
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    for (const std::uint32_t v : adj[u]) {
      if (comp[v] != comp[u]) {
        closed[comp[u]] = false;
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> classes(count);
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    if (closed[comp[u]]) {
      classes[comp[u]].push_back(u);
    }
  }
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return classes;
}

std::vector<std::uint32_t> require_unichain(const TransitionKernel& kernel) {
  const auto adj = support_adjacency(kernel);
  auto classes = closed_classes(adj);
  if (classes.size() != 1) {
    std::ostringstream oss;
    oss << "chain has " << classes.size()
        << " closed communicating classes; the stationary distribution is"
           " not unique";
    throw NotIrreducible(oss.str(), std::move(classes));
  }
  return classes.front();
}

// Period of the chain restricted to its closed class: the gcd over in-class
// support edges (u, v) of depth(u) + 1 - depth(v) from a BFS.
std::int64_t chain_period(const std::vector<std::vector<std::uint32_t>>& adj,
                          const std::vector<std::uint32_t>& closed_class) {
  std::vector<std::int64_t> depth(adj.size(), -1);
  std::vector<std::uint32_t> queue{closed_class.front()};
  depth[closed_class.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (const std::uint32_t v : adj[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::int64_t g = 0;
  for (const std::uint32_t u : closed_class) {
    for (const std::uint32_t v : adj[u]) {
      g = std::gcd(g, depth[u] + 1 - depth[v]);
    }
  }
  return std::max<std::int64_t>(g, 1);
}

// Solve the overdetermined exact system [P^T - I; 1^T] pi = [0; 1] by
// Gaussian elimination.
std::vector<Rational> solve_stationary(const TransitionKernel& kernel) {
  const StateGraph& graph = *kernel.graph;
  const std::size_t n = graph.node_count();
  const std::size_t rows = n + 1, cols = n + 1;  // last column = rhs

  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < graph.edges[u].size(); ++i) {
      a[graph.edges[u][i].to][u] += kernel.probabilities[u][i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] -= 1;
    a[n][i] = 1;
  }
  a[n][n] = 1;  // normalization rhs

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows)
      continue;
    std::swap(a[rank], a[pivot]);
    const Rational inv = a[rank][col];
    for (std::size_t c = col; c < cols; ++c) {
      a[rank][c] /= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][col] != 0) {
        const Rational factor = a[r][col];
        for (std::size_t c = col; c < cols; ++c) {
          a[r][c] -= factor * a[rank][c];
        }
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r) {
    if (a[r][n] != 0) {
      throw std::logic_error("stationary system inconsistent");
    }
  }
  if (rank != n) {
    throw std::logic_error("stationary system underdetermined");
  }

  std::vector<Rational> pi(n, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    pi[pivot_col[r]] = a[r][n];
  }
  return pi;
}

}  // namespace

StateDistribution stationary_exact(const TransitionKernel& kernel) {
  require_unichain(kernel);
  std::vector<Rational> pi = solve_stationary(kernel);

  // pi P = pi must hold exactly.
  const StateGraph& graph = *kernel.graph;
  std::vector<Rational> check(pi.size(), 0);
  Rational total = 0;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    if (pi[u] < 0) {
      throw std::logic_error("negative stationary weight");
    }
    total += pi[u];
    for (std::size_t i = 0; i < graph.edges[u].size(); ++i) {
      check[graph.edges[u][i].to] += pi[u] * kernel.probabilities[u][i];
    }
  }
  if (total != 1 || check != pi) {
    throw std::logic_error("stationary solution failed verification");
  }

  StateDistribution dist;
  dist.mode = StateDistribution::Mode::rational;
  dist.rational_weights = std::move(pi);
  return dist;
}

StateDistribution stationary_numeric(const TransitionKernel& kernel,
                                     double tolerance,
                                     std::int64_t max_iterations) {
  if (tolerance <= 0) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  const std::vector<std::uint32_t> closed = require_unichain(kernel);
  const auto adj = support_adjacency(kernel);
  const std::int64_t period = chain_period(adj, closed);

  const StateGraph& graph = *kernel.graph;
  const std::size_t n = graph.node_count();

  // Edge probabilities as doubles, once.
  std::vector<std::vector<double>> prob(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    prob[u].reserve(graph.edges[u].size());
    for (const Rational& p : kernel.probabilities[u]) {
      prob[u].push_back(p.get_d());
    }
  }

  const auto step = [&](const std::vector<double>& v) {
    std::vector<double> next(n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u) {
      const double w = v[u];
      if (w == 0.0)
        continue;
      for (std::size_t i = 0; i < graph.edges[u].size(); ++i) {
        next[graph.edges[u][i].to] += w * prob[u][i];
      }
    }
    return next;
  };

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> window_avg(n, 0.0);
  bool have_previous = false;
  std::vector<double> previous_avg;
  std::int64_t used = 0;

  while (used < max_iterations) {
    // One period window, averaged.
    std::fill(window_avg.begin(), window_avg.end(), 0.0);
    for (std::int64_t j = 0; j < period; ++j) {
      v = step(v);
      ++used;
      for (std::size_t i = 0; i < n; ++i) {
        window_avg[i] += v[i];
      }
      if (used >= max_iterations && j + 1 < period) {
        throw NoConvergence("power iteration did not converge", used);
      }
    }
    for (double& x : window_avg) {
      x /= static_cast<double>(period);
    }

    if (have_previous) {
      double l1 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        l1 += std::abs(window_avg[i] - previous_avg[i]);
      }
      if (l1 < tolerance) {
        double sum = std::accumulate(window_avg.begin(), window_avg.end(), 0.0);
        StateDistribution dist;
        dist.mode = StateDistribution::Mode::floating;
        dist.float_weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          dist.float_weights[i] = window_avg[i] / sum;
        }
        return dist;
      }
    }
    previous_avg = window_avg;
    have_previous = true;
  }
  throw NoConvergence("power iteration did not converge", used);
}

BigInt stirling2(int n, int j) {
  if (n < 0 || j < 0 || j > n) {
    std::ostringstream oss;
    oss << "stirling2 parameters out of range: n " << n << ", j " << j;
    throw std::invalid_argument(oss.str());
  }
  // row-by-row recurrence; row[i] = S(r, i)
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int r = 1; r <= n; ++r) {
    for (int i = std::min(r, j); i >= 1; --i) {
      row[i] = i * row[i] + row[i - 1];
    }
    row[0] = 0;  // S(r, 0) = 0 for r > 0
  }
  return row[j];
}

namespace {

// The numerator of the closed formula: the product over elements x of the
// state of |{x,...,m} \ B|.
BigInt frequency_numerator(const TossState& state) {
  const int m = state.capacity();
  BigInt product = 1;
  for (const int x : state.elements()) {
    int free_slots = 0;
    for (int y = x; y <= m; ++y) {
      if (!state.contains(y)) {  // y == m is always free
        ++free_slots;
      }
    }
    product *= free_slots;
  }
  return product;
}

}  // namespace

Rational warrington_frequency(const TossState& state, int balls,
                              int max_throw) {
  if (state.size() != balls || state.capacity() != max_throw) {
    std::ostringstream oss;
    oss << "state {" << state.id() << "} does not have " << balls
        << " particles with maximum throw " << max_throw;
    throw std::invalid_argument(oss.str());
  }
  Rational freq(frequency_numerator(state),
                stirling2(max_throw + 1, max_throw + 1 - balls));
  freq.canonicalize();
  return freq;
}

StateDistribution warrington_distribution(int balls, int max_throw) {
  if (balls < 1 || balls > max_throw || max_throw > kMaxThrowValue) {
    std::ostringstream oss;
    oss << "bad parameters: balls " << balls << ", max throw " << max_throw;
    throw std::invalid_argument(oss.str());
  }
  const StateGraph graph = build_state_graph(balls, max_throw);

  StateDistribution dist;
  dist.mode = StateDistribution::Mode::rational;
  dist.rational_weights.reserve(graph.node_count());
  Rational total = 0;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    dist.rational_weights.push_back(
        warrington_frequency(graph_state(graph, u), balls, max_throw));
    total += dist.rational_weights.back();
  }
  assert(total == 1);
  return dist;
}

WalkTrace sample_walk(const TransitionKernel& kernel, std::uint32_t start,
                      std::int64_t steps, std::uint64_t seed) {
  const StateGraph& graph = *kernel.graph;
  if (start >= graph.node_count()) {
    throw std::out_of_range("walk start node out of range");
  }
  if (steps < 0) {
    throw std::invalid_argument("step count must be >= 0");
  }

  // Per-node probabilities as doubles, in stored (ascending label) order.
  std::vector<std::vector<double>> prob(graph.node_count());
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    prob[u].reserve(kernel.probabilities[u].size());
    for (const Rational& p : kernel.probabilities[u]) {
      prob[u].push_back(p.get_d());
    }
  }

  WalkTrace trace;
  trace.graph = &graph;
  trace.seed = seed;
  trace.start = start;
  trace.generator = "mt19937_64";
  trace.steps.reserve(static_cast<std::size_t>(steps));

  std::mt19937_64 gen(seed);
  std::uint32_t at = start;
  for (std::int64_t s = 0; s < steps; ++s) {
    // 53-bit uniform draw in [0, 1), inverted through the cumulative
    // probabilities in ascending label order.
    const double u01 =
        static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const auto& out = graph.edges[at];
    std::size_t chosen = out.size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      cumulative += prob[at][i];
      if (u01 < cumulative) {
        chosen = i;
        break;
      }
    }
    at = out[chosen].to;
    trace.steps.emplace_back(out[chosen].label, at);
  }
  return trace;
}

StateDistribution empirical_frequencies(const WalkTrace& trace) {
  if (trace.steps.empty()) {
    throw std::invalid_argument("empty walk trace");
  }
  std::vector<long> counts(trace.graph->node_count(), 0);
  for (const auto& step : trace.steps) {
    ++counts[step.second];
  }
  StateDistribution dist;
  dist.mode = StateDistribution::Mode::rational;
  dist.rational_weights.reserve(counts.size());
  const long total = static_cast<long>(trace.steps.size());
  for (const long c : counts) {
    Rational w(c, total);
    w.canonicalize();
    dist.rational_weights.push_back(w);
  }
  return dist;
}

double total_variation(const StateDistribution& a,
                       const StateDistribution& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distributions cover different node sets");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::abs(a.as_double(i) - b.as_double(i));
  }
  return sum / 2.0;
}

}  // namespace juggle
