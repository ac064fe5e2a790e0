//
// random_walk.h
//
// Random walks on state graphs: transition kernels, exact rational and
// numeric stationary distributions, the closed-form visit frequencies of
// uniform random juggling, and seeded sampling.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_RANDOM_WALK_H_
#define JUGGLEGRAPH_RANDOM_WALK_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jugglegraph/state_graph.h"
#include "jugglegraph/toss.h"

namespace juggle {

using BigInt = mpz_class;
using Rational = mpq_class;

// Per-state probability assignment over outgoing edge labels (the dice).
// probabilities[node][i] belongs to graph->edges[node][i].
struct TransitionKernel {
  const StateGraph* graph = nullptr;
  std::vector<std::vector<Rational>> probabilities;
};

// Checks shape, non-negativity and per-node sums (within 1e-12), then
// renormalizes each node's probabilities to sum to exactly 1.
// Throws std::invalid_argument on violation.
void validate_kernel(TransitionKernel& kernel);

// Probability 1/out-degree on every outgoing edge.
TransitionKernel uniform_kernel(const StateGraph& graph);

// A probability vector over graph nodes, rational or floating, aligned with
// the graph's node order.
struct StateDistribution {
  enum class Mode { rational, floating };

  Mode mode = Mode::rational;
  std::vector<Rational> rational_weights;
  std::vector<double> float_weights;

  std::size_t size() const {
    return mode == Mode::rational ? rational_weights.size()
                                  : float_weights.size();
  }
  double as_double(std::size_t i) const {
    return mode == Mode::rational ? rational_weights[i].get_d()
                                  : float_weights[i];
  }
};

// Thrown when the kernel's support graph has more than one closed
// communicating class; the classes are reported as node index lists.
class NotIrreducible : public std::runtime_error {
 public:
  NotIrreducible(const std::string& msg,
                 std::vector<std::vector<std::uint32_t>> classes)
      : std::runtime_error(msg), closed_classes(std::move(classes)) {}

  std::vector<std::vector<std::uint32_t>> closed_classes;
};

class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& msg, std::int64_t iterations)
      : std::runtime_error(msg), iterations_(iterations) {}
  std::int64_t iterations() const { return iterations_; }

 private:
  std::int64_t iterations_;
};

// The unique probability vector pi with pi = pi P, solved in exact rational
// arithmetic. Transient states (outside the single closed class) get weight
// zero. Throws NotIrreducible when the closed class is not unique.
StateDistribution stationary_exact(const TransitionKernel& kernel);

// Power iteration from the uniform vector until successive iterates differ by
// less than `tolerance` in L1. Iterates are averaged over one period window
// of the chain, so deterministic cycles converge too. Throws NoConvergence
// after max_iterations matrix-vector products, NotIrreducible as above.
StateDistribution stationary_numeric(const TransitionKernel& kernel,
                                     double tolerance,
                                     std::int64_t max_iterations);

// Stirling number of the second kind S(n, j), by the recurrence
// S(n, j) = j S(n-1, j) + S(n-1, j-1). Requires 0 <= j <= n.
BigInt stirling2(int n, int j);

// Exact long-run visit frequency of a state under uniform random juggling
// with `balls` particles and maximum throw `max_throw`:
// the product over x in B of |{x,...,m} \ B|, divided by S(m+1, m+1-k).
Rational warrington_frequency(const TossState& state, int balls,
                              int max_throw);

// The closed-form stationary distribution over all states of the (k, m)
// graph, in the node order of build_state_graph.
StateDistribution warrington_distribution(int balls, int max_throw);

// Record of a seeded random walk. `steps[i]` holds the chosen edge label and
// the node reached at step i+1.
struct WalkTrace {
  const StateGraph* graph = nullptr;
  std::uint64_t seed = 0;
  std::uint32_t start = 0;
  std::string generator;  // pseudo-random algorithm name
  std::vector<std::pair<char, std::uint32_t>> steps;
};

// Deterministic seeded walk: a mersenne twister (mt19937_64) drives
// cumulative inversion over each node's outgoing labels in ascending order.
// Throws std::out_of_range on a bad start node.
WalkTrace sample_walk(const TransitionKernel& kernel, std::uint32_t start,
                      std::int64_t steps, std::uint64_t seed);

// Visit counts divided by trace length, as exact rationals.
// Throws std::invalid_argument on an empty trace.
StateDistribution empirical_frequencies(const WalkTrace& trace);

// Total-variation distance between two distributions over the same node set.
double total_variation(const StateDistribution& a, const StateDistribution& b);

}  // namespace juggle

#endif  // JUGGLEGRAPH_RANDOM_WALK_H_
