#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssbp/graph.hpp"
#include "ssbp/solver.hpp"

namespace ssbp {

enum class Family { uniform_random, grid, path, complete, layered_dag };
enum class WeightDist { uniform_real, integer_ranks };

Family parse_family(const std::string& name);
WeightDist parse_weight_dist(const std::string& name);

/// Generator description. Edge counts per family:
///   uniform-random(n, m): exactly m edges, endpoints uniform (self-loops and
///                         parallel edges possible)
///   grid(rows, cols):     both directions of every horizontal/vertical
///                         neighbour pair, 2 * (rows(cols-1) + cols(rows-1))
///   path(n):              i -> i+1, n - 1 edges
///   complete(n):          every ordered pair u != v, n(n-1) edges
///   layered-dag(L, W):    every node of layer j to every node of layer j+1,
///                         (L-1) W^2 edges
/// Weights are uniform reals in [lo, hi] or a random permutation of 1..m.
struct GenSpec {
  Family family = Family::uniform_random;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t layers = 0;
  std::uint64_t width = 0;
  WeightDist weights = WeightDist::uniform_real;
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on an inconsistent spec.
Graph generate(const GenSpec& spec);

/// Small adversarial instances for cross-checking: duplicate weights, parallel
/// edges, self-loops, unrestricted edges and infinite capacities.
struct RandomInstanceOptions {
  std::size_t n = 8;
  std::size_t m = 16;
  std::uint32_t weight_levels = 0;       // > 0: integer weights 1..levels; 0: reals in [0, 1)
  double unrestricted_fraction = 0.0;
  double finite_capacity_fraction = 0.3; // remaining capacities are -inf or +inf
  double pos_inf_capacity_fraction = 0.05;
};

Graph random_graph(const RandomInstanceOptions& opt, Rng& rng);
std::vector<double> random_capacities(const RandomInstanceOptions& opt, Rng& rng);
CsssbpInstance random_csssbp(const RandomInstanceOptions& opt, Rng& rng);

}  // namespace ssbp
