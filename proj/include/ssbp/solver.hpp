#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "ssbp/graph.hpp"
#include "ssbp/instrumentation.hpp"
#include "ssbp/thresholds.hpp"

namespace ssbp {

/// Seedable generator behind threshold sampling (64-bit Mersenne Twister).
using Rng = std::mt19937_64;

struct SolverConfig {
  /// Thresholds sampled per call; 0 picks default_k(n) for the top-level n.
  /// Fixed for the whole recursion.
  std::uint64_t k = 0;
  std::uint64_t seed = 0x5eed5eed5eedULL;
  /// Abort when a call is deeper than this; 0 picks |E^(r)| + 1 of the top-level
  /// instance, which no run can exceed (each split drops at least one restricted edge).
  std::uint32_t depth_limit = 0;
  /// Keep one CallRecord per split call.
  bool record_calls = false;
  /// Trace every split and classify it against its final levels (implies record_calls).
  bool check_lemmas = false;
};

/// max(2, 2^ceil(sqrt(log2 n))).
std::uint64_t default_k(std::uint64_t n);

/// Picks l = min(k, |restricted|) distinct edges uniformly (partial Fisher-Yates)
/// and sorts their keys. Throws std::invalid_argument if fewer than 2 edges.
Thresholds sample_thresholds(std::span<const Edge> restricted, std::uint64_t k, Rng& rng,
                             std::uint64_t* sort_comparisons = nullptr);

/// One per-level child instance. `to_parent[local] == parent node id`.
struct SubInstance {
  std::uint32_t level = 0;
  std::vector<NodeId> to_parent;
  CsssbpInstance instance;
};

struct SubInstanceSet {
  std::vector<SubInstance> parts;  // non-empty levels only, ascending
  std::uint64_t r = 0;
  std::uint64_t r_prime = 0;
  std::uint64_t child_edges = 0;
  std::uint64_t child_restricted = 0;
  std::uint64_t max_child_restricted = 0;
};

/// Builds (G_i, w_i, h_i) for every level in one pass over nodes and edges:
/// keeps same-level edges of weight >= lambda_i, makes those >= lambda_{i+1}
/// unrestricted, and folds edges arriving from higher levels into h_i.
SubInstanceSet build_subinstances(const CsssbpInstance& inst, const Thresholds& th,
                                  std::span<const std::uint32_t> levels);

/// Randomized recursive solver. Throws std::runtime_error if the depth limit is hit.
std::pair<BottleneckResult, SolveStats> solve_csssbp(const CsssbpInstance& inst,
                                                     const SolverConfig& cfg = {});

/// SSBP through the CSSSBP reduction; b(s, s) is reported as +inf.
std::pair<BottleneckResult, SolveStats> solve_ssbp(const SsbpInstance& inst,
                                                   const SolverConfig& cfg = {});

}  // namespace ssbp
