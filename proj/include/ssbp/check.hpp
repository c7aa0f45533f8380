#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ssbp/solver.hpp"
#include "ssbp/text_format.hpp"

namespace ssbp {

/// The solver under test. Defaults to `solve_csssbp`; tests substitute broken
/// solvers to confirm divergences are caught.
using CsssbpSolver =
    std::function<std::pair<BottleneckResult, SolveStats>(const CsssbpInstance&, const SolverConfig&)>;

CsssbpSolver default_solver();

struct CheckFailure {
  std::string reason;
  std::string witness;  // the instance in the text graph format
};

struct CheckReport {
  std::size_t runs = 0;
  std::size_t passed = 0;
  std::optional<CheckFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Compares the recursive solver (once per seed) with Dijkstra and, when the
/// graph is small enough, the exhaustive oracles; also runs `check_bounds`.
/// An input without capacities is an SSBP instance rooted at `source`.
/// Stops at the first divergence.
CheckReport check_input(const GraphText& input, NodeId source, std::size_t seeds,
                        std::uint64_t base_seed, const CsssbpSolver& solver = default_solver());

/// Same checks on `count` random small instances (n <= 10).
CheckReport check_random(std::size_t count, std::uint64_t seed,
                         const CsssbpSolver& solver = default_solver());

}  // namespace ssbp
