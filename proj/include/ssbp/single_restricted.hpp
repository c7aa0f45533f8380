#pragma once

#include <cstdint>
#include <vector>

#include "ssbp/graph.hpp"

namespace ssbp {

/// Strongly-connected components contracted to a DAG.
struct CondensedDag {
  std::vector<std::uint32_t> component;  // per node
  std::uint32_t num_components = 0;
  /// Component ids in topological order (sources first).
  std::vector<std::uint32_t> topo_order;
  /// Edges between distinct components, with the largest weight key among the
  /// original edges they stand for.
  std::vector<Edge> edges;
  /// Largest initial capacity among each component's members.
  std::vector<TieKey> capacity;
};

/// Tarjan's algorithm with an explicit stack. `skip_edge`, if set, is treated as
/// absent. `touched` accumulates visited nodes and edges.
CondensedDag condense(const CsssbpInstance& inst, std::int64_t skip_edge, std::uint64_t& touched);

/// Instances whose edges are all unrestricted: d(v) is the largest h(u) over the
/// nodes u that reach v. Linear time. Throws std::invalid_argument otherwise.
BottleneckResult solve_zero_restricted(const CsssbpInstance& inst,
                                       std::uint64_t* touched = nullptr);

/// Instances with exactly one restricted edge (u0, v0): solve without it, then
/// raise everything reachable from v0 to min(d(u0), w(u0, v0)). Linear time.
BottleneckResult solve_one_restricted(const CsssbpInstance& inst,
                                      std::uint64_t* touched = nullptr);

}  // namespace ssbp
