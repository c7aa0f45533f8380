#pragma once

#include <cstdint>

#include "ssbp/graph.hpp"

namespace ssbp {

/// Max-min Dijkstra with a binary heap. `heap_comparisons`, when given, receives
/// the number of key comparisons the heap performed.
BottleneckResult dijkstra_ssbp(const SsbpInstance& inst, std::uint64_t* heap_comparisons = nullptr);
BottleneckResult dijkstra_csssbp(const CsssbpInstance& inst,
                                 std::uint64_t* heap_comparisons = nullptr);

/// Reference answer by repeated sweeps of d(v) <- max(d(v), min(d(u), w(u,v)))
/// in edge-array order until nothing changes. O(n m).
BottleneckResult oracle_csssbp(const CsssbpInstance& inst);

/// Exhaustive simple-path enumeration. b(s,s) = +inf. Rejects n > 10.
BottleneckResult oracle_paths_ssbp(const SsbpInstance& inst);

inline constexpr std::size_t kPathOracleMaxNodes = 10;

}  // namespace ssbp
