#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssbp/graph.hpp"
#include "ssbp/thresholds.hpp"

namespace ssbp {

struct SplitCounters {
  std::uint64_t edge_evals = 0;      // I(w(u,v)) while scanning
  std::uint64_t group_evals = 0;     // I(h(u)) for group maxima, initial and re-bucketing
  std::uint64_t brute_searches = 0;  // linear scans of a group
  std::uint64_t bucket_ops = 0;
  std::uint64_t touched = 0;
  std::uint64_t r_removed = 0;       // cross-level + below-level edges under the final levels
};

/// What the split evaluated, kept for post-hoc lemma checks.
struct SplitTrace {
  std::vector<EdgeIndex> evaluated_edges;
  std::vector<std::uint32_t> group_evals;           // per group
  std::vector<std::vector<NodeId>> group_members;   // initializing members per group
};

struct SplitResult {
  std::vector<std::uint32_t> levels;  // I(d(v)) per node
  SplitCounters counters;
  std::size_t s = 0;
  std::size_t b = 0;
  bool scan_order_monotone = true;
  bool rebucket_strictly_lower = true;
  std::optional<SplitTrace> trace;
};

/// Group size used by the split: ceil(log2 l) clamped to [1, n].
std::size_t split_group_size(std::size_t l, std::size_t n) noexcept;

/// Assigns every node its level I(d(v)) without computing d, evaluating indices
/// lazily: an edge's index only when it can lower the label passed across it, and
/// a capacity's index only when it is the maximum of its tree-partition group.
/// The graph must be weakly connected and `th` non-empty.
SplitResult split_levels(const CsssbpInstance& inst, const Thresholds& th, bool keep_trace = false);

struct SplitLemmaReport {
  std::uint64_t lazy_edge_violations = 0;   // evaluated edges that stay in some child
  std::uint64_t group_lemma_violations = 0; // groups evaluated more than their distinct levels
};

/// Classifies a traced split against its own final levels.
SplitLemmaReport check_split_lemmas(const CsssbpInstance& inst, const Thresholds& th,
                                    const SplitResult& split);

}  // namespace ssbp
