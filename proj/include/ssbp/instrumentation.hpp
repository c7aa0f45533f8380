#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssbp {

/// Monotone work counters. One set per solve; never shared between solves.
struct CounterSet {
  std::uint64_t edge_index_evals = 0;   // I(w) evaluations while scanning edges
  std::uint64_t group_index_evals = 0;  // I(h) evaluations for group maxima
  std::uint64_t sort_comparisons = 0;
  std::uint64_t bucket_ops = 0;
  std::uint64_t touched_elements = 0;
  std::uint64_t brute_searches = 0;

  std::uint64_t index_evals() const noexcept { return edge_index_evals + group_index_evals; }

  CounterSet& operator+=(const CounterSet& o) noexcept;
  friend bool operator==(const CounterSet&, const CounterSet&) = default;
};

inline CounterSet snapshot(const CounterSet& c) { return c; }

/// Componentwise `later - earlier`. Throws std::logic_error if any counter went backwards.
CounterSet diff(const CounterSet& later, const CounterSet& earlier);

/// One split call of the recursive solver (base-case calls are only aggregated).
struct CallRecord {
  std::uint32_t depth = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t restricted = 0;  // |E^(r)|
  std::uint64_t l = 0;           // thresholds
  std::uint64_t r = 0;           // edges absent from every child
  std::uint64_t r_prime = 0;     // restricted edges absent from every child or made unrestricted
  std::uint64_t b = 0;           // tree-partition groups
  std::uint64_t s = 0;           // target group size
  std::uint64_t children = 0;
  std::uint64_t child_edges = 0;             // sum |E_i|
  std::uint64_t child_restricted = 0;        // sum |E_i^(r)|
  std::uint64_t max_child_restricted = 0;
  CounterSet counters;

  // Post-hoc lemma checks; only filled when the solver runs with lemma checks on.
  bool lemma_checked = false;
  std::uint64_t lazy_edge_violations = 0;
  std::uint64_t group_lemma_violations = 0;
  bool scan_order_monotone = true;
  bool rebucket_strictly_lower = true;

  friend bool operator==(const CallRecord&, const CallRecord&) = default;
};

struct SolveStats {
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_depth = 0;
  std::uint64_t split_calls = 0;
  std::uint64_t base_calls = 0;
  std::uint64_t sum_b = 0;
  std::uint64_t top_n = 0;
  std::uint64_t top_m = 0;
  CounterSet totals;
  std::vector<CallRecord> calls;  // empty unless per-call recording is on

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

/// Every counter inequality the analysis promises, evaluated over the per-call
/// records and the aggregates. Returns one message per violated bound.
std::vector<std::string> check_bounds(const SolveStats& stats);

enum class ReportLevel { none, summary, per_call };

/// Line-oriented `key=value` report. Per-call lines are prefixed `call=<i>`.
void write_report(std::ostream& out, const SolveStats& stats, ReportLevel level);

}  // namespace ssbp
