#include "ssbp/instrumentation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ssbp {

CounterSet& CounterSet::operator+=(const CounterSet& o) noexcept {
  edge_index_evals += o.edge_index_evals;
  group_index_evals += o.group_index_evals;
  sort_comparisons += o.sort_comparisons;
  bucket_ops += o.bucket_ops;
  touched_elements += o.touched_elements;
  brute_searches += o.brute_searches;
  return *this;
}

CounterSet diff(const CounterSet& later, const CounterSet& earlier) {
  auto sub = [](std::uint64_t a, std::uint64_t b, const char* name) {
    if (a < b) throw std::logic_error(std::string("counter ") + name + " decreased");
    return a - b;
  };
  CounterSet out;
  out.edge_index_evals = sub(later.edge_index_evals, earlier.edge_index_evals, "edge_index_evals");
  out.group_index_evals =
      sub(later.group_index_evals, earlier.group_index_evals, "group_index_evals");
  out.sort_comparisons = sub(later.sort_comparisons, earlier.sort_comparisons, "sort_comparisons");
  out.bucket_ops = sub(later.bucket_ops, earlier.bucket_ops, "bucket_ops");
  out.touched_elements = sub(later.touched_elements, earlier.touched_elements, "touched_elements");
  out.brute_searches = sub(later.brute_searches, earlier.brute_searches, "brute_searches");
  return out;
}

namespace {

std::string call_name(std::size_t i, const CallRecord& c) {
  return "call " + std::to_string(i) + " (depth " + std::to_string(c.depth) + ", n=" +
         std::to_string(c.n) + ", m=" + std::to_string(c.m) + ")";
}

}  // namespace

std::vector<std::string> check_bounds(const SolveStats& stats) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };

  CounterSet summed;
  std::uint64_t sum_b = 0;
  std::uint32_t deepest = 0;
  for (std::size_t i = 0; i < stats.calls.size(); ++i) {
    const CallRecord& c = stats.calls[i];
    const CounterSet& k = c.counters;
    summed += k;
    sum_b += c.b;
    deepest = std::max(deepest, c.depth);
    const std::string who = call_name(i, c);

    if (k.edge_index_evals > c.r) {
      fail(who + ": edge_index_evals " + std::to_string(k.edge_index_evals) + " > r " +
           std::to_string(c.r));
    }
    if (k.group_index_evals > c.r + c.b) {
      fail(who + ": group_index_evals " + std::to_string(k.group_index_evals) + " > r + b " +
           std::to_string(c.r + c.b));
    }
    if (k.index_evals() > 2 * c.r + c.b) {
      fail(who + ": index evaluations " + std::to_string(k.index_evals()) + " > 2r + b " +
           std::to_string(2 * c.r + c.b));
    }
    if (c.m != c.child_edges + c.r) fail(who + ": edge conservation m = sum|E_i| + r broken");
    if (c.restricted != c.child_restricted + c.r_prime) {
      fail(who + ": restricted conservation |E^(r)| = sum|E_i^(r)| + r' broken");
    }
    if (c.l == c.restricted && c.max_child_restricted > 1) {
      fail(who + ": all restricted edges were thresholds but a child kept " +
           std::to_string(c.max_child_restricted) + " restricted edges");
    }
    if (c.lemma_checked) {
      if (c.lazy_edge_violations != 0) {
        fail(who + ": " + std::to_string(c.lazy_edge_violations) +
             " evaluated edges are neither cross-level nor below-level");
      }
      if (c.group_lemma_violations != 0) {
        fail(who + ": " + std::to_string(c.group_lemma_violations) +
             " groups evaluated more often than their distinct final levels");
      }
      if (!c.scan_order_monotone) fail(who + ": scan bucket order increased");
      if (!c.rebucket_strictly_lower) fail(who + ": group re-bucketed at or above its bucket");
    }
  }

  if (stats.totals.index_evals() > 2 * stats.top_m + stats.sum_b) {
    fail("solve: total index evaluations " + std::to_string(stats.totals.index_evals()) +
         " > 2m + sum b " + std::to_string(2 * stats.top_m + stats.sum_b));
  }
  if (!stats.calls.empty()) {
    if (stats.calls.size() != stats.split_calls) fail("solve: call records != split_calls");
    if (sum_b != stats.sum_b) fail("solve: sum of per-call b != sum_b");
    if (deepest > stats.max_depth) fail("solve: per-call depth exceeds max_depth");
    if (summed.edge_index_evals != stats.totals.edge_index_evals ||
        summed.group_index_evals != stats.totals.group_index_evals ||
        summed.sort_comparisons != stats.totals.sort_comparisons ||
        summed.brute_searches != stats.totals.brute_searches) {
      fail("solve: aggregate counters disagree with per-call records");
    }
  }
  return out;
}

void write_report(std::ostream& out, const SolveStats& stats, ReportLevel level) {
  if (level == ReportLevel::none) return;
  const CounterSet& t = stats.totals;
  out << "k=" << stats.k << '\n'
      << "seed=" << stats.seed << '\n'
      << "n=" << stats.top_n << '\n'
      << "m=" << stats.top_m << '\n'
      << "max_depth=" << stats.max_depth << '\n'
      << "split_calls=" << stats.split_calls << '\n'
      << "base_calls=" << stats.base_calls << '\n'
      << "sum_b=" << stats.sum_b << '\n'
      << "total_index_evals=" << t.index_evals() << '\n'
      << "edge_index_evals=" << t.edge_index_evals << '\n'
      << "group_index_evals=" << t.group_index_evals << '\n'
      << "sort_comparisons=" << t.sort_comparisons << '\n'
      << "bucket_ops=" << t.bucket_ops << '\n'
      << "touched_elements=" << t.touched_elements << '\n'
      << "brute_searches=" << t.brute_searches << '\n';
  if (level != ReportLevel::per_call) return;
  for (std::size_t i = 0; i < stats.calls.size(); ++i) {
    const CallRecord& c = stats.calls[i];
    out << "call=" << i << " depth=" << c.depth << " n=" << c.n << " m=" << c.m
        << " restricted=" << c.restricted << " l=" << c.l << " r=" << c.r
        << " r_prime=" << c.r_prime << " b=" << c.b << " s=" << c.s
        << " children=" << c.children << " edge_index_evals=" << c.counters.edge_index_evals
        << " group_index_evals=" << c.counters.group_index_evals
        << " sort_comparisons=" << c.counters.sort_comparisons
        << " brute_searches=" << c.counters.brute_searches << '\n';
  }
}

}  // namespace ssbp
