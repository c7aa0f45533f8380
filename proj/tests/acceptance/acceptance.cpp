// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (0 when everything passes).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ssbp/baselines.hpp"
#include "ssbp/generators.hpp"
#include "ssbp/instrumentation.hpp"
#include "ssbp/single_restricted.hpp"
#include "ssbp/solver.hpp"
#include "ssbp/split.hpp"
#include "ssbp/tree_partition.hpp"

using namespace ssbp;

namespace {

// Pinned tolerances and sizes.
constexpr std::size_t kC1Instances = 10000;
constexpr std::size_t kC1MaxNodes = 8;
constexpr double kC1Seconds = 60.0;
constexpr std::size_t kC2InstancesPerConfig = 1000;
constexpr double kC2Seconds = 600.0;
constexpr std::size_t kC5Trees = 1000;
constexpr std::size_t kC5MaxNodes = 500;
constexpr std::size_t kC6Instances = 1000;
constexpr std::size_t kC6MaxNodes = 32;
constexpr std::size_t kC7Instances = 10000;
constexpr std::size_t kC7MaxNodes = 64;
constexpr std::uint64_t kC7TouchedFactor = 20;
constexpr std::size_t kC9Seeds = 100;
constexpr std::size_t kC9Nodes = 100000;
constexpr std::size_t kC9Edges = 400000;
constexpr std::size_t kC10ReplayC1 = 1000;
constexpr std::size_t kC10ReplayC2PerConfig = 10;
constexpr std::size_t kC11Nodes = 1000000;
constexpr std::size_t kC11Edges = 4000000;
constexpr double kC11Seconds = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
  std::printf("criterion %2d [PRIMARY] %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Runs a criterion body; an escaping exception is a failure, not a crash.
void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, pass, title, detail);
}

struct Solved {
  std::vector<TieKey> d;
  SolveStats stats;
};

// ---- criterion 1 instances ------------------------------------------------

SsbpInstance c1_instance(std::size_t idx) {
  Rng rng(0xC1000000ULL + idx);
  RandomInstanceOptions opt;
  opt.n = 1 + rng() % kC1MaxNodes;
  const std::size_t max_m = opt.n * opt.n + 2;  // sparse through dense, with parallel edges
  opt.m = rng() % (max_m + 1);
  opt.weight_levels = idx % 2 == 0 ? 1 + static_cast<std::uint32_t>(rng() % 4) : 0;
  Graph g = random_graph(opt, rng);
  return SsbpInstance(std::move(g), static_cast<NodeId>(rng() % opt.n));
}

SolverConfig c1_config(std::size_t idx) {
  SolverConfig cfg;
  cfg.seed = 0x5100 + idx;
  cfg.k = idx % 3 == 0 ? 2 : 0;
  cfg.check_lemmas = true;
  return cfg;
}

// ---- criterion 2 instances ------------------------------------------------

struct C2Config {
  std::size_t n;
  std::size_t m;
  const char* density;
};

std::vector<C2Config> c2_configs() {
  std::vector<C2Config> out;
  for (std::size_t n : {100, 1000, 10000}) {
    out.push_back({n, 4 * n, "4n"});
    out.push_back({n, static_cast<std::size_t>(std::llround(n * std::log2(double(n)))), "nlogn"});
  }
  return out;
}

CsssbpInstance c2_instance(const C2Config& c, std::size_t cfg_idx, std::size_t idx) {
  Rng rng(0xC2000000ULL + cfg_idx * 1000003ULL + idx);
  RandomInstanceOptions opt;
  opt.n = c.n;
  opt.m = c.m;
  opt.weight_levels = idx % 3 == 0 ? 16 : 0;
  opt.unrestricted_fraction = idx % 4 == 0 ? 0.1 : 0.0;
  opt.finite_capacity_fraction = idx % 2 == 0 ? 0.01 : 0.2;
  opt.pos_inf_capacity_fraction = idx % 5 == 0 ? 0.0 : 0.002;
  return random_csssbp(opt, rng);
}

SolverConfig c2_config(std::size_t cfg_idx, std::size_t idx) {
  SolverConfig cfg;
  cfg.seed = 0x5200 + cfg_idx * 100000 + idx;
  cfg.k = idx % 7 == 0 ? 2 : 0;
  cfg.check_lemmas = true;
  return cfg;
}

// ---- per-call classification shared by criteria 3, 4 and 8 -----------------

struct CallTally {
  std::uint64_t solves = 0;
  std::uint64_t calls = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t cost_violations = 0;  // edge + group evaluations > 2r + b
  std::uint64_t lazy_checked_calls = 0;
  std::uint64_t lazy_violations = 0;
  std::uint64_t terminal_calls = 0;   // 2 <= |E^(r)| <= k
  std::uint64_t terminal_violations = 0;
  std::string first_message;

  void add(const SolveStats& s, bool count_lazy) {
    ++solves;
    auto msgs = check_bounds(s);
    bound_violations += msgs.size();
    if (!msgs.empty() && first_message.empty()) first_message = msgs[0];
    for (const CallRecord& c : s.calls) {
      ++calls;
      if (c.counters.index_evals() > 2 * c.r + c.b) ++cost_violations;
      if (count_lazy && c.lemma_checked) {
        ++lazy_checked_calls;
        lazy_violations += c.lazy_edge_violations;
      }
      if (c.restricted >= 2 && c.restricted <= s.k) {
        ++terminal_calls;
        if (c.max_child_restricted > 1) ++terminal_violations;
      }
    }
  }
};

CallTally c1_tally, c2_tally;
std::vector<Solved> c1_replay;
std::vector<std::vector<Solved>> c2_replay;

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "recursive SSBP equals exhaustive path oracle", [](std::string& detail) {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < kC1Instances; ++i) {
      SsbpInstance inst = c1_instance(i);
      auto [res, stats] = solve_ssbp(inst, c1_config(i));
      if (res.values() != oracle_paths_ssbp(inst).values()) ++mismatches;
      c1_tally.add(stats, true);
      if (i < kC10ReplayC1) c1_replay.push_back({res.d, stats});
    }
    const double secs = seconds_since(t0);
    detail = fmt("%zu instances, n<=%zu, %zu mismatches, %.2fs (limit %.0fs)", kC1Instances,
                 kC1MaxNodes, mismatches, secs, kC1Seconds);
    return mismatches == 0 && secs < kC1Seconds;
  });

  criterion(2, "recursive CSSSBP equals Dijkstra baseline", [](std::string& detail) {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0, total = 0;
    const auto configs = c2_configs();
    c2_replay.resize(configs.size());
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      for (std::size_t i = 0; i < kC2InstancesPerConfig; ++i) {
        CsssbpInstance inst = c2_instance(configs[ci], ci, i);
        auto [res, stats] = solve_csssbp(inst, c2_config(ci, i));
        if (res.d != dijkstra_csssbp(inst).d) ++mismatches;
        ++total;
        c2_tally.add(stats, false);
        if (i < kC10ReplayC2PerConfig) c2_replay[ci].push_back({res.d, stats});
      }
    }
    const double secs = seconds_since(t0);
    detail = fmt("%zu instances over n in {1e2,1e3,1e4} x m in {4n, n log2 n}, %zu mismatches, "
                 "%.1fs (limit %.0fs)",
                 total, mismatches, secs, kC2Seconds);
    return mismatches == 0 && secs < kC2Seconds;
  });

  criterion(3, "split cost: edge + group index evaluations <= 2r + b per call",
            [](std::string& detail) {
              const std::uint64_t calls = c1_tally.calls + c2_tally.calls;
              const std::uint64_t cost = c1_tally.cost_violations + c2_tally.cost_violations;
              const std::uint64_t all = c1_tally.bound_violations + c2_tally.bound_violations;
              const std::string& first =
                  c1_tally.first_message.empty() ? c2_tally.first_message : c1_tally.first_message;
              detail = fmt("%llu split calls over %llu solves, %llu cost violations, %llu "
                           "check_bounds violations",
                           (unsigned long long)calls,
                           (unsigned long long)(c1_tally.solves + c2_tally.solves),
                           (unsigned long long)cost, (unsigned long long)all);
              if (!first.empty()) detail += "; first: " + first;
              return calls > 0 && cost == 0 && all == 0;
            });

  criterion(4, "lazy edge evaluation: evaluated edges are cross-level or below-level",
            [](std::string& detail) {
              detail = fmt("%llu traced split calls, %llu violations",
                           (unsigned long long)c1_tally.lazy_checked_calls,
                           (unsigned long long)c1_tally.lazy_violations);
              return c1_tally.lazy_checked_calls > 0 && c1_tally.lazy_violations == 0;
            });

  criterion(5, "tree partition: edge-disjoint cover by connected subtrees of size [s, 3s)",
            [](std::string& detail) {
              Rng rng(0xC5);
              std::size_t partitions = 0, violations = 0;
              std::string first;
              for (std::size_t t = 0; t < kC5Trees; ++t) {
                const std::size_t n = 1 + rng() % kC5MaxNodes;
                const auto shape = static_cast<testing::TreeShape>(t % 4);
                SpanningTree tree = build_spanning_tree(testing::random_tree(n, shape, rng));
                const std::size_t log_n = n <= 1 ? 1 : std::bit_width(n - 1);
                for (std::size_t s : {std::size_t{1}, std::size_t{2}, log_n, n}) {
                  if (s > n) continue;
                  auto v = testing::partition_violations(tree, partition_tree(tree, s));
                  ++partitions;
                  violations += v.size();
                  if (!v.empty() && first.empty()) first = fmt("n=%zu s=%zu: ", n, s) + v[0];
                }
              }
              detail = fmt("%zu trees, %zu partitions, %zu violations", kC5Trees, partitions,
                           violations);
              if (!first.empty()) detail += "; first: " + first;
              return violations == 0;
            });

  criterion(6, "subinstance oracle equals parent oracle on every level", [](std::string& detail) {
    Rng rng(0xC6);
    std::size_t levels_checked = 0, label_mismatch = 0, value_mismatch = 0, skipped = 0;
    for (std::size_t i = 0; i < kC6Instances; ++i) {
      RandomInstanceOptions opt;
      opt.n = 2 + rng() % (kC6MaxNodes - 1);
      opt.m = rng() % (3 * opt.n);
      opt.weight_levels = i % 2 ? 5 : 0;
      opt.unrestricted_fraction = i % 3 == 0 ? 0.2 : 0.0;
      opt.finite_capacity_fraction = 0.3;
      CsssbpInstance inst = testing::random_connected_csssbp(opt, rng);
      std::vector<Edge> restricted;
      for (const Edge& e : inst.graph.edges()) {
        if (e.restricted()) restricted.push_back(e);
      }
      if (restricted.size() < 2) {
        ++skipped;
        continue;
      }
      Thresholds th = sample_thresholds(restricted, 2 + rng() % 8, rng);
      const auto d = oracle_csssbp(inst).d;
      SplitResult split = split_levels(inst, th);
      for (NodeId v = 0; v < d.size(); ++v) {
        if (split.levels[v] != th.index_of(d[v])) ++label_mismatch;
      }
      SubInstanceSet set = build_subinstances(inst, th, split.levels);
      for (const SubInstance& part : set.parts) {
        ++levels_checked;
        const auto sub = oracle_csssbp(part.instance).d;
        for (NodeId v = 0; v < sub.size(); ++v) {
          if (sub[v] != d[part.to_parent[v]]) ++value_mismatch;
        }
      }
    }
    detail = fmt("%zu instances (%zu with <2 restricted edges), %zu levels, %zu label and %zu "
                 "value mismatches",
                 kC6Instances, skipped, levels_checked, label_mismatch, value_mismatch);
    return levels_checked > 0 && label_mismatch == 0 && value_mismatch == 0;
  });

  criterion(7, "base cases equal oracle with touched <= 20(n+m)", [](std::string& detail) {
    Rng rng(0xC7);
    std::size_t mismatches = 0, over_budget = 0;
    double worst_ratio = 0;
    auto account = [&](const CsssbpInstance& inst, std::uint64_t touched) {
      const std::uint64_t size = inst.graph.num_nodes() + inst.graph.num_edges();
      if (touched > kC7TouchedFactor * size) ++over_budget;
      worst_ratio = std::max(worst_ratio, double(touched) / double(size));
    };
    for (std::size_t i = 0; i < kC7Instances; ++i) {
      RandomInstanceOptions opt;
      opt.n = 1 + rng() % kC7MaxNodes;
      opt.m = rng() % (4 * opt.n);
      opt.unrestricted_fraction = 1.0;
      opt.weight_levels = 4;
      opt.finite_capacity_fraction = 0.1 + 0.1 * (i % 6);
      CsssbpInstance zero = random_csssbp(opt, rng);
      std::uint64_t touched = 0;
      if (solve_zero_restricted(zero, &touched).d != oracle_csssbp(zero).d) ++mismatches;
      account(zero, touched);

      CsssbpInstance base = random_csssbp(opt, rng);
      std::vector<Edge> edges = base.graph.edges_by_id();
      const auto n = static_cast<NodeId>(base.graph.num_nodes());
      const double w = i % 2 ? static_cast<double>(1 + rng() % 4)
                             : std::uniform_real_distribution<double>(0, 1)(rng);
      edges.push_back(Edge{static_cast<NodeId>(rng() % n), static_cast<NodeId>(rng() % n), w,
                           static_cast<EdgeIndex>(edges.size())});
      CsssbpInstance one(Graph(n, std::move(edges)), base.h);
      touched = 0;
      if (solve_one_restricted(one, &touched).d != oracle_csssbp(one).d) ++mismatches;
      account(one, touched);
    }
    detail = fmt("%zu zero- and %zu one-restricted instances, %zu mismatches, %zu over budget, "
                 "worst touched/(n+m) = %.2f",
                 kC7Instances, kC7Instances, mismatches, over_budget, worst_ratio);
    return mismatches == 0 && over_budget == 0;
  });

  criterion(8, "calls with 2 <= |E^(r)| <= k leave at most one restricted edge per child",
            [](std::string& detail) {
              const auto calls = c1_tally.terminal_calls + c2_tally.terminal_calls;
              const auto bad = c1_tally.terminal_violations + c2_tally.terminal_violations;
              detail = fmt("%llu such calls, %llu violations", (unsigned long long)calls,
                           (unsigned long long)bad);
              return calls > 0 && bad == 0;
            });

  criterion(9, "recursion depth within 3 log2 n / log2 k + 3, cap log2 m + 2 never reached",
            [](std::string& detail) {
              const double log_n = std::log2(double(kC9Nodes));
              const auto k = default_k(kC9Nodes);
              const double bound = 3.0 * log_n / std::log2(double(k)) + 3.0;
              const auto cap = static_cast<std::uint32_t>(std::floor(std::log2(double(kC9Edges)))) + 2;
              std::map<std::uint32_t, std::size_t> histogram;
              std::size_t over = 0, mismatches = 0;
              for (std::size_t seed = 0; seed < kC9Seeds; ++seed) {
                GenSpec spec;
                spec.n = kC9Nodes;
                spec.m = kC9Edges;
                spec.seed = 0xC9000 + seed;
                SsbpInstance inst(generate(spec), 0);
                SolverConfig cfg;
                cfg.seed = seed;
                cfg.depth_limit = cap;
                auto [res, stats] = solve_ssbp(inst, cfg);
                if (seed % 10 == 0 && res.values() != dijkstra_ssbp(inst).values()) ++mismatches;
                ++histogram[stats.max_depth];
                if (stats.max_depth > bound || stats.max_depth >= cap) ++over;
              }
              std::ostringstream dist;
              for (auto [depth, count] : histogram) dist << ' ' << depth << ':' << count;
              detail = fmt("k=%llu, bound %.2f, cap %u, depth distribution {", (unsigned long long)k,
                           bound, cap) +
                       dist.str() + fmt(" }, %zu over, %zu spot-check mismatches", over, mismatches);
              return over == 0 && mismatches == 0;
            });

  criterion(10, "fixed-seed replays are bit-identical in results and counters",
            [](std::string& detail) {
              std::size_t replays = 0, diffs = 0;
              for (std::size_t i = 0; i < c1_replay.size(); ++i) {
                auto [res, stats] = solve_ssbp(c1_instance(i), c1_config(i));
                ++replays;
                if (res.d != c1_replay[i].d || !(stats == c1_replay[i].stats)) ++diffs;
              }
              const auto configs = c2_configs();
              for (std::size_t ci = 0; ci < c2_replay.size(); ++ci) {
                for (std::size_t i = 0; i < c2_replay[ci].size(); ++i) {
                  auto [res, stats] =
                      solve_csssbp(c2_instance(configs[ci], ci, i), c2_config(ci, i));
                  ++replays;
                  if (res.d != c2_replay[ci][i].d || !(stats == c2_replay[ci][i].stats)) ++diffs;
                }
              }
              detail = fmt("%zu replays, %zu differences", replays, diffs);
              return replays > 0 && diffs == 0;
            });

  criterion(11, "n = 1e6, m = 4e6 solve under 120s with index evaluations <= 2m + sum b",
            [](std::string& detail) {
              GenSpec spec;
              spec.n = kC11Nodes;
              spec.m = kC11Edges;
              spec.seed = 0xC11;
              SsbpInstance inst(generate(spec), 0);
              const auto t0 = Clock::now();
              auto [res, stats] = solve_ssbp(inst);
              const double secs = seconds_since(t0);
              const auto t1 = Clock::now();
              const bool match = res.values() == dijkstra_ssbp(inst).values();
              const double dij_secs = seconds_since(t1);
              const std::uint64_t evals = stats.totals.index_evals();
              const std::uint64_t budget = 2 * stats.top_m + stats.sum_b;
              detail = fmt("%.2fs (limit %.0fs, Dijkstra %.2fs), index evals %llu <= %llu, depth "
                           "%u, k=%llu, matches Dijkstra: %s",
                           secs, kC11Seconds, dij_secs, (unsigned long long)evals,
                           (unsigned long long)budget, stats.max_depth,
                           (unsigned long long)stats.k, match ? "yes" : "no");
              return secs < kC11Seconds && evals <= budget && match;
            });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
