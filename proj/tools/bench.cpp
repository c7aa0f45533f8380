#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ssbp/baselines.hpp"
#include "ssbp/generators.hpp"
#include "ssbp/solver.hpp"

namespace ssbp::tools {

namespace {

std::uint64_t edges_for(std::uint64_t n, const std::string& density) {
  if (density == "logn") {
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * std::log2(std::max<double>(n, 2))));
  }
  std::size_t used = 0;
  double ratio = std::stod(density, &used);
  if (used != density.size() || ratio < 0) throw std::invalid_argument("bad density '" + density + "'");
  return static_cast<std::uint64_t>(std::llround(ratio * static_cast<double>(n)));
}

struct Row {
  std::string algo;
  std::uint64_t n, m, k, seed;
  double ms;
  std::uint64_t max_depth, index_evals, sort_cmp, heap_cmp;
  bool match;
};

void emit(std::ostream& out, const Row& r, bool key_value) {
  char line[256];
  if (key_value) {
    std::snprintf(line, sizeof line,
                  "algo=%s n=%llu m=%llu k=%llu seed=%llu time_ms=%.3f max_depth=%llu "
                  "index_evals=%llu sort_comparisons=%llu heap_comparisons=%llu match=%d\n",
                  r.algo.c_str(), (unsigned long long)r.n, (unsigned long long)r.m,
                  (unsigned long long)r.k, (unsigned long long)r.seed, r.ms,
                  (unsigned long long)r.max_depth, (unsigned long long)r.index_evals,
                  (unsigned long long)r.sort_cmp, (unsigned long long)r.heap_cmp, r.match ? 1 : 0);
  } else {
    std::snprintf(line, sizeof line, "%-9s %9llu %10llu %5llu %6llu %11.3f %6llu %12llu %10llu %12llu %s\n",
                  r.algo.c_str(), (unsigned long long)r.n, (unsigned long long)r.m,
                  (unsigned long long)r.k, (unsigned long long)r.seed, r.ms,
                  (unsigned long long)r.max_depth, (unsigned long long)r.index_evals,
                  (unsigned long long)r.sort_cmp, (unsigned long long)r.heap_cmp,
                  r.match ? "ok" : "MISMATCH");
  }
  out << line;
}

template <class Fn>
double time_ms(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

bool run_bench(const BenchOptions& opt, std::ostream& out) {
  if (!opt.key_value) {
    out << "algo              n          m     k   seed     time_ms  depth  index_evals   sort_cmp     heap_cmp result\n";
  }
  bool all_match = true;
  for (std::uint64_t n : opt.sizes) {
    for (const std::string& density : opt.densities) {
      const std::uint64_t m = edges_for(n, density);
      std::vector<std::uint64_t> ks = opt.k_sweep;
      if (ks.empty()) ks.push_back(default_k(std::max<std::uint64_t>(n, 1)));
      for (std::size_t rep = 0; rep < opt.repeats; ++rep) {
        GenSpec spec;
        spec.family = Family::uniform_random;
        spec.n = n;
        spec.m = m;
        spec.seed = opt.seed + rep;
        SsbpInstance inst(generate(spec), 0);

        BottleneckResult reference;
        std::uint64_t heap_cmp = 0;
        const double dij_ms = time_ms([&] { reference = dijkstra_ssbp(inst, &heap_cmp); });
        emit(out, Row{"dijkstra", n, m, 0, spec.seed, dij_ms, 0, 0, 0, heap_cmp, true}, opt.key_value);

        for (std::uint64_t k : ks) {
          SolverConfig cfg;
          cfg.k = k;
          cfg.seed = spec.seed;
          std::pair<BottleneckResult, SolveStats> run;
          const double ms = time_ms([&] { run = solve_ssbp(inst, cfg); });
          const bool match = run.first.values() == reference.values();
          all_match = all_match && match;
          const SolveStats& st = run.second;
          emit(out,
               Row{"recursive", n, m, k, spec.seed, ms, st.max_depth, st.totals.index_evals(),
                   st.totals.sort_comparisons, 0, match},
               opt.key_value);
        }
      }
    }
  }
  return all_match;
}

}  // namespace ssbp::tools
