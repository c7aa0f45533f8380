// ssbp: generate graphs, solve single-source bottleneck paths, cross-check and benchmark.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bench.hpp"
#include "ssbp/baselines.hpp"
#include "ssbp/check.hpp"
#include "ssbp/generators.hpp"
#include "ssbp/solver.hpp"
#include "ssbp/text_format.hpp"

namespace {

constexpr int kUsageError = 2;

int cmd_gen(const ssbp::GenSpec& spec, const std::string& output) {
  ssbp::Graph g = ssbp::generate(spec);
  if (output == "-") {
    ssbp::write_graph_text(std::cout, g);
  } else {
    ssbp::write_graph_file(output, g);
  }
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string algo = "recursive";
  std::optional<std::uint32_t> source;
  std::uint64_t k = 0;
  std::uint64_t seed = 1;
  std::string stats = "none";
};

int cmd_solve(const SolveArgs& args) {
  ssbp::GraphText file = ssbp::read_graph_file(args.input);
  const bool has_h = file.capacities.has_value();
  if (has_h && args.source) {
    std::cerr << "error: --source cannot be combined with a capacity ('h') section\n";
    return kUsageError;
  }
  const std::uint32_t source = args.source.value_or(0);
  if (!has_h && source >= file.graph.num_nodes()) {
    std::cerr << "error: unknown source id " << source << " (graph has " << file.graph.num_nodes()
              << " nodes)\n";
    return kUsageError;
  }

  ssbp::SolverConfig cfg;
  cfg.k = args.k;
  cfg.seed = args.seed;
  cfg.record_calls = args.stats == "per-call";

  ssbp::BottleneckResult result;
  std::optional<ssbp::SolveStats> stats;
  if (args.algo == "recursive") {
    auto run = has_h ? ssbp::solve_csssbp(ssbp::CsssbpInstance(file.graph, *file.capacities), cfg)
                     : ssbp::solve_ssbp(ssbp::SsbpInstance(file.graph, source), cfg);
    result = std::move(run.first);
    stats = std::move(run.second);
  } else if (args.algo == "dijkstra") {
    result = has_h ? ssbp::dijkstra_csssbp(ssbp::CsssbpInstance(file.graph, *file.capacities))
                   : ssbp::dijkstra_ssbp(ssbp::SsbpInstance(file.graph, source));
  } else {
    if (has_h) {
      result = ssbp::oracle_csssbp(ssbp::CsssbpInstance(file.graph, *file.capacities));
    } else if (file.graph.num_nodes() <= ssbp::kPathOracleMaxNodes) {
      result = ssbp::oracle_paths_ssbp(ssbp::SsbpInstance(file.graph, source));
    } else {
      ssbp::SsbpInstance inst(file.graph, source);
      result = ssbp::oracle_csssbp(ssbp::ssbp_to_csssbp(inst));
      result.d[source] = ssbp::TieKey::pos_inf();
    }
  }

  std::string out;
  for (std::size_t v = 0; v < result.d.size(); ++v) {
    out += std::to_string(v);
    out += ' ';
    out += ssbp::format_value(result.d[v].value());
    out += '\n';
  }
  std::cout << out;
  if (args.stats != "none") {
    std::cout << "---\n";
    if (stats) {
      ssbp::write_report(std::cout, *stats,
                         args.stats == "per-call" ? ssbp::ReportLevel::per_call
                                                  : ssbp::ReportLevel::summary);
    } else {
      std::cout << "algo=" << args.algo << '\n';
    }
  }
  return 0;
}

int cmd_check(const std::string& input, std::optional<std::uint32_t> source, std::size_t seeds,
              std::uint64_t seed) {
  ssbp::CheckReport rep;
  if (input.empty()) {
    rep = ssbp::check_random(seeds, seed);
  } else {
    ssbp::GraphText file = ssbp::read_graph_file(input);
    if (!file.capacities && source.value_or(0) >= file.graph.num_nodes()) {
      std::cerr << "error: unknown source id " << source.value_or(0) << '\n';
      return kUsageError;
    }
    rep = ssbp::check_input(file, source.value_or(0), seeds, seed);
  }
  if (rep.ok()) {
    std::cout << "PASS " << rep.passed << "/" << rep.runs << '\n';
    return 0;
  }
  std::cout << "FAIL after " << rep.passed << "/" << rep.runs << " passing runs\n"
            << rep.failure->reason << '\n'
            << "witness:\n"
            << rep.failure->witness;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-source bottleneck paths: generate, solve, check, bench"};
  app.require_subcommand(1);

  ssbp::GenSpec gen;
  std::string family = "uniform-random", weights = "uniform", gen_out = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in the text format");
  gen_cmd->add_option("--family", family, "uniform-random|grid|path|complete|layered-dag")
      ->check(CLI::IsMember({"uniform-random", "grid", "path", "complete", "layered-dag"}));
  gen_cmd->add_option("--n", gen.n, "Node count (uniform-random, path, complete)");
  gen_cmd->add_option("--m", gen.m, "Edge count (uniform-random)");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("--layers", gen.layers, "Layered DAG layers");
  gen_cmd->add_option("--width", gen.width, "Layered DAG width");
  gen_cmd->add_option("--weights", weights, "uniform|ranks")->check(CLI::IsMember({"uniform", "ranks"}));
  gen_cmd->add_option("--lo", gen.lo, "Lower weight bound (uniform)");
  gen_cmd->add_option("--hi", gen.hi, "Upper weight bound (uniform)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen_out, "Output path, '-' for stdout");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph file");
  solve_cmd->add_option("input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--algo", solve.algo, "recursive|dijkstra|oracle")
      ->check(CLI::IsMember({"recursive", "dijkstra", "oracle"}));
  solve_cmd->add_option("--source", solve.source, "Source node (files without an 'h' section)");
  solve_cmd->add_option("--k", solve.k, "Thresholds per call (default 2^ceil(sqrt(log2 n)))");
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--stats", solve.stats, "none|summary|per-call")
      ->check(CLI::IsMember({"none", "summary", "per-call"}));

  std::string check_input;
  std::optional<std::uint32_t> check_source;
  std::size_t check_seeds = 100;
  std::uint64_t check_seed = 1;
  auto* check_cmd = app.add_subcommand(
      "check", "Cross-check solvers on a file (one run per seed) or on random instances");
  check_cmd->add_option("input", check_input, "Graph file; omit for random instances");
  check_cmd->add_option("--seeds", check_seeds, "Seeds per file, or number of random instances");
  check_cmd->add_option("--seed", check_seed, "First seed");
  check_cmd->add_option("--source", check_source, "Source node (files without an 'h' section)");

  ssbp::tools::BenchOptions bench;
  std::string bench_format = "text";
  auto* bench_cmd = app.add_subcommand("bench", "Compare the recursive solver with Dijkstra");
  bench_cmd->add_option("--sizes", bench.sizes, "Node counts")->delimiter(',');
  bench_cmd->add_option("--densities", bench.densities, "Edges per node, or 'logn'")->delimiter(',');
  bench_cmd->add_option("--k-sweep", bench.k_sweep, "Values of k (default: default k)")->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats, "Seeds per configuration");
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_option("--format", bench_format, "text|kv")->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen_cmd) {
      gen.family = ssbp::parse_family(family);
      gen.weights = ssbp::parse_weight_dist(weights);
      return cmd_gen(gen, gen_out);
    }
    if (*solve_cmd) return cmd_solve(solve);
    if (*check_cmd) return cmd_check(check_input, check_source, check_seeds, check_seed);
    if (*bench_cmd) {
      bench.key_value = bench_format == "kv";
      for (std::uint64_t k : bench.k_sweep) {
        if (k < 2) {
          std::cerr << "error: k must be at least 2\n";
          return kUsageError;
        }
      }
      return ssbp::tools::run_bench(bench, std::cout) ? 0 : 1;
    }
  } catch (const ssbp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
