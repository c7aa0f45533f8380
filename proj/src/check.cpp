#include "ssbp/check.hpp"

#include <sstream>

#include "ssbp/baselines.hpp"
#include "ssbp/generators.hpp"

namespace ssbp {

CsssbpSolver default_solver() {
  return [](const CsssbpInstance& inst, const SolverConfig& cfg) { return solve_csssbp(inst, cfg); };
}

namespace {

std::string first_mismatch(const std::vector<double>& got, const std::vector<double>& want,
                           const char* against) {
  for (std::size_t v = 0; v < want.size(); ++v) {
    if (got[v] != want[v]) {
      return std::string("recursive solver disagrees with ") + against + " at node " +
             std::to_string(v) + ": " + format_value(got[v]) + " vs " + format_value(want[v]);
    }
  }
  return {};
}

std::string serialize(const GraphText& input) {
  std::ostringstream out;
  write_graph_text(out, input.graph, input.capacities ? &*input.capacities : nullptr);
  return out.str();
}

// Empty string on agreement.
std::string check_once(const GraphText& input, NodeId source, std::uint64_t seed,
                       const CsssbpSolver& solver) {
  SolverConfig cfg;
  cfg.seed = seed;
  cfg.check_lemmas = true;
  const Graph& g = input.graph;

  if (input.capacities) {
    CsssbpInstance inst(g, *input.capacities);
    auto [got, stats] = solver(inst, cfg);
    const std::vector<double> values = got.values();
    if (auto why = first_mismatch(values, dijkstra_csssbp(inst).values(), "dijkstra"); !why.empty()) {
      return why;
    }
    if (g.num_nodes() * (g.num_edges() + 1) <= 10'000'000) {
      if (auto why = first_mismatch(values, oracle_csssbp(inst).values(), "fixpoint oracle");
          !why.empty()) {
        return why;
      }
    }
    if (g.num_nodes() + 1 <= kPathOracleMaxNodes) {
      SsbpReduction red = csssbp_to_ssbp(inst);
      std::vector<double> paths = oracle_paths_ssbp(red.instance).values();
      paths.pop_back();  // the added source
      if (auto why = first_mismatch(values, paths, "path oracle"); !why.empty()) return why;
    }
    if (auto bad = check_bounds(stats); !bad.empty()) return "bound violated: " + bad.front();
    return {};
  }

  SsbpInstance inst(g, source);
  CsssbpInstance reduced = ssbp_to_csssbp(inst);
  auto [got, stats] = solver(reduced, cfg);
  got.d[source] = TieKey::pos_inf();
  const std::vector<double> values = got.values();
  if (auto why = first_mismatch(values, dijkstra_ssbp(inst).values(), "dijkstra"); !why.empty()) {
    return why;
  }
  if (g.num_nodes() <= kPathOracleMaxNodes) {
    if (auto why = first_mismatch(values, oracle_paths_ssbp(inst).values(), "path oracle");
        !why.empty()) {
      return why;
    }
  }
  if (auto bad = check_bounds(stats); !bad.empty()) return "bound violated: " + bad.front();
  return {};
}

}  // namespace

CheckReport check_input(const GraphText& input, NodeId source, std::size_t seeds,
                        std::uint64_t base_seed, const CsssbpSolver& solver) {
  CheckReport rep;
  for (std::size_t i = 0; i < seeds; ++i) {
    const std::uint64_t seed = base_seed + i;
    ++rep.runs;
    std::string why = check_once(input, source, seed, solver);
    if (!why.empty()) {
      rep.failure = CheckFailure{"seed " + std::to_string(seed) + ": " + why, serialize(input)};
      return rep;
    }
    ++rep.passed;
  }
  return rep;
}

CheckReport check_random(std::size_t count, std::uint64_t seed, const CsssbpSolver& solver) {
  CheckReport rep;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> nodes(1, kPathOracleMaxNodes);
  std::uniform_int_distribution<std::size_t> mult(0, 4);
  std::uniform_int_distribution<std::uint32_t> levels(0, 6);
  std::bernoulli_distribution with_capacities(0.5);
  for (std::size_t i = 0; i < count; ++i) {
    RandomInstanceOptions opt;
    opt.n = nodes(rng);
    opt.m = opt.n * mult(rng) + mult(rng);
    opt.weight_levels = levels(rng);
    const bool csssbp = with_capacities(rng) && opt.n + 1 <= kPathOracleMaxNodes;
    opt.unrestricted_fraction = csssbp ? 0.2 : 0.0;
    GraphText input;
    input.graph = random_graph(opt, rng);
    NodeId source = 0;
    if (csssbp) {
      input.capacities = random_capacities(opt, rng);
    } else {
      source = std::uniform_int_distribution<NodeId>(0, static_cast<NodeId>(opt.n - 1))(rng);
    }
    ++rep.runs;
    std::string why = check_once(input, source, seed + i, solver);
    if (!why.empty()) {
      std::string where = input.capacities ? "" : " (source " + std::to_string(source) + ")";
      rep.failure = CheckFailure{"instance " + std::to_string(i) + where + ": " + why, serialize(input)};
      return rep;
    }
    ++rep.passed;
  }
  return rep;
}

}  // namespace ssbp
