#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssbp::tools {

struct BenchOptions {
  std::vector<std::uint64_t> sizes{1000};
  std::vector<std::string> densities{"4"};  // m / n, or "logn" for log2 n
  std::vector<std::uint64_t> k_sweep;       // empty: default k only
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
  bool key_value = false;
};

/// Runs every configuration with the recursive solver and Dijkstra and writes one
/// row per (configuration, algorithm, repeat). Returns false if any result differed.
bool run_bench(const BenchOptions& opt, std::ostream& out);

}  // namespace ssbp::tools
