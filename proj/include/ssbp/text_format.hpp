#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssbp/graph.hpp"

namespace ssbp {

// Text graph format:
//
//   n m
//   u v w        (m lines; w is a decimal or `inf`)
//   h            (optional section)
//   c            (n lines; decimal, `inf` or `-inf`)
//
// `#` starts a comment; blank lines are ignored.

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct GraphText {
  Graph graph;
  std::optional<std::vector<double>> capacities;
};

GraphText parse_graph_text(std::istream& in);
GraphText read_graph_file(const std::string& path);

void write_graph_text(std::ostream& out, const Graph& g,
                      const std::vector<double>* capacities = nullptr);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<double>* capacities = nullptr);

/// Lossless decimal rendering; infinities print as `inf` / `-inf`.
std::string format_value(double x);

/// Inverse of `format_value`. Throws std::invalid_argument on malformed text.
double parse_value(const std::string& token);

}  // namespace ssbp
