#include "ssbp/text_format.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ssbp {

std::string format_value(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_value(const std::string& token) {
  if (token == "inf" || token == "+inf") return kInf;
  if (token == "-inf") return -kInf;
  double x = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || end != token.data() + token.size() || std::isnan(x)) {
    throw std::invalid_argument("bad number '" + token + "'");
  }
  return x;
}

namespace {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    return false;
  }
  std::size_t line() const noexcept { return line_no_; }

private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t x = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
  return x;
}

}  // namespace

GraphText parse_graph_text(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(reader.line(), "missing header 'n m'");
  if (tok.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
  const std::uint64_t n = parse_count(tok[0], reader.line(), "node count");
  const std::uint64_t m = parse_count(tok[1], reader.line(), "edge count");
  if (n > std::numeric_limits<NodeId>::max() || m > std::numeric_limits<EdgeIndex>::max()) {
    throw ParseError(reader.line(), "graph too large");
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(tok)) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(i));
    }
    if (tok.size() != 3) throw ParseError(reader.line(), "edge line must be 'u v w'");
    const std::uint64_t u = parse_count(tok[0], reader.line(), "node id");
    const std::uint64_t v = parse_count(tok[1], reader.line(), "node id");
    if (u >= n || v >= n) throw ParseError(reader.line(), "node id out of range");
    double w = 0;
    try {
      w = parse_value(tok[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(reader.line(), e.what());
    }
    if (w == -kInf) throw ParseError(reader.line(), "edge weight cannot be -inf");
    edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v), w,
                         static_cast<EdgeIndex>(i)});
  }

  GraphText out;
  out.graph = Graph(n, std::move(edges));
  if (!reader.next(tok)) return out;
  if (tok.size() != 1 || tok[0] != "h") throw ParseError(reader.line(), "expected 'h' or end of input");
  std::vector<double> h;
  h.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!reader.next(tok)) {
      throw ParseError(reader.line(), "expected " + std::to_string(n) + " capacities, found " +
                                          std::to_string(i));
    }
    if (tok.size() != 1) throw ParseError(reader.line(), "capacity line must hold one value");
    try {
      h.push_back(parse_value(tok[0]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  if (reader.next(tok)) throw ParseError(reader.line(), "trailing content after capacities");
  out.capacities = std::move(h);
  return out;
}

GraphText read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g, const std::vector<double>* capacities) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges_by_id()) {
    out << e.src << ' ' << e.dst << ' ' << format_value(e.weight) << '\n';
  }
  if (capacities != nullptr) {
    out << "h\n";
    for (double c : *capacities) out << format_value(c) << '\n';
  }
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<double>* capacities) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_graph_text(out, g, capacities);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace ssbp
