#include "ssbp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ssbp {

Family parse_family(const std::string& name) {
  if (name == "uniform-random") return Family::uniform_random;
  if (name == "grid") return Family::grid;
  if (name == "path") return Family::path;
  if (name == "complete") return Family::complete;
  if (name == "layered-dag") return Family::layered_dag;
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

WeightDist parse_weight_dist(const std::string& name) {
  if (name == "uniform") return WeightDist::uniform_real;
  if (name == "ranks") return WeightDist::integer_ranks;
  throw std::invalid_argument("unknown weight distribution '" + name + "'");
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::uint64_t n = 0;
  switch (spec.family) {
    case Family::uniform_random: {
      require(spec.n >= 1 || spec.m == 0, "uniform-random needs n >= 1 when m > 0");
      n = spec.n;
      pairs.reserve(spec.m);
      std::uniform_int_distribution<NodeId> node(0, n == 0 ? 0 : static_cast<NodeId>(n - 1));
      for (std::uint64_t i = 0; i < spec.m; ++i) {
        const NodeId u = node(rng);
        pairs.emplace_back(u, node(rng));
      }
      break;
    }
    case Family::grid: {
      require(spec.rows >= 1 && spec.cols >= 1, "grid needs rows, cols >= 1");
      n = spec.rows * spec.cols;
      auto id = [&](std::uint64_t r, std::uint64_t c) { return static_cast<NodeId>(r * spec.cols + c); };
      for (std::uint64_t r = 0; r < spec.rows; ++r) {
        for (std::uint64_t c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) {
            pairs.emplace_back(id(r, c), id(r, c + 1));
            pairs.emplace_back(id(r, c + 1), id(r, c));
          }
          if (r + 1 < spec.rows) {
            pairs.emplace_back(id(r, c), id(r + 1, c));
            pairs.emplace_back(id(r + 1, c), id(r, c));
          }
        }
      }
      break;
    }
    case Family::path:
      require(spec.n >= 1, "path needs n >= 1");
      n = spec.n;
      for (NodeId v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
      break;
    case Family::complete:
      require(spec.n >= 1, "complete needs n >= 1");
      n = spec.n;
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
          if (u != v) pairs.emplace_back(u, v);
        }
      }
      break;
    case Family::layered_dag:
      require(spec.layers >= 1 && spec.width >= 1, "layered-dag needs layers, width >= 1");
      n = spec.layers * spec.width;
      for (std::uint64_t j = 0; j + 1 < spec.layers; ++j) {
        for (std::uint64_t a = 0; a < spec.width; ++a) {
          for (std::uint64_t b = 0; b < spec.width; ++b) {
            pairs.emplace_back(static_cast<NodeId>(j * spec.width + a),
                               static_cast<NodeId>((j + 1) * spec.width + b));
          }
        }
      }
      break;
  }

  const std::size_t m = pairs.size();
  std::vector<double> w(m);
  if (spec.weights == WeightDist::uniform_real) {
    require(spec.lo <= spec.hi && std::isfinite(spec.lo) && std::isfinite(spec.hi),
            "weight range must be finite with lo <= hi");
    std::uniform_real_distribution<double> dist(spec.lo, spec.hi);
    for (double& x : w) x = dist(rng);
  } else {
    std::iota(w.begin(), w.end(), 1.0);
    std::shuffle(w.begin(), w.end(), rng);
  }
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    edges[i] = Edge{pairs[i].first, pairs[i].second, w[i], static_cast<EdgeIndex>(i)};
  }
  return Graph(n, std::move(edges));
}

Graph random_graph(const RandomInstanceOptions& opt, Rng& rng) {
  const std::size_t n = std::max<std::size_t>(opt.n, 1);
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> level(1, std::max<std::uint32_t>(opt.weight_levels, 1));
  std::vector<Edge> edges;
  edges.reserve(opt.m);
  for (std::size_t i = 0; i < opt.m; ++i) {
    const NodeId u = node(rng);
    const NodeId v = node(rng);
    double w = opt.weight_levels > 0 ? static_cast<double>(level(rng)) : unit(rng);
    if (unit(rng) < opt.unrestricted_fraction) w = kUnrestricted;
    edges.push_back(Edge{u, v, w, static_cast<EdgeIndex>(i)});
  }
  return Graph(n, std::move(edges));
}

std::vector<double> random_capacities(const RandomInstanceOptions& opt, Rng& rng) {
  const std::size_t n = std::max<std::size_t>(opt.n, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> level(1, std::max<std::uint32_t>(opt.weight_levels, 1));
  std::vector<double> h(n);
  for (double& c : h) {
    const double roll = unit(rng);
    if (roll < opt.pos_inf_capacity_fraction) {
      c = kInf;
    } else if (roll < opt.pos_inf_capacity_fraction + opt.finite_capacity_fraction) {
      c = opt.weight_levels > 0 ? static_cast<double>(level(rng)) : unit(rng);
    } else {
      c = -kInf;
    }
  }
  return h;
}

CsssbpInstance random_csssbp(const RandomInstanceOptions& opt, Rng& rng) {
  Graph g = random_graph(opt, rng);
  std::vector<double> h = random_capacities(opt, rng);
  return CsssbpInstance(std::move(g), h);
}

}  // namespace ssbp
