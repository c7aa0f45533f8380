#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ssbp/baselines.hpp"
#include "ssbp/generators.hpp"
#include "ssbp/solver.hpp"
#include "ssbp/text_format.hpp"

namespace py = pybind11;
using namespace ssbp;

namespace {

using EdgeList = std::vector<std::tuple<NodeId, NodeId, double>>;

py::dict stats_dict(const SolveStats& s) {
  py::dict d;
  d["k"] = s.k;
  d["seed"] = s.seed;
  d["max_depth"] = s.max_depth;
  d["split_calls"] = s.split_calls;
  d["base_calls"] = s.base_calls;
  d["sum_b"] = s.sum_b;
  d["edge_index_evals"] = s.totals.edge_index_evals;
  d["group_index_evals"] = s.totals.group_index_evals;
  d["total_index_evals"] = s.totals.index_evals();
  d["sort_comparisons"] = s.totals.sort_comparisons;
  d["bucket_ops"] = s.totals.bucket_ops;
  d["touched_elements"] = s.totals.touched_elements;
  d["bound_violations"] = check_bounds(s);
  return d;
}

SolverConfig make_config(std::uint64_t k, std::uint64_t seed, bool record_calls) {
  SolverConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.record_calls = record_calls;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-source bottleneck paths";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const EdgeList& edges) { return Graph::from_list(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        EdgeList out;
        for (const Edge& e : g.edges_by_id()) out.emplace_back(e.src, e.dst, e.weight);
        return out;
      });

  m.def(
      "solve_ssbp",
      [](const Graph& g, NodeId source, std::uint64_t k, std::uint64_t seed, bool record_calls) {
        auto [res, stats] = solve_ssbp(SsbpInstance(g, source), make_config(k, seed, record_calls));
        return py::make_tuple(res.values(), stats_dict(stats));
      },
      py::arg("graph"), py::arg("source"), py::arg("k") = 0, py::arg("seed") = 1,
      py::arg("record_calls") = true);
  m.def(
      "solve_csssbp",
      [](const Graph& g, const std::vector<double>& h, std::uint64_t k, std::uint64_t seed,
         bool record_calls) {
        auto [res, stats] = solve_csssbp(CsssbpInstance(g, h), make_config(k, seed, record_calls));
        return py::make_tuple(res.values(), stats_dict(stats));
      },
      py::arg("graph"), py::arg("h"), py::arg("k") = 0, py::arg("seed") = 1,
      py::arg("record_calls") = true);

  m.def("dijkstra_ssbp", [](const Graph& g, NodeId s) { return dijkstra_ssbp(SsbpInstance(g, s)).values(); },
        py::arg("graph"), py::arg("source"));
  m.def("dijkstra_csssbp",
        [](const Graph& g, const std::vector<double>& h) {
          return dijkstra_csssbp(CsssbpInstance(g, h)).values();
        },
        py::arg("graph"), py::arg("h"));
  m.def("oracle_csssbp",
        [](const Graph& g, const std::vector<double>& h) {
          return oracle_csssbp(CsssbpInstance(g, h)).values();
        },
        py::arg("graph"), py::arg("h"));
  m.def("oracle_paths_ssbp",
        [](const Graph& g, NodeId s) { return oracle_paths_ssbp(SsbpInstance(g, s)).values(); },
        py::arg("graph"), py::arg("source"));

  m.def("default_k", &default_k, py::arg("n"));

  m.def(
      "parse_graph",
      [](const std::string& text) {
        std::istringstream in(text);
        GraphText gt = parse_graph_text(in);
        return py::make_tuple(gt.graph, gt.capacities);
      },
      py::arg("text"));
  m.def(
      "format_graph",
      [](const Graph& g, const std::optional<std::vector<double>>& h) {
        std::ostringstream out;
        write_graph_text(out, g, h ? &*h : nullptr);
        return out.str();
      },
      py::arg("graph"), py::arg("h") = py::none());

  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::size_t m_edges, std::size_t rows,
         std::size_t cols, std::size_t layers, std::size_t width, const std::string& weights,
         double lo, double hi, std::uint64_t seed) {
        GenSpec spec;
        spec.family = parse_family(family);
        spec.n = n;
        spec.m = m_edges;
        spec.rows = rows;
        spec.cols = cols;
        spec.layers = layers;
        spec.width = width;
        spec.weights = parse_weight_dist(weights);
        spec.lo = lo;
        spec.hi = hi;
        spec.seed = seed;
        return generate(spec);
      },
      py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("rows") = 0,
      py::arg("cols") = 0, py::arg("layers") = 0, py::arg("width") = 0,
      py::arg("weights") = "uniform", py::arg("lo") = 0.0, py::arg("hi") = 1.0,
      py::arg("seed") = 1);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
