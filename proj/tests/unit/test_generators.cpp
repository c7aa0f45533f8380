#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ssbp/generators.hpp"
#include "ssbp/text_format.hpp"

using namespace ssbp;

namespace {
std::string text_of(const Graph& g) {
  std::ostringstream out;
  write_graph_text(out, g);
  return out.str();
}
}  // namespace

TEST_CASE("generator families") {
  GenSpec spec;
  SUBCASE("path") {
    spec.family = Family::path;
    spec.n = 3;
    std::string text = text_of(generate(spec));
    CHECK(text.rfind("3 2\n", 0) == 0);
  }
  SUBCASE("grid emits both directions of every adjacency") {
    spec.family = Family::grid;
    spec.rows = 4;
    spec.cols = 4;
    Graph g = generate(spec);
    CHECK(g.num_nodes() == 16);
    CHECK(g.num_edges() == 48);
  }
  SUBCASE("complete") {
    spec.family = Family::complete;
    spec.n = 5;
    CHECK(generate(spec).num_edges() == 20);
  }
  SUBCASE("layered dag points forward") {
    spec.family = Family::layered_dag;
    spec.layers = 4;
    spec.width = 3;
    Graph g = generate(spec);
    CHECK(g.num_nodes() == 12);
    for (const Edge& e : g.edges()) CHECK(e.src / 3 < e.dst / 3);
  }
  SUBCASE("uniform random is seed-deterministic") {
    spec.n = 100;
    spec.m = 500;
    spec.seed = 7;
    CHECK(text_of(generate(spec)) == text_of(generate(spec)));
    GenSpec other = spec;
    other.seed = 8;
    CHECK(text_of(generate(spec)) != text_of(generate(other)));
    Graph g = generate(spec);
    CHECK(g.num_edges() == 500);
    for (const Edge& e : g.edges()) CHECK((e.weight >= spec.lo && e.weight < spec.hi));
  }
  SUBCASE("integer ranks") {
    spec.n = 50;
    spec.m = 200;
    spec.weights = WeightDist::integer_ranks;
    Graph g = generate(spec);
    for (const Edge& e : g.edges()) CHECK(e.weight == std::floor(e.weight));
  }
}

TEST_CASE("generator names") {
  CHECK(parse_family("layered-dag") == Family::layered_dag);
  CHECK(parse_weight_dist("ranks") == WeightDist::integer_ranks);
  CHECK_THROWS_AS(parse_family("torus"), std::invalid_argument);
  GenSpec bad;
  bad.family = Family::grid;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}
