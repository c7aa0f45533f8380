#pragma once

// Shared helpers for unit and acceptance tests: random trees and connected
// instances, and an independent checker for tree partitions.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ssbp/generators.hpp"
#include "ssbp/solver.hpp"
#include "ssbp/tree_partition.hpp"

namespace ssbp::testing {

enum class TreeShape { random, path, star, caterpillar };

/// Tree on n nodes as a graph with randomly oriented edges and shuffled labels.
inline Graph random_tree(std::size_t n, TreeShape shape, Rng& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) {
    NodeId p = 0;
    switch (shape) {
      case TreeShape::random: p = std::uniform_int_distribution<NodeId>(0, i - 1)(rng); break;
      case TreeShape::path: p = i - 1; break;
      case TreeShape::star: p = 0; break;
      case TreeShape::caterpillar: p = i % 2 == 0 ? (i >= 2 ? i - 2 : 0) : i - 1; break;
    }
    NodeId a = perm[p], b = perm[i];
    if (rng() & 1) std::swap(a, b);
    edges.push_back(Edge{a, b, 1.0, static_cast<EdgeIndex>(edges.size())});
  }
  return Graph(n, std::move(edges));
}

/// Random CSSSBP instance that is weakly connected: a random spanning tree of
/// restricted edges plus `opt.m` further random edges.
inline CsssbpInstance random_connected_csssbp(const RandomInstanceOptions& opt, Rng& rng) {
  const std::size_t n = std::max<std::size_t>(opt.n, 1);
  Graph extra = random_graph(opt, rng);
  Graph tree = random_tree(n, TreeShape::random, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> level(1, std::max<std::uint32_t>(opt.weight_levels, 1));
  std::vector<Edge> edges = extra.edges_by_id();
  for (Edge e : tree.edges_by_id()) {
    e.id = static_cast<EdgeIndex>(edges.size());
    e.weight = opt.weight_levels > 0 ? static_cast<double>(level(rng)) : unit(rng);
    edges.push_back(e);
  }
  return CsssbpInstance(Graph(n, std::move(edges)), random_capacities(opt, rng));
}

/// Every property a tree partition must have; one message per violation.
inline std::vector<std::string> partition_violations(const SpanningTree& tree,
                                                     const TreePartition& part) {
  std::vector<std::string> out;
  const std::size_t n = tree.num_nodes();
  const std::size_t s = part.s;
  auto fail = [&](std::size_t gi, const std::string& what) {
    out.push_back("group " + std::to_string(gi) + ": " + what);
  };

  std::vector<std::uint32_t> edge_uses(n, 0);
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<std::int64_t> mark(n, -1);
  for (std::size_t gi = 0; gi < part.size(); ++gi) {
    const auto& nodes = part.groups[gi];
    const auto& edges = part.edges[gi];
    if (nodes.size() < s || nodes.size() >= 3 * s) {
      fail(gi, "size " + std::to_string(nodes.size()) + " outside [s, 3s) for s = " +
                   std::to_string(s));
    }
    for (NodeId v : nodes) {
      if (v >= n) {
        fail(gi, "node out of range");
        return out;
      }
      if (mark[v] == static_cast<std::int64_t>(gi)) fail(gi, "repeated node");
      mark[v] = static_cast<std::int64_t>(gi);
      covered[v] = 1;
    }
    // A subtree: |edges| = |nodes| - 1 and every edge inside the group.
    if (edges.size() + 1 != nodes.size()) fail(gi, "edge count is not node count - 1");
    for (NodeId c : edges) {
      if (c >= n || c == tree.root) {
        fail(gi, "invalid tree edge");
        continue;
      }
      ++edge_uses[c];
      if (mark[c] != static_cast<std::int64_t>(gi) ||
          mark[tree.parent[c]] != static_cast<std::int64_t>(gi)) {
        fail(gi, "edge endpoint outside group");
      }
    }
    // Connected: exactly one group node has its parent edge outside the group.
    std::size_t tops = 0;
    for (NodeId v : nodes) {
      const bool has_parent_edge =
          v != tree.root && std::find(edges.begin(), edges.end(), v) != edges.end();
      if (!has_parent_edge) ++tops;
    }
    if (!nodes.empty() && tops != 1) fail(gi, "not connected");
  }
  for (NodeId c = 0; c < n; ++c) {
    if (c == tree.root) continue;
    if (edge_uses[c] != 1) {
      out.push_back("tree edge " + std::to_string(c) + " used " + std::to_string(edge_uses[c]) +
                    " times");
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!covered[v]) out.push_back("node " + std::to_string(v) + " uncovered");
  }
  if (part.owner.size() != n) {
    out.push_back("owner has wrong size");
  } else {
    for (NodeId v = 0; v < n; ++v) {
      const std::uint32_t o = part.owner[v];
      if (o >= part.size()) {
        out.push_back("owner out of range");
        continue;
      }
      const auto& g = part.groups[o];
      if (std::find(g.begin(), g.end(), v) == g.end()) out.push_back("owner does not hold node");
      for (std::uint32_t earlier = 0; earlier < o; ++earlier) {
        const auto& e = part.groups[earlier];
        if (std::find(e.begin(), e.end(), v) != e.end()) {
          out.push_back("owner is not the first group holding the node");
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace ssbp::testing
