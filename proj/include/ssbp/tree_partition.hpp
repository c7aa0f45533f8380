#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssbp/graph.hpp"

namespace ssbp {

/// Rooted spanning tree of a graph's undirected view. Tree edges are named by
/// their child endpoint: edge `c` joins parent[c] and c.
struct SpanningTree {
  NodeId root = 0;
  std::vector<NodeId> parent;          // root is its own parent
  std::vector<EdgeIndex> parent_edge;  // graph edge behind (parent[c], c); unused for root
  std::vector<std::uint32_t> child_offsets;
  std::vector<NodeId> children;

  std::size_t num_nodes() const noexcept { return parent.size(); }
  std::span<const NodeId> children_of(NodeId v) const noexcept {
    return std::span<const NodeId>(children).subspan(child_offsets[v],
                                                     child_offsets[v + 1] - child_offsets[v]);
  }
};

/// BFS from node 0 over edges taken in both directions. Throws
/// std::invalid_argument if the graph is not weakly connected.
SpanningTree build_spanning_tree(const Graph& g, std::uint64_t* touched = nullptr);

/// Edge-disjoint subtrees covering every tree edge. Subtrees may share nodes;
/// `owner` gives each node to exactly one group (the first reported one holding it).
struct TreePartition {
  std::size_t s = 0;
  std::vector<std::vector<NodeId>> groups;
  std::vector<std::vector<NodeId>> edges;  // tree edges per group, by child endpoint
  std::vector<std::uint32_t> owner;

  std::size_t size() const noexcept { return groups.size(); }
};

/// Partition into subtrees of [s, 3s) nodes each, in linear time.
/// Throws std::invalid_argument unless 1 <= s <= n.
TreePartition partition_tree(const SpanningTree& tree, std::size_t s,
                             std::uint64_t* touched = nullptr);

}  // namespace ssbp
