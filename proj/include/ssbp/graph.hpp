#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "ssbp/keys.hpp"

namespace ssbp {

/// Directed edge. `id` is the tie-break identity and survives subgraph extraction,
/// so keys stay consistent between an instance and every instance derived from it.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = kUnrestricted;
  EdgeIndex id = 0;

  TieKey key() const noexcept { return {weight, static_cast<std::int64_t>(id)}; }
  bool restricted() const noexcept { return is_restricted(weight); }
};

/// Directed multigraph in compressed adjacency form: one contiguous edge array
/// sorted by source, with per-node offsets. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Takes ownership of `edges` and groups them by source (stable).
  /// Edge ids are kept as given and must be unique.
  Graph(std::size_t num_nodes, std::vector<Edge> edges);

  /// Builds a graph from (src, dst, weight) triples; ids follow input order.
  static Graph from_list(std::size_t num_nodes,
                         const std::vector<std::tuple<NodeId, NodeId, double>>& edges);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const noexcept { return edges_[e]; }

  EdgeIndex out_begin(NodeId u) const noexcept { return offsets_[u]; }
  EdgeIndex out_end(NodeId u) const noexcept { return offsets_[u + 1]; }
  std::span<const Edge> out_edges(NodeId u) const noexcept {
    return std::span<const Edge>(edges_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
  }

  std::size_t count_restricted() const noexcept;

  /// Largest edge key, or +inf for an edge-free graph.
  TieKey max_edge_key() const noexcept;

  /// Edges in ascending id order (the order they were supplied in for `from_list`).
  std::vector<Edge> edges_by_id() const;

private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeIndex> offsets_{0};
};

/// Single-source instance (G, w, s).
struct SsbpInstance {
  Graph graph;
  NodeId source = 0;

  SsbpInstance() = default;
  SsbpInstance(Graph g, NodeId s);
};

/// Instance with per-node initial capacities (G, w, h).
struct CsssbpInstance {
  Graph graph;
  std::vector<TieKey> h;

  CsssbpInstance() = default;
  CsssbpInstance(Graph g, std::vector<TieKey> capacities);
  CsssbpInstance(Graph g, const std::vector<double>& capacities);
};

/// Maximum path capacity ending at each node, as keys. `values()` projects to
/// plain numbers; the projection is monotone so it commutes with max/min.
struct BottleneckResult {
  std::vector<TieKey> d;

  double value(NodeId v) const noexcept { return d[v].value(); }
  std::vector<double> values() const;
};

CsssbpInstance ssbp_to_csssbp(const SsbpInstance& inst);

/// CSSSBP -> SSBP. The new source is node n; original nodes keep their ids.
struct SsbpReduction {
  SsbpInstance instance;
  NodeId source = 0;
};
SsbpReduction csssbp_to_ssbp(const CsssbpInstance& inst);

/// Induced piece of a graph. `nodes[local] == parent id`.
struct Component {
  std::vector<NodeId> nodes;
  Graph graph;
};

/// Labels every node with its weakly-connected component (0-based, in order of
/// first appearance by node id). Returns the component count.
std::size_t label_weak_components(const Graph& g, std::vector<std::uint32_t>& label);

std::vector<Component> weakly_connected_components(const Graph& g);

/// Splits `g` by a node labelling into induced subgraphs. Edges crossing labels are
/// dropped, as are nodes labelled `num_labels` or above.
std::vector<Component> induced_subgraphs(const Graph& g, std::span<const std::uint32_t> label,
                                         std::size_t num_labels);

}  // namespace ssbp
