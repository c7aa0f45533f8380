#include "ssbp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ssbp {

Graph::Graph(std::size_t num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes) {
  if (num_nodes > std::numeric_limits<NodeId>::max() ||
      edges.size() > std::numeric_limits<EdgeIndex>::max()) {
    throw std::length_error("graph too large for 32-bit ids");
  }
  offsets_.assign(num_nodes + 1, 0);
  for (const Edge& e : edges) {
    if (e.src >= num_nodes || e.dst >= num_nodes) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(e.src, e.dst)) +
                              " out of range for " + std::to_string(num_nodes) + " nodes");
    }
    if (std::isnan(e.weight) || e.weight == -kInf) {
      throw std::invalid_argument("edge weight must be a real number or +inf");
    }
    ++offsets_[e.src + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());

  bool sorted = std::is_sorted(edges.begin(), edges.end(),
                               [](const Edge& a, const Edge& b) { return a.src < b.src; });
  if (sorted) {
    edges_ = std::move(edges);
    return;
  }
  edges_.resize(edges.size());
  std::vector<EdgeIndex> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) edges_[cursor[e.src]++] = e;
}

Graph Graph::from_list(std::size_t num_nodes,
                       const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  EdgeIndex id = 0;
  for (const auto& [u, v, w] : edges) list.push_back(Edge{u, v, w, id++});
  return Graph(num_nodes, std::move(list));
}

std::size_t Graph::count_restricted() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.restricted(); }));
}

TieKey Graph::max_edge_key() const noexcept {
  if (edges_.empty()) return TieKey::pos_inf();
  TieKey best = edges_.front().key();
  for (const Edge& e : edges_) best = max_key(best, e.key());
  return best;
}

std::vector<Edge> Graph::edges_by_id() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return out;
}

SsbpInstance::SsbpInstance(Graph g, NodeId s) : graph(std::move(g)), source(s) {
  if (source >= graph.num_nodes()) {
    throw std::out_of_range("source " + std::to_string(source) + " is not a node");
  }
}

CsssbpInstance::CsssbpInstance(Graph g, std::vector<TieKey> capacities)
    : graph(std::move(g)), h(std::move(capacities)) {
  if (h.size() != graph.num_nodes()) {
    throw std::invalid_argument("capacity vector has " + std::to_string(h.size()) +
                                " entries, expected " + std::to_string(graph.num_nodes()));
  }
}

CsssbpInstance::CsssbpInstance(Graph g, const std::vector<double>& capacities)
    : graph(std::move(g)) {
  if (capacities.size() != graph.num_nodes()) {
    throw std::invalid_argument("capacity vector has " + std::to_string(capacities.size()) +
                                " entries, expected " + std::to_string(graph.num_nodes()));
  }
  h.reserve(capacities.size());
  for (double c : capacities) {
    if (std::isnan(c)) throw std::invalid_argument("capacity must not be NaN");
    h.push_back(TieKey::capacity(c));
  }
}

std::vector<double> BottleneckResult::values() const {
  std::vector<double> out(d.size());
  std::transform(d.begin(), d.end(), out.begin(), [](const TieKey& k) { return k.value(); });
  return out;
}

CsssbpInstance ssbp_to_csssbp(const SsbpInstance& inst) {
  std::vector<TieKey> h(inst.graph.num_nodes(), TieKey::neg_inf());
  // Max edge key rather than (max, -1): every path through the heaviest edge keeps
  // its exact key, so keys agree with the plain Dijkstra run from +inf.
  h[inst.source] = inst.graph.max_edge_key();
  return CsssbpInstance(inst.graph, std::move(h));
}

SsbpReduction csssbp_to_ssbp(const CsssbpInstance& inst) {
  const std::size_t n = inst.graph.num_nodes();
  std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
  EdgeIndex next_id = 0;
  for (const Edge& e : edges) next_id = std::max(next_id, e.id + 1);
  const auto source = static_cast<NodeId>(n);
  for (NodeId v = 0; v < n; ++v) {
    if (inst.h[v].is_neg_inf()) continue;
    // Capacity keys (x, -1) become edge keys (x, id); numeric answers are unchanged.
    edges.push_back(Edge{source, v, inst.h[v].value(), next_id++});
  }
  SsbpReduction out;
  out.source = source;
  out.instance = SsbpInstance(Graph(n + 1, std::move(edges)), source);
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit DisjointSets(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

std::size_t label_weak_components(const Graph& g, std::vector<std::uint32_t>& label) {
  const std::size_t n = g.num_nodes();
  DisjointSets sets(n);
  for (const Edge& e : g.edges()) sets.unite(e.src, e.dst);
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root_label(n, kUnset);
  label.assign(n, 0);
  std::uint32_t count = 0;
  for (NodeId v = 0; v < n; ++v) {
    std::uint32_t r = sets.find(v);
    if (root_label[r] == kUnset) root_label[r] = count++;
    label[v] = root_label[r];
  }
  return count;
}

std::vector<Component> induced_subgraphs(const Graph& g, std::span<const std::uint32_t> label,
                                         std::size_t num_labels) {
  const std::size_t n = g.num_nodes();
  std::vector<Component> parts(num_labels);
  std::vector<NodeId> local(n);
  for (NodeId v = 0; v < n; ++v) {
    if (label[v] >= num_labels) continue;
    auto& nodes = parts[label[v]].nodes;
    local[v] = static_cast<NodeId>(nodes.size());
    nodes.push_back(v);
  }
  std::vector<std::vector<Edge>> edges(num_labels);
  for (const Edge& e : g.edges()) {
    std::uint32_t c = label[e.src];
    if (c >= num_labels || label[e.dst] != c) continue;
    edges[c].push_back(Edge{local[e.src], local[e.dst], e.weight, e.id});
  }
  for (std::size_t c = 0; c < num_labels; ++c) {
    parts[c].graph = Graph(parts[c].nodes.size(), std::move(edges[c]));
  }
  return parts;
}

std::vector<Component> weakly_connected_components(const Graph& g) {
  std::vector<std::uint32_t> label;
  std::size_t count = label_weak_components(g, label);
  return induced_subgraphs(g, label, count);
}

}  // namespace ssbp
