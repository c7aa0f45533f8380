#include "ssbp/single_restricted.hpp"

#include <limits>
#include <stdexcept>

namespace ssbp {

CondensedDag condense(const CsssbpInstance& inst, std::int64_t skip_edge, std::uint64_t& touched) {
  const Graph& g = inst.graph;
  const std::size_t n = g.num_nodes();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

  CondensedDag dag;
  dag.component.assign(n, kNone);
  std::vector<std::uint32_t> index(n, kNone);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<NodeId> scc_stack;
  std::vector<std::pair<NodeId, EdgeIndex>> call_stack;  // (node, next out-edge)
  std::uint32_t next_index = 0;

  // Components are completed sinks-first; finish order reversed is topological.
  std::vector<std::uint32_t> finish_order;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    index[root] = low[root] = next_index++;
    scc_stack.push_back(root);
    call_stack.emplace_back(root, g.out_begin(root));
    ++touched;

    while (!call_stack.empty()) {
      auto& [u, next] = call_stack.back();
      if (next < g.out_end(u)) {
        const EdgeIndex ei = next++;
        ++touched;
        if (static_cast<std::int64_t>(ei) == skip_edge) continue;
        const NodeId v = g.edge(ei).dst;
        if (index[v] == kNone) {
          index[v] = low[v] = next_index++;
          scc_stack.push_back(v);
          call_stack.emplace_back(v, g.out_begin(v));
          ++touched;
        } else if (dag.component[v] == kNone) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const NodeId done = u;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        NodeId parent = call_stack.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        const std::uint32_t c = dag.num_components++;
        dag.capacity.push_back(TieKey::neg_inf());
        NodeId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          dag.component[w] = c;
          dag.capacity[c] = max_key(dag.capacity[c], inst.h[w]);
          ++touched;
        } while (w != done);
        finish_order.push_back(c);
      }
    }
  }

  dag.topo_order.assign(finish_order.rbegin(), finish_order.rend());

  // Condensed edges, grouped by source component in topological order. Parallel
  // condensed edges are kept; the propagation only needs the max per target,
  // which a linear pass over them yields anyway.
  std::vector<std::uint32_t> start(dag.num_components + 1, 0);
  for (EdgeIndex ei = 0; ei < g.num_edges(); ++ei) {
    if (static_cast<std::int64_t>(ei) == skip_edge) continue;
    const Edge& e = g.edge(ei);
    const auto cu = dag.component[e.src], cv = dag.component[e.dst];
    if (cu != cv) ++start[cu + 1];
  }
  for (std::uint32_t c = 0; c < dag.num_components; ++c) start[c + 1] += start[c];
  dag.edges.resize(start.back());
  for (EdgeIndex ei = 0; ei < g.num_edges(); ++ei) {
    const Edge& e = g.edge(ei);
    ++touched;
    if (static_cast<std::int64_t>(ei) == skip_edge) continue;
    const auto cu = dag.component[e.src], cv = dag.component[e.dst];
    if (cu != cv) dag.edges[start[cu]++] = Edge{cu, cv, e.weight, e.id};
  }
  return dag;
}

namespace {

std::vector<TieKey> propagate_unrestricted(const CsssbpInstance& inst, std::int64_t skip_edge,
                                           std::uint64_t& touched) {
  CondensedDag dag = condense(inst, skip_edge, touched);
  // dag.edges is grouped by source component id; walk components in topological
  // order and push each component's capacity across its outgoing edges.
  std::vector<std::uint32_t> start(dag.num_components + 1, 0);
  for (const Edge& e : dag.edges) ++start[e.src + 1];
  for (std::uint32_t c = 0; c < dag.num_components; ++c) start[c + 1] += start[c];
  std::vector<TieKey>& cap = dag.capacity;
  for (std::uint32_t c : dag.topo_order) {
    ++touched;
    for (std::uint32_t i = start[c]; i < start[c + 1]; ++i) {
      const Edge& e = dag.edges[i];
      ++touched;
      cap[e.dst] = max_key(cap[e.dst], min_key(cap[c], e.key()));
    }
  }
  std::vector<TieKey> d(inst.graph.num_nodes());
  for (NodeId v = 0; v < d.size(); ++v) d[v] = cap[dag.component[v]];
  touched += d.size();
  return d;
}

}  // namespace

BottleneckResult solve_zero_restricted(const CsssbpInstance& inst, std::uint64_t* touched) {
  for (const Edge& e : inst.graph.edges()) {
    if (e.restricted()) throw std::invalid_argument("solve_zero_restricted: found a restricted edge");
  }
  std::uint64_t work = inst.graph.num_edges();
  BottleneckResult out{propagate_unrestricted(inst, -1, work)};
  if (touched != nullptr) *touched += work;
  return out;
}

BottleneckResult solve_one_restricted(const CsssbpInstance& inst, std::uint64_t* touched) {
  const Graph& g = inst.graph;
  std::int64_t restricted = -1;
  for (EdgeIndex ei = 0; ei < g.num_edges(); ++ei) {
    if (!g.edge(ei).restricted()) continue;
    if (restricted >= 0) {
      throw std::invalid_argument("solve_one_restricted: more than one restricted edge");
    }
    restricted = ei;
  }
  if (restricted < 0) throw std::invalid_argument("solve_one_restricted: no restricted edge");

  std::uint64_t work = g.num_edges();
  std::vector<TieKey> d = propagate_unrestricted(inst, restricted, work);

  // Every path that uses e0 has capacity at most min(d(u0), w(e0)), and that much
  // reaches everything downstream of v0 through unrestricted edges.
  const Edge& e0 = g.edge(static_cast<EdgeIndex>(restricted));
  const TieKey through = min_key(d[e0.src], e0.key());
  std::vector<bool> seen(g.num_nodes(), false);
  std::vector<NodeId> queue{e0.dst};
  seen[e0.dst] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    d[u] = max_key(d[u], through);
    ++work;
    for (const Edge& e : g.out_edges(u)) {
      ++work;
      if (!seen[e.dst]) {
        seen[e.dst] = true;
        queue.push_back(e.dst);
      }
    }
  }
  if (touched != nullptr) *touched += work;
  return BottleneckResult{std::move(d)};
}

}  // namespace ssbp
