#include "ssbp/baselines.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace ssbp {

namespace {

enum class Status : std::uint8_t { unsearched, labeled, scanned };

struct HeapEntry {
  TieKey label;
  NodeId node;
};

BottleneckResult run_dijkstra(const Graph& g, std::vector<TieKey> label, std::vector<Status> status,
                              std::uint64_t* heap_comparisons) {
  std::uint64_t comparisons = 0;
  auto less = [&comparisons](const HeapEntry& a, const HeapEntry& b) {
    ++comparisons;
    return a.label < b.label;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(less)> heap(less);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (status[v] == Status::labeled) heap.push({label[v], v});
  }
  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    const NodeId u = top.node;
    if (status[u] == Status::scanned || top.label != label[u]) continue;  // stale entry
    status[u] = Status::scanned;
    for (const Edge& e : g.out_edges(u)) {
      if (status[e.dst] == Status::scanned) continue;
      TieKey through = min_key(label[u], e.key());
      if (label[e.dst] < through) {
        label[e.dst] = through;
        status[e.dst] = Status::labeled;
        heap.push({through, e.dst});
      }
    }
  }
  if (heap_comparisons != nullptr) *heap_comparisons = comparisons;
  return BottleneckResult{std::move(label)};
}

}  // namespace

BottleneckResult dijkstra_ssbp(const SsbpInstance& inst, std::uint64_t* heap_comparisons) {
  const std::size_t n = inst.graph.num_nodes();
  std::vector<TieKey> label(n, TieKey::neg_inf());
  std::vector<Status> status(n, Status::unsearched);
  label[inst.source] = TieKey::pos_inf();
  status[inst.source] = Status::labeled;
  return run_dijkstra(inst.graph, std::move(label), std::move(status), heap_comparisons);
}

BottleneckResult dijkstra_csssbp(const CsssbpInstance& inst, std::uint64_t* heap_comparisons) {
  std::vector<Status> status(inst.graph.num_nodes(), Status::labeled);
  return run_dijkstra(inst.graph, inst.h, std::move(status), heap_comparisons);
}

BottleneckResult oracle_csssbp(const CsssbpInstance& inst) {
  std::vector<TieKey> d = inst.h;
  const auto edges = inst.graph.edges();
  // Labels only increase and each sweep fixes at least one more node, so n + 1
  // sweeps always reach the fixpoint.
  for (std::size_t sweep = 0; sweep <= inst.graph.num_nodes(); ++sweep) {
    bool changed = false;
    for (const Edge& e : edges) {
      TieKey through = min_key(d[e.src], e.key());
      if (d[e.dst] < through) {
        d[e.dst] = through;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return BottleneckResult{std::move(d)};
}

namespace {

void enumerate_paths(const Graph& g, NodeId u, TieKey capacity, std::vector<bool>& on_path,
                     std::vector<TieKey>& best) {
  for (const Edge& e : g.out_edges(u)) {
    if (on_path[e.dst]) continue;
    TieKey c = min_key(capacity, e.key());
    best[e.dst] = max_key(best[e.dst], c);
    on_path[e.dst] = true;
    enumerate_paths(g, e.dst, c, on_path, best);
    on_path[e.dst] = false;
  }
}

}  // namespace

BottleneckResult oracle_paths_ssbp(const SsbpInstance& inst) {
  const std::size_t n = inst.graph.num_nodes();
  if (n > kPathOracleMaxNodes) {
    throw std::invalid_argument("path enumeration oracle supports at most " +
                                std::to_string(kPathOracleMaxNodes) + " nodes");
  }
  std::vector<TieKey> best(n, TieKey::neg_inf());
  std::vector<bool> on_path(n, false);
  on_path[inst.source] = true;
  enumerate_paths(inst.graph, inst.source, TieKey::pos_inf(), on_path, best);
  best[inst.source] = TieKey::pos_inf();
  return BottleneckResult{std::move(best)};
}

}  // namespace ssbp
