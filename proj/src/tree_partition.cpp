#include "ssbp/tree_partition.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ssbp {

namespace {
constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
}

SpanningTree build_spanning_tree(const Graph& g, std::uint64_t* touched) {
  const std::size_t n = g.num_nodes();
  std::uint64_t work = 0;
  SpanningTree t;
  t.parent.assign(n, kNone);
  t.parent_edge.assign(n, kNone);
  t.child_offsets.assign(n + 1, 0);
  if (n == 0) return t;

  // Undirected adjacency: every edge listed at both endpoints.
  std::vector<std::uint32_t> start(n + 1, 0);
  for (const Edge& e : g.edges()) {
    ++start[e.src + 1];
    ++start[e.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::pair<NodeId, EdgeIndex>> adj(start.back());
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (EdgeIndex ei = 0; ei < g.num_edges(); ++ei) {
      const Edge& e = g.edge(ei);
      adj[cursor[e.src]++] = {e.dst, ei};
      adj[cursor[e.dst]++] = {e.src, ei};
    }
  }
  work += n + 2 * adj.size();

  t.root = 0;
  t.parent[0] = 0;
  std::vector<NodeId> order{0};
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId u = order[head];
    for (std::uint32_t i = start[u]; i < start[u + 1]; ++i) {
      const auto [v, ei] = adj[i];
      ++work;
      if (t.parent[v] != kNone) continue;
      t.parent[v] = u;
      t.parent_edge[v] = ei;
      order.push_back(v);
    }
  }
  if (order.size() != n) {
    throw std::invalid_argument("spanning tree: graph is not weakly connected (" +
                                std::to_string(order.size()) + " of " + std::to_string(n) +
                                " nodes reached)");
  }

  for (NodeId v = 0; v < n; ++v) {
    if (v != t.root) ++t.child_offsets[t.parent[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_offsets[v + 1] += t.child_offsets[v];
  t.children.resize(n - 1);
  std::vector<std::uint32_t> cursor(t.child_offsets.begin(), t.child_offsets.end() - 1);
  for (NodeId v : order) {
    if (v != t.root) t.children[cursor[t.parent[v]]++] = v;
  }
  work += 2 * n;
  if (touched != nullptr) *touched += work;
  return t;
}

namespace {

// Node and tree-edge lists spliced in O(1). A node sits in at most one live list
// at a time: reported lists are copied out before their root starts a new one.
struct Piece {
  NodeId node_head = kNone, node_tail = kNone;
  std::uint32_t node_count = 0;
  NodeId edge_head = kNone, edge_tail = kNone;
};

struct PieceLinks {
  std::vector<NodeId> node_next;
  std::vector<NodeId> edge_next;

  Piece single(NodeId v) {
    node_next[v] = kNone;
    return Piece{v, v, 1, kNone, kNone};
  }

  // Appends `child` and the tree edge (parent, c) into `into`.
  void absorb(Piece& into, const Piece& child, NodeId c) {
    node_next[into.node_tail] = child.node_head;
    into.node_tail = child.node_tail;
    into.node_count += child.node_count;
    edge_next[c] = child.edge_head;
    NodeId tail = child.edge_head == kNone ? c : child.edge_tail;
    if (into.edge_head == kNone) {
      into.edge_head = c;
    } else {
      edge_next[into.edge_tail] = c;
    }
    into.edge_tail = tail;
  }
};

}  // namespace

TreePartition partition_tree(const SpanningTree& tree, std::size_t s, std::uint64_t* touched) {
  const std::size_t n = tree.num_nodes();
  if (s < 1 || s > n) {
    throw std::invalid_argument("partition_tree: s=" + std::to_string(s) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  std::uint64_t work = 0;
  TreePartition out;
  out.s = s;
  out.owner.assign(n, kNone);

  PieceLinks links{std::vector<NodeId>(n, kNone), std::vector<NodeId>(n, kNone)};
  std::vector<NodeId> report_root;

  auto report = [&](const Piece& p, NodeId root) {
    const auto g = static_cast<std::uint32_t>(out.groups.size());
    auto& nodes = out.groups.emplace_back();
    nodes.reserve(p.node_count);
    for (NodeId x = p.node_head; x != kNone; x = links.node_next[x]) {
      nodes.push_back(x);
      if (out.owner[x] == kNone) out.owner[x] = g;
      ++work;
    }
    auto& edges = out.edges.emplace_back();
    for (NodeId c = p.edge_head; c != kNone; c = links.edge_next[c]) {
      edges.push_back(c);
      ++work;
      if (c == p.edge_tail) break;
    }
    report_root.push_back(root);
  };

  // Post-order DFS with an explicit stack; frame = (node, next child, accumulating piece).
  struct Frame {
    NodeId v;
    std::uint32_t next_child;
    Piece acc;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.root, tree.child_offsets[tree.root], links.single(tree.root)});
  Piece remnant;
  while (!stack.empty()) {
    Frame& f = stack.back();
    ++work;
    if (f.next_child < tree.child_offsets[f.v + 1]) {
      const NodeId c = tree.children[f.next_child++];
      stack.push_back({c, tree.child_offsets[c], links.single(c)});
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      remnant = done.acc;
      break;
    }
    Frame& parent = stack.back();
    links.absorb(parent.acc, done.acc, done.v);
    if (parent.acc.node_count >= s) {
      report(parent.acc, parent.v);
      parent.acc = links.single(parent.v);
    }
  }

  if (out.groups.empty()) {
    report(remnant, tree.root);
  } else {
    // The last reported root heads every piece returned after it, so it is in the
    // remnant; merge the remnant minus that root into the last group.
    const auto last = static_cast<std::uint32_t>(out.groups.size() - 1);
    const NodeId shared = report_root.back();
    for (NodeId x = remnant.node_head; x != kNone; x = links.node_next[x]) {
      ++work;
      if (x == shared) continue;
      out.groups[last].push_back(x);
      if (out.owner[x] == kNone) out.owner[x] = last;
    }
    for (NodeId c = remnant.edge_head; c != kNone; c = links.edge_next[c]) {
      out.edges[last].push_back(c);
      ++work;
      if (c == remnant.edge_tail) break;
    }
  }
  if (touched != nullptr) *touched += work;
  return out;
}

}  // namespace ssbp
