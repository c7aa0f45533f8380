#include "ssbp/split.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "ssbp/tree_partition.hpp"

namespace ssbp {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// l + 1 intrusive doubly-linked lists of nodes keyed by label.
class NodeBuckets {
public:
  NodeBuckets(std::size_t buckets, std::size_t n)
      : head_(buckets, kNone), prev_(n, kNone), next_(n, kNone) {}

  bool empty(std::uint32_t b) const noexcept { return head_[b] == kNone; }

  void push(std::uint32_t b, NodeId v) noexcept {
    prev_[v] = kNone;
    next_[v] = head_[b];
    if (head_[b] != kNone) prev_[head_[b]] = v;
    head_[b] = v;
  }

  void erase(std::uint32_t b, NodeId v) noexcept {
    if (prev_[v] != kNone) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[b] = next_[v];
    }
    if (next_[v] != kNone) prev_[next_[v]] = prev_[v];
  }

  NodeId pop(std::uint32_t b) noexcept {
    NodeId v = head_[b];
    erase(b, v);
    return v;
  }

private:
  std::vector<NodeId> head_, prev_, next_;
};

// Initializing nodes grouped by tree-partition group, deleted lazily.
class Groups {
public:
  Groups(const TreePartition& part, const std::vector<TieKey>& h, std::vector<std::uint8_t>& alive)
      : h_(h), alive_(alive), begin_(part.size() + 1, 0), end_(part.size(), 0),
        dead_(part.size(), 0) {
    for (NodeId v = 0; v < part.owner.size(); ++v) {
      if (alive_[v]) ++begin_[part.owner[v] + 1];
    }
    for (std::size_t g = 0; g < part.size(); ++g) begin_[g + 1] += begin_[g];
    members_.resize(begin_.back());
    std::copy(begin_.begin(), begin_.end() - 1, end_.begin());
    for (NodeId v = 0; v < part.owner.size(); ++v) {
      if (alive_[v]) members_[end_[part.owner[v]]++] = v;
    }
  }

  std::size_t size() const noexcept { return end_.size(); }
  bool empty(std::uint32_t g) const noexcept { return end_[g] - begin_[g] == dead_[g]; }

  std::vector<NodeId> alive_members(std::uint32_t g) const {
    std::vector<NodeId> out;
    for (std::uint32_t i = begin_[g]; i < end_[g]; ++i) {
      if (alive_[members_[i]]) out.push_back(members_[i]);
    }
    return out;
  }

  void kill(std::uint32_t g, NodeId v) noexcept {
    alive_[v] = 0;
    ++dead_[g];
  }

  /// Maximum-capacity live member; the group must be non-empty.
  NodeId max_member(std::uint32_t g, std::uint64_t& touched) {
    compact_if_sparse(g);
    NodeId best = kNone;
    for (std::uint32_t i = begin_[g]; i < end_[g]; ++i) {
      const NodeId v = members_[i];
      ++touched;
      if (!alive_[v]) continue;
      if (best == kNone || h_[best] < h_[v]) best = v;
    }
    return best;
  }

  /// Removes and reports every live member with capacity >= `floor`.
  template <class Fn>
  void drain_at_least(std::uint32_t g, const TieKey& floor, std::uint64_t& touched, Fn&& take) {
    compact_if_sparse(g);
    for (std::uint32_t i = begin_[g]; i < end_[g]; ++i) {
      const NodeId v = members_[i];
      ++touched;
      if (alive_[v] && !(h_[v] < floor)) {
        kill(g, v);
        take(v);
      }
    }
  }

private:
  void compact_if_sparse(std::uint32_t g) {
    const std::uint32_t live = end_[g] - begin_[g] - dead_[g];
    if (dead_[g] <= live) return;
    std::uint32_t out = begin_[g];
    for (std::uint32_t i = begin_[g]; i < end_[g]; ++i) {
      if (alive_[members_[i]]) members_[out++] = members_[i];
    }
    end_[g] = out;
    dead_[g] = 0;
  }

  const std::vector<TieKey>& h_;
  std::vector<std::uint8_t>& alive_;
  std::vector<std::uint32_t> begin_, end_, dead_;
  std::vector<NodeId> members_;
};

}  // namespace

std::size_t split_group_size(std::size_t l, std::size_t n) noexcept {
  std::size_t s = l <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(l - 1));
  return std::max<std::size_t>(1, std::min(s, n));
}

SplitResult split_levels(const CsssbpInstance& inst, const Thresholds& th, bool keep_trace) {
  const Graph& g = inst.graph;
  const std::vector<TieKey>& h = inst.h;
  const std::size_t n = g.num_nodes();
  const std::size_t l = th.size();
  if (l == 0) throw std::invalid_argument("split_levels: need at least one threshold");

  SplitResult out;
  SplitCounters& ct = out.counters;
  if (keep_trace) out.trace.emplace();
  if (n == 0) return out;

  out.s = split_group_size(l, n);
  SpanningTree tree = build_spanning_tree(g, &ct.touched);
  TreePartition part = partition_tree(tree, out.s, &ct.touched);
  out.b = part.size();

  constexpr std::uint32_t kUnlabeled = kNone;
  std::vector<std::uint32_t>& label = out.levels;
  label.assign(n, kUnlabeled);
  std::vector<std::uint8_t> scanned(n, 0);
  std::vector<std::uint8_t> in_group(n, 1);
  NodeBuckets c_buckets(l + 1, n);
  const auto top = static_cast<std::uint32_t>(l);

  // I(+inf) = l is known without an evaluation; those nodes skip the groups.
  for (NodeId v = 0; v < n; ++v) {
    if (h[v].is_pos_inf()) {
      in_group[v] = 0;
      label[v] = top;
      c_buckets.push(top, v);
      ++ct.bucket_ops;
    }
  }

  Groups groups(part, h, in_group);
  std::vector<std::uint32_t> group_evals(groups.size(), 0);
  if (keep_trace) {
    out.trace->group_members.resize(groups.size());
    for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
      out.trace->group_members[gi] = groups.alive_members(gi);
    }
  }

  // B buckets: singly-linked lists of group ids keyed by the index of the
  // group's maximum capacity at its last evaluation.
  std::vector<std::uint32_t> b_head(l + 1, kNone);
  std::vector<std::uint32_t> b_next(groups.size(), kNone);
  auto bucket_group = [&](std::uint32_t gi) {
    const NodeId best = groups.max_member(gi, ct.touched);
    ++ct.brute_searches;
    const std::uint32_t idx = th.index_of(h[best], ct.group_evals);
    ++group_evals[gi];
    b_next[gi] = b_head[idx];
    b_head[idx] = gi;
    ++ct.bucket_ops;
    return idx;
  };
  for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
    if (!groups.empty(gi)) bucket_group(gi);
  }

  std::uint32_t last_scan = top;
  for (std::uint32_t i = top + 1; i-- > 0;) {
    const TieKey& lambda_i = th[i];

    for (std::uint32_t gi = b_head[i]; gi != kNone; gi = b_next[gi]) {
      ++ct.brute_searches;
      groups.drain_at_least(gi, lambda_i, ct.touched, [&](NodeId u) {
        label[u] = i;
        c_buckets.push(i, u);
        ++ct.bucket_ops;
      });
    }

    while (!c_buckets.empty(i)) {
      const NodeId u = c_buckets.pop(i);
      ++ct.bucket_ops;
      scanned[u] = 1;
      if (i > last_scan) out.scan_order_monotone = false;
      last_scan = i;
      const std::uint32_t du = label[u];
      for (EdgeIndex ei = g.out_begin(u); ei < g.out_end(u); ++ei) {
        const Edge& e = g.edge(ei);
        ++ct.touched;
        const TieKey w = e.key();
        std::uint32_t w_bar = du;
        if (w < th[du]) {
          w_bar = th.index_of(w, ct.edge_evals);
          if (keep_trace) out.trace->evaluated_edges.push_back(ei);
        }
        const NodeId v = e.dst;
        if (!(h[v] < th[w_bar])) continue;
        if (label[v] != kUnlabeled && w_bar <= label[v]) continue;
        if (label[v] != kUnlabeled) c_buckets.erase(label[v], v);
        if (in_group[v]) groups.kill(part.owner[v], v);
        label[v] = w_bar;
        c_buckets.push(w_bar, v);
        ct.bucket_ops += 2;
      }
    }

    // Every member left in these groups has capacity below lambda_i now, so each
    // re-evaluation lands strictly lower.
    std::uint32_t gi = b_head[i];
    b_head[i] = kNone;
    while (gi != kNone) {
      const std::uint32_t next = b_next[gi];
      if (!groups.empty(gi)) {
        if (bucket_group(gi) >= i) out.rebucket_strictly_lower = false;
      }
      gi = next;
    }
  }

  for (const Edge& e : g.edges()) {
    const std::uint32_t lu = label[e.src], lv = label[e.dst];
    if (lu != lv || e.key() < th[lu]) ++ct.r_removed;
  }
  ct.touched += g.num_edges();
  if (keep_trace) out.trace->group_evals = std::move(group_evals);
  return out;
}

SplitLemmaReport check_split_lemmas(const CsssbpInstance& inst, const Thresholds& th,
                                    const SplitResult& split) {
  if (!split.trace) throw std::invalid_argument("check_split_lemmas: split ran without a trace");
  const auto& levels = split.levels;
  SplitLemmaReport rep;
  for (EdgeIndex ei : split.trace->evaluated_edges) {
    const Edge& e = inst.graph.edge(ei);
    const bool cross = levels[e.src] != levels[e.dst];
    const bool below = !cross && e.key() < th[levels[e.src]];
    if (!cross && !below) ++rep.lazy_edge_violations;
  }
  const auto& members = split.trace->group_members;
  for (std::size_t gi = 0; gi < members.size(); ++gi) {
    std::unordered_set<std::uint32_t> distinct;
    for (NodeId v : members[gi]) distinct.insert(levels[v]);
    if (split.trace->group_evals[gi] > distinct.size()) ++rep.group_lemma_violations;
  }
  return rep;
}

}  // namespace ssbp
