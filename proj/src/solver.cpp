#include "ssbp/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssbp/single_restricted.hpp"
#include "ssbp/split.hpp"

namespace ssbp {

std::uint64_t default_k(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("default_k: n must be positive");
  const double exponent = std::ceil(std::sqrt(std::log2(static_cast<double>(n))));
  const auto e = static_cast<unsigned>(std::min(exponent, 62.0));
  return std::max<std::uint64_t>(2, std::uint64_t{1} << e);
}

Thresholds sample_thresholds(std::span<const Edge> restricted, std::uint64_t k, Rng& rng,
                             std::uint64_t* sort_comparisons) {
  const std::size_t q = restricted.size();
  if (q < 2) throw std::invalid_argument("sample_thresholds: need at least 2 restricted edges");
  if (k < 2) throw std::invalid_argument("sample_thresholds: k must be at least 2");
  const std::size_t l = static_cast<std::size_t>(std::min<std::uint64_t>(k, q));

  std::vector<TieKey> keys;
  keys.reserve(l);
  if (l == q) {
    for (const Edge& e : restricted) keys.push_back(e.key());
  } else {
    std::vector<EdgeIndex> pool(q);
    std::iota(pool.begin(), pool.end(), EdgeIndex{0});
    for (std::size_t j = 0; j < l; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, q - 1);
      std::swap(pool[j], pool[pick(rng)]);
      keys.push_back(restricted[pool[j]].key());
    }
  }
  std::uint64_t comparisons = 0;
  std::sort(keys.begin(), keys.end(), [&comparisons](const TieKey& a, const TieKey& b) {
    ++comparisons;
    return a < b;
  });
  if (sort_comparisons != nullptr) *sort_comparisons += comparisons;
  return Thresholds(keys);
}

SubInstanceSet build_subinstances(const CsssbpInstance& inst, const Thresholds& th,
                                  std::span<const std::uint32_t> levels) {
  const Graph& g = inst.graph;
  const std::size_t n = g.num_nodes();
  const std::size_t num_levels = th.size() + 1;
  if (levels.size() != n) throw std::invalid_argument("build_subinstances: one level per node");

  // Dense slot per non-empty level, local id per node.
  std::vector<std::uint32_t> slot(num_levels, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (levels[v] >= num_levels) throw std::invalid_argument("build_subinstances: level out of range");
    ++slot[levels[v]];
  }
  SubInstanceSet out;
  std::vector<std::uint32_t> level_of_slot;
  for (std::uint32_t i = 0; i < num_levels; ++i) {
    if (slot[i] == 0) continue;
    const std::uint32_t count = slot[i];
    slot[i] = static_cast<std::uint32_t>(level_of_slot.size());
    level_of_slot.push_back(i);
    auto& part = out.parts.emplace_back();
    part.level = i;
    part.to_parent.reserve(count);
  }
  std::vector<NodeId> local(n);
  std::vector<std::vector<TieKey>> h(out.parts.size());
  for (NodeId v = 0; v < n; ++v) {
    auto& part = out.parts[slot[levels[v]]];
    local[v] = static_cast<NodeId>(part.to_parent.size());
    part.to_parent.push_back(v);
    h[slot[levels[v]]].push_back(inst.h[v]);
  }

  std::vector<std::vector<Edge>> edges(out.parts.size());
  std::vector<std::uint64_t> restricted(out.parts.size(), 0);
  std::uint64_t parent_restricted = 0;
  for (const Edge& e : g.edges()) {
    const bool was_restricted = e.restricted();
    parent_restricted += was_restricted;
    const std::uint32_t lu = levels[e.src], lv = levels[e.dst];
    const TieKey key = e.key();
    if (lu > lv) {
      // Arrives from a higher level: acts as an initial capacity for v.
      TieKey& hv = h[slot[lv]][local[e.dst]];
      hv = max_key(hv, key);
      continue;
    }
    if (lu < lv || key < th[lu]) continue;  // cross-level upward or below-level
    const std::uint32_t si = slot[lu];
    const bool above = !(key < th[lu + 1]);
    const double w = above ? kUnrestricted : e.weight;
    edges[si].push_back(Edge{local[e.src], local[e.dst], w, e.id});
    restricted[si] += is_restricted(w);
  }

  for (std::size_t si = 0; si < out.parts.size(); ++si) {
    out.child_edges += edges[si].size();
    out.child_restricted += restricted[si];
    out.max_child_restricted = std::max(out.max_child_restricted, restricted[si]);
    auto& part = out.parts[si];
    part.instance = CsssbpInstance(Graph(part.to_parent.size(), std::move(edges[si])),
                                   std::move(h[si]));
  }
  out.r = g.num_edges() - out.child_edges;
  out.r_prime = parent_restricted - out.child_restricted;
  return out;
}

namespace {

class RecursiveSolver {
public:
  RecursiveSolver(const SolverConfig& cfg, std::size_t top_n, std::size_t top_m,
                  std::size_t top_restricted)
      : cfg_(cfg), rng_(cfg.seed), d_(top_n, TieKey::neg_inf()) {
    k_ = cfg.k != 0 ? cfg.k : default_k(std::max<std::size_t>(top_n, 1));
    if (k_ < 2) throw std::invalid_argument("solver: k must be at least 2");
    depth_limit_ = cfg.depth_limit != 0 ? cfg.depth_limit
                                        : static_cast<std::uint32_t>(top_restricted + 1);
    record_ = cfg.record_calls || cfg.check_lemmas;
    stats_.k = k_;
    stats_.seed = cfg.seed;
    stats_.top_n = top_n;
    stats_.top_m = top_m;
  }

  void run(const CsssbpInstance& top) {
    process(top, {}, 0);
    while (!pending_.empty()) {
      Task task = std::move(pending_.back());
      pending_.pop_back();
      process(task.instance, task.to_top, task.depth);
    }
  }

  BottleneckResult take_result() { return BottleneckResult{std::move(d_)}; }
  SolveStats take_stats() { return std::move(stats_); }

private:
  struct Task {
    CsssbpInstance instance;
    std::vector<NodeId> to_top;
    std::uint32_t depth;
  };

  static NodeId top_id(std::span<const NodeId> to_top, NodeId v) {
    return to_top.empty() ? v : to_top[v];
  }

  void enter(std::uint32_t depth) {
    if (depth > depth_limit_) {
      throw std::runtime_error("recursion depth " + std::to_string(depth) + " exceeds limit " +
                               std::to_string(depth_limit_) + " (k=" + std::to_string(k_) +
                               ", seed=" + std::to_string(cfg_.seed) + ")");
    }
    stats_.max_depth = std::max(stats_.max_depth, depth);
  }

  void process(const CsssbpInstance& inst, std::span<const NodeId> to_top, std::uint32_t depth) {
    const Graph& g = inst.graph;
    const std::size_t n = g.num_nodes();
    if (n == 0) return;
    enter(depth);
    if (n == 1 || g.num_edges() == 0) {
      // Self-loops cannot raise a capacity.
      for (NodeId v = 0; v < n; ++v) d_[top_id(to_top, v)] = inst.h[v];
      ++stats_.base_calls;
      stats_.totals.touched_elements += n;
      return;
    }

    std::vector<std::uint32_t> label;
    const std::size_t count = label_weak_components(g, label);
    stats_.totals.touched_elements += n + g.num_edges();
    if (count == 1) {
      process_connected(inst, to_top, depth);
      return;
    }

    // Isolated nodes are answered here; larger components are solved in place.
    std::vector<std::uint32_t> size(count, 0);
    for (NodeId v = 0; v < n; ++v) ++size[label[v]];
    std::vector<std::uint32_t> renumber(count, 0);
    std::uint32_t kept = 0;
    for (std::size_t c = 0; c < count; ++c) {
      renumber[c] = size[c] > 1 ? kept++ : std::numeric_limits<std::uint32_t>::max();
    }
    for (NodeId v = 0; v < n; ++v) {
      label[v] = renumber[label[v]];
      if (label[v] == std::numeric_limits<std::uint32_t>::max()) {
        d_[top_id(to_top, v)] = inst.h[v];
        ++stats_.base_calls;
      }
    }
    std::vector<Component> parts = induced_subgraphs(g, label, kept);
    for (Component& part : parts) {
      std::vector<TieKey> h(part.nodes.size());
      std::vector<NodeId> map(part.nodes.size());
      for (std::size_t i = 0; i < part.nodes.size(); ++i) {
        h[i] = inst.h[part.nodes[i]];
        map[i] = top_id(to_top, part.nodes[i]);
      }
      CsssbpInstance piece(std::move(part.graph), std::move(h));
      part.nodes.clear();
      part.nodes.shrink_to_fit();
      process_connected(piece, map, depth);
    }
  }

  void process_connected(const CsssbpInstance& inst, std::span<const NodeId> to_top,
                         std::uint32_t depth) {
    const Graph& g = inst.graph;
    std::vector<Edge> restricted;
    for (const Edge& e : g.edges()) {
      if (e.restricted()) restricted.push_back(e);
    }
    stats_.totals.touched_elements += g.num_edges();

    if (restricted.size() <= 1) {
      std::uint64_t touched = 0;
      BottleneckResult base = restricted.empty() ? solve_zero_restricted(inst, &touched)
                                                 : solve_one_restricted(inst, &touched);
      for (NodeId v = 0; v < g.num_nodes(); ++v) d_[top_id(to_top, v)] = base.d[v];
      stats_.totals.touched_elements += touched;
      ++stats_.base_calls;
      return;
    }

    CallRecord rec;
    rec.depth = depth;
    rec.n = g.num_nodes();
    rec.m = g.num_edges();
    rec.restricted = restricted.size();

    Thresholds th = sample_thresholds(restricted, k_, rng_, &rec.counters.sort_comparisons);
    restricted.clear();
    restricted.shrink_to_fit();
    rec.l = th.size();

    SplitResult split = split_levels(inst, th, cfg_.check_lemmas);
    rec.s = split.s;
    rec.b = split.b;
    rec.counters.edge_index_evals = split.counters.edge_evals;
    rec.counters.group_index_evals = split.counters.group_evals;
    rec.counters.brute_searches = split.counters.brute_searches;
    rec.counters.bucket_ops = split.counters.bucket_ops;
    rec.counters.touched_elements = split.counters.touched;
    if (cfg_.check_lemmas) {
      SplitLemmaReport lemmas = check_split_lemmas(inst, th, split);
      rec.lemma_checked = true;
      rec.lazy_edge_violations = lemmas.lazy_edge_violations;
      rec.group_lemma_violations = lemmas.group_lemma_violations;
      rec.scan_order_monotone = split.scan_order_monotone;
      rec.rebucket_strictly_lower = split.rebucket_strictly_lower;
    }

    SubInstanceSet subs = build_subinstances(inst, th, split.levels);
    rec.r = subs.r;
    rec.r_prime = subs.r_prime;
    rec.children = subs.parts.size();
    rec.child_edges = subs.child_edges;
    rec.child_restricted = subs.child_restricted;
    rec.max_child_restricted = subs.max_child_restricted;
    rec.counters.touched_elements += g.num_nodes() + g.num_edges();

    ++stats_.split_calls;
    stats_.sum_b += rec.b;
    stats_.totals += rec.counters;
    if (record_) stats_.calls.push_back(rec);

    for (SubInstance& part : subs.parts) {
      std::vector<NodeId> map(part.to_parent.size());
      for (std::size_t i = 0; i < map.size(); ++i) map[i] = top_id(to_top, part.to_parent[i]);
      pending_.push_back(Task{std::move(part.instance), std::move(map), depth + 1});
    }
  }

  const SolverConfig& cfg_;
  Rng rng_;
  std::uint64_t k_ = 2;
  std::uint32_t depth_limit_ = 0;
  bool record_ = false;
  std::vector<TieKey> d_;
  SolveStats stats_;
  std::vector<Task> pending_;
};

}  // namespace

std::pair<BottleneckResult, SolveStats> solve_csssbp(const CsssbpInstance& inst,
                                                     const SolverConfig& cfg) {
  RecursiveSolver solver(cfg, inst.graph.num_nodes(), inst.graph.num_edges(),
                         inst.graph.count_restricted());
  solver.run(inst);
  return {solver.take_result(), solver.take_stats()};
}

std::pair<BottleneckResult, SolveStats> solve_ssbp(const SsbpInstance& inst,
                                                   const SolverConfig& cfg) {
  auto [result, stats] = solve_csssbp(ssbp_to_csssbp(inst), cfg);
  result.d[inst.source] = TieKey::pos_inf();
  return {std::move(result), std::move(stats)};
}

}  // namespace ssbp
