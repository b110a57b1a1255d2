#include "baltree/median2.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "baltree/errors.hpp"

namespace baltree {

namespace {

// 1-median of the component {v : label[v] == side} containing `root`.
// `expected` is the component size, or 0 to skip the connectivity check.
OneMedian median_of_component(const WeightedTree& tree,
                              const std::vector<std::uint8_t>& label,
                              std::uint8_t side, VertexId root,
                              std::size_t expected) {
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;
  std::vector<VertexId> order;
  std::vector<VertexId> parent(slots, 0);
  std::vector<EdgeIndex> parent_edge(slots, -1);
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (const Arc& a : tree.arcs(x)) {
      if (a.edge == parent_edge[x]) continue;
      if (label[static_cast<std::size_t>(a.to)] != side) continue;
      parent[a.to] = x;
      parent_edge[a.to] = a.edge;
      stack.push_back(a.to);
    }
  }
  if (expected != 0 && order.size() != expected) {
    throw std::invalid_argument("side does not induce a connected subtree");
  }

  std::vector<double> below(slots, 0.0);     // subtree weight
  std::vector<double> heaviest(slots, 0.0);  // heaviest child subtree
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId x = *it;
    below[x] += tree.weight(x);
    if (parent[x] != 0) {
      below[parent[x]] += below[x];
      heaviest[parent[x]] = std::max(heaviest[parent[x]], below[x]);
    }
  }
  const double total = below[root];

  std::vector<double> branch(slots, 0.0);
  double lightest = std::numeric_limits<double>::infinity();
  for (VertexId x : order) {
    branch[x] = std::max(heaviest[x], total - below[x]);
    lightest = std::min(lightest, branch[x]);
  }
  // The minimum-branch vertex (a centroid) is always a median; the check
  // against it only matters when rounding hides the exact majority test.
  VertexId best = 0;
  for (VertexId x : order) {
    if ((2.0 * branch[x] <= total || branch[x] == lightest) &&
        (best == 0 || x < best)) {
      best = x;
    }
  }

  // Cost by one traversal from the chosen median, restricted to the side.
  OneMedian result{best, 0.0};
  std::vector<std::pair<VertexId, EdgeIndex>> walk{{best, -1}};
  std::vector<double> depth(slots, 0.0);
  while (!walk.empty()) {
    const auto [x, via] = walk.back();
    walk.pop_back();
    result.cost += tree.weight(x) * depth[x];
    for (const Arc& a : tree.arcs(x)) {
      if (a.edge == via) continue;
      if (label[static_cast<std::size_t>(a.to)] != side) continue;
      depth[a.to] = depth[x] + a.length;
      walk.emplace_back(a.to, a.edge);
    }
  }
  return result;
}

}  // namespace

OneMedian one_median(const WeightedTree& tree, std::span<const VertexId> side) {
  if (side.empty()) throw std::invalid_argument("empty side");
  std::vector<std::uint8_t> label(static_cast<std::size_t>(tree.size()) + 1, 0);
  for (VertexId v : side) {
    if (!tree.valid_vertex(v)) {
      throw std::invalid_argument("side holds invalid vertex " + std::to_string(v));
    }
    if (label[static_cast<std::size_t>(v)] != 0) {
      throw std::invalid_argument("side repeats vertex " + std::to_string(v));
    }
    label[static_cast<std::size_t>(v)] = 1;
  }
  const VertexId root = *std::min_element(side.begin(), side.end());
  return median_of_component(tree, label, 1, root, side.size());
}

MedianSolution median_at_edge(const SolverConfig& cfg, const WeightedTree& tree,
                              EdgeIndex e) {
  cfg.validate();
  const EdgeBipartition part = split_by_edge(tree, e);
  const OneMedian ma = median_of_component(tree, part.label, 0, part.endpoint_a, 0);
  const OneMedian mb = median_of_component(tree, part.label, 1, part.endpoint_b, 0);
  MedianSolution s;
  s.deleted_edge = e;
  s.edge_u = part.endpoint_a;
  s.edge_v = part.endpoint_b;
  s.median_a = ma.vertex;
  s.median_b = mb.vertex;
  s.f1 = ma.cost + mb.cost;
  s.f5 = eval_f5(part);
  s.objective = median_scalarization(cfg.lambda, s.f1, s.f5);
  return s;
}

MedianSolution solve_balanced_2median(const SolverConfig& cfg,
                                      const WeightedTree& tree) {
  cfg.validate();
  if (tree.size() < 2) {
    throw PreconditionError("balanced 2-median needs at least two vertices");
  }
  MedianSolution best;
  for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
    MedianSolution cand = median_at_edge(cfg, tree, e);
    if (best.deleted_edge < 0 || cand.objective < best.objective - cfg.tolerance) {
      best = cand;
    }
  }
  return best;
}

}  // namespace baltree
