#pragma once

#include <span>

#include "baltree/objectives.hpp"
#include "baltree/tree.hpp"

namespace baltree {

struct MedianSolution {
  EdgeIndex deleted_edge = -1;
  VertexId edge_u = 0;    // smaller endpoint of the deleted edge (side A)
  VertexId edge_v = 0;
  VertexId median_a = 0;  // 1-median of side A, serves side A
  VertexId median_b = 0;
  double f1 = 0.0;        // transport cost
  double f5 = 0.0;        // load imbalance
  double objective = 0.0;
};

struct OneMedian {
  VertexId vertex = 0;
  double cost = 0.0;  // sum of w * d(v, vertex) over the side
};

/// 1-median of the subtree induced by `side`, by the weight-majority rule: a
/// vertex is a median iff no branch at it (within the side) carries more than
/// half of the side's weight. Smallest id wins among medians. Throws
/// std::invalid_argument if `side` is empty, repeats a vertex or is not
/// connected.
OneMedian one_median(const WeightedTree& tree, std::span<const VertexId> side);

/// Objective record for deleting edge `e` and placing the subtree 1-medians.
MedianSolution median_at_edge(const SolverConfig& cfg, const WeightedTree& tree,
                              EdgeIndex e);

/// Balanced 2-median by edge deletion: every edge is tried, each side gets its
/// own 1-median, and the best lambda-weighted record is kept (earliest edge on
/// ties). O(n^2). Throws PreconditionError when n < 2.
MedianSolution solve_balanced_2median(const SolverConfig& cfg,
                                      const WeightedTree& tree);

}  // namespace baltree
