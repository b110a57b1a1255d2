#pragma once

#include <vector>

#include "baltree/maxian2.hpp"
#include "baltree/median2.hpp"
#include "baltree/objectives.hpp"
#include "baltree/tree.hpp"

namespace baltree {

/// Exhaustive ground truth for the fast solvers. Kept deliberately naive: an
/// all-pairs distance table and full enumeration of edges and facility pairs.
inline constexpr int kDefaultOracleCap = 16;

/// Every edge, every (median_a in A, median_b in B) pair. Same tie-break as
/// solve_balanced_2median. Throws PreconditionError above `cap` vertices.
MedianSolution brute_2median(const SolverConfig& cfg, const WeightedTree& tree,
                             int cap = kDefaultOracleCap);

/// Every edge, every (facility in A serving B, facility in B serving A) pair.
/// Same tie-break as solve_balanced_2maxian_cubic.
MaxianSolution brute_2maxian(const SolverConfig& cfg, const WeightedTree& tree,
                             int cap = kDefaultOracleCap);

/// Each path edge evaluated from scratch by summing over the path vertices.
std::vector<PathEdgeValue> brute_path_fpmax(const SolverConfig& cfg,
                                            const CompressedPath& cp);

/// All-pairs distances, table[u][v], ids 1-based.
std::vector<std::vector<double>> all_pairs_distances(const WeightedTree& tree);

}  // namespace baltree
