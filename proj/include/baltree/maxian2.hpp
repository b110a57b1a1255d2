#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "baltree/objectives.hpp"
#include "baltree/tree.hpp"

namespace baltree {

enum class MaxianMethod { cubic, linear, brute };

const char* to_string(MaxianMethod method);
/// Accepts "cubic" / "linear"; throws ConfigError otherwise.
MaxianMethod parse_maxian_method(std::string_view name);

/// Each facility serves the side of the deleted edge that does not contain it.
struct MaxianSolution {
  EdgeIndex deleted_edge = -1;
  VertexId edge_u = 0;     // smaller endpoint of the deleted edge (side A)
  VertexId edge_v = 0;
  VertexId server_a = 0;   // serves side A, lies in side B
  VertexId server_b = 0;   // serves side B, lies in side A
  double f2 = 0.0;         // transport (maxian) value
  double f5 = 0.0;         // load imbalance
  double objective = 0.0;
  MaxianMethod method = MaxianMethod::cubic;
  std::string warning;     // set when the linear method fell back to cubic
};

/// Vertex weights split by the side of one deleted edge.
struct MaskedWeighting {
  EdgeIndex edge = -1;
  std::vector<double> side_b_weights;  // w on side B, 0 on side A
  std::vector<double> side_a_weights;  // w on side A, 0 on side B
};

MaskedWeighting mask_weights(const WeightedTree& tree,
                             const EdgeBipartition& partition);

/// Reference method: for every edge and every facility pair (one facility in
/// each side, serving the other side's masked weights) evaluate the objective
/// and keep the maximum. Ties go to the earliest edge, then the smallest
/// (server_b, server_a) pair. O(n^3). Throws PreconditionError when n < 2.
MaxianSolution solve_balanced_2maxian_cubic(const SolverConfig& cfg,
                                            const WeightedTree& tree);

/// Objective of deleting one edge of a compressed path, with the path's end
/// vertices as facilities (the first end serves the side holding the last).
struct PathEdgeValue {
  std::size_t position = 0;  // edge joins path positions `position` and +1
  EdgeIndex edge = -1;
  double transport = 0.0;    // true transport, hang offset included
  double f5 = 0.0;
  double objective = 0.0;
};

/// All path-edge objectives in O(length). Edge 0 and the edge leaving the
/// pivot are evaluated from sums; every other edge follows from its neighbour
/// through the adjacent-edge recurrence (see recurrence_delta). Throws
/// PreconditionError for a path with no edge.
std::vector<PathEdgeValue> path_fpmax_sweep(const SolverConfig& cfg,
                                            const CompressedPath& cp);

/// f(e_before) - f(e_after) for the two path edges meeting at position `u`:
///
///   lambda * w_u * (d(u, first) - d(u, last)) - 2 (1 - lambda) z_u   if u < r
///   lambda * w_u * (d(u, first) - d(u, last)) + 2 (1 - lambda) z_u   if u > r
///
/// with r the pivot. Throws std::invalid_argument for u == r or an end vertex.
double recurrence_delta(const SolverConfig& cfg, const CompressedPath& cp,
                        std::size_t u);

/// Linear method: facilities at the diameter ends, tree compressed onto the
/// diameter, best path edge by path_fpmax_sweep. Falls back to the cubic
/// method (and sets `warning`) when some edge has length 0.
MaxianSolution solve_balanced_2maxian_linear(const SolverConfig& cfg,
                                             const WeightedTree& tree);

MaxianSolution solve_balanced_2maxian(const SolverConfig& cfg,
                                      const WeightedTree& tree,
                                      MaxianMethod method);

}  // namespace baltree
