#pragma once

#include "baltree/tree.hpp"

namespace baltree {

struct SolverConfig {
  double lambda = 0.5;       // weight of the transport term, in [0, 1]
  double tolerance = 1e-9;   // absolute slack for floating comparisons

  /// Throws ConfigError.
  void validate() const;
};

enum class Problem { median, maxian };

const char* to_string(Problem problem);
/// Accepts "median" / "maxian"; throws ConfigError otherwise.
Problem parse_problem(std::string_view name);

/// A connected bipartition together with the facility serving each side.
/// Median mode: each facility lies in the side it serves. Maxian mode: each
/// facility lies in the opposite side.
struct Assignment {
  EdgeBipartition partition;
  VertexId server_a = 0;  // serves side A
  VertexId server_b = 0;  // serves side B
  Problem mode = Problem::median;
};

/// Builds an assignment and checks the placement rule of `mode`.
Assignment make_assignment(const WeightedTree& tree, EdgeIndex e,
                           VertexId server_a, VertexId server_b, Problem mode);

/// Sum over both sides of w * d(v, serving facility). This is f1 for a median
/// assignment and f2 for a maxian one.
double eval_transport(const WeightedTree& tree, const Assignment& assignment);

/// Largest per-side load, max(z_A, z_B).
double eval_f3(const EdgeBipartition& partition);

/// Load imbalance |z_A - z_B|; eval_f3 == (Z + eval_f5) / 2.
double eval_f5(const EdgeBipartition& partition);

double eval_fpmed(const SolverConfig& cfg, const WeightedTree& tree,
                  const Assignment& assignment);
double eval_fpmax(const SolverConfig& cfg, const WeightedTree& tree,
                  const Assignment& assignment);

// Every solver combines its components through these two functions, so equal
// components always give bit-identical objectives.
inline double median_scalarization(double lambda, double transport,
                                   double imbalance) {
  return lambda * transport + (1.0 - lambda) * imbalance;
}
inline double maxian_scalarization(double lambda, double transport,
                                   double imbalance) {
  return lambda * transport - (1.0 - lambda) * imbalance;
}

}  // namespace baltree
