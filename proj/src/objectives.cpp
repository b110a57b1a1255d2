#include "baltree/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baltree/errors.hpp"

namespace baltree {

void SolverConfig::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ConfigError("lambda must lie in [0, 1], got " + std::to_string(lambda));
  }
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw ConfigError("tolerance must be a finite nonnegative number");
  }
}

const char* to_string(Problem problem) {
  return problem == Problem::median ? "median" : "maxian";
}

Problem parse_problem(std::string_view name) {
  if (name == "median") return Problem::median;
  if (name == "maxian") return Problem::maxian;
  throw ConfigError("unknown problem '" + std::string(name) +
                    "' (expected median or maxian)");
}

Assignment make_assignment(const WeightedTree& tree, EdgeIndex e,
                           VertexId server_a, VertexId server_b, Problem mode) {
  if (!tree.valid_vertex(server_a) || !tree.valid_vertex(server_b)) {
    throw std::out_of_range("invalid facility id");
  }
  Assignment a{split_by_edge(tree, e), server_a, server_b, mode};
  const bool a_in_a = a.partition.in_a(server_a);
  const bool b_in_a = a.partition.in_a(server_b);
  const bool ok = mode == Problem::median ? (a_in_a && !b_in_a)
                                          : (!a_in_a && b_in_a);
  if (!ok) {
    throw std::invalid_argument(
        mode == Problem::median
            ? "median facilities must lie in the side they serve"
            : "maxian facilities must lie opposite the side they serve");
  }
  return a;
}

double eval_transport(const WeightedTree& tree, const Assignment& assignment) {
  const auto from_a = distances_from(tree, assignment.server_a);
  const auto from_b = distances_from(tree, assignment.server_b);
  double total = 0.0;
  for (VertexId v : assignment.partition.side_a) {
    total += tree.weight(v) * from_a[static_cast<std::size_t>(v)];
  }
  for (VertexId v : assignment.partition.side_b) {
    total += tree.weight(v) * from_b[static_cast<std::size_t>(v)];
  }
  return total;
}

double eval_f3(const EdgeBipartition& partition) {
  return std::max(partition.z_a, partition.z_b);
}

double eval_f5(const EdgeBipartition& partition) {
  return std::abs(partition.z_a - partition.z_b);
}

double eval_fpmed(const SolverConfig& cfg, const WeightedTree& tree,
                  const Assignment& assignment) {
  cfg.validate();
  return median_scalarization(cfg.lambda, eval_transport(tree, assignment),
                              eval_f5(assignment.partition));
}

double eval_fpmax(const SolverConfig& cfg, const WeightedTree& tree,
                  const Assignment& assignment) {
  cfg.validate();
  return maxian_scalarization(cfg.lambda, eval_transport(tree, assignment),
                              eval_f5(assignment.partition));
}

}  // namespace baltree
