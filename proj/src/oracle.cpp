#include "baltree/oracle.hpp"

#include <cmath>
#include <string>

#include "baltree/errors.hpp"

namespace baltree {

namespace {

void check_cap(const WeightedTree& tree, int cap, const char* what) {
  if (tree.size() < 2) {
    throw PreconditionError(std::string(what) + " needs at least two vertices");
  }
  if (tree.size() > cap) {
    throw PreconditionError(std::string(what) + " is capped at " +
                            std::to_string(cap) + " vertices, instance has " +
                            std::to_string(tree.size()));
  }
}

double served_cost(const WeightedTree& tree,
                   const std::vector<std::vector<double>>& d,
                   const std::vector<VertexId>& clients, VertexId facility) {
  double s = 0.0;
  for (VertexId v : clients) {
    s += tree.weight(v) * d[static_cast<std::size_t>(facility)][static_cast<std::size_t>(v)];
  }
  return s;
}

}  // namespace

std::vector<std::vector<double>> all_pairs_distances(const WeightedTree& tree) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(tree.size()) + 1);
  for (VertexId s = 1; s <= tree.size(); ++s) {
    auto& row = table[static_cast<std::size_t>(s)];
    row.assign(static_cast<std::size_t>(tree.size()) + 1, 0.0);
    // Relax along edges until stable; a tree needs at most n-1 rounds.
    std::vector<bool> known(row.size(), false);
    known[static_cast<std::size_t>(s)] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Edge& e : tree.edges()) {
        const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        if (known[u] && !known[v]) {
          row[v] = row[u] + e.length;
          known[v] = changed = true;
        } else if (known[v] && !known[u]) {
          row[u] = row[v] + e.length;
          known[u] = changed = true;
        }
      }
    }
  }
  return table;
}

MedianSolution brute_2median(const SolverConfig& cfg, const WeightedTree& tree,
                             int cap) {
  cfg.validate();
  check_cap(tree, cap, "brute-force 2-median");
  const auto d = all_pairs_distances(tree);
  MedianSolution best;
  for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
    const EdgeBipartition part = split_by_edge(tree, e);
    const double f5 = std::abs(part.z_a - part.z_b);
    for (VertexId xa : part.side_a) {
      for (VertexId xb : part.side_b) {
        const double f1 = served_cost(tree, d, part.side_a, xa) +
                          served_cost(tree, d, part.side_b, xb);
        const double value = median_scalarization(cfg.lambda, f1, f5);
        if (best.deleted_edge < 0 || value < best.objective - cfg.tolerance) {
          best = {e, part.endpoint_a, part.endpoint_b, xa, xb, f1, f5, value};
        }
      }
    }
  }
  return best;
}

MaxianSolution brute_2maxian(const SolverConfig& cfg, const WeightedTree& tree,
                             int cap) {
  cfg.validate();
  check_cap(tree, cap, "brute-force 2-maxian");
  const auto d = all_pairs_distances(tree);
  MaxianSolution best;
  best.method = MaxianMethod::brute;
  for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
    const EdgeBipartition part = split_by_edge(tree, e);
    const double f5 = std::abs(part.z_a - part.z_b);
    for (VertexId x1 : part.side_a) {
      for (VertexId x2 : part.side_b) {
        const double f2 = served_cost(tree, d, part.side_b, x1) +
                          served_cost(tree, d, part.side_a, x2);
        const double value = maxian_scalarization(cfg.lambda, f2, f5);
        if (best.deleted_edge < 0 || value > best.objective + cfg.tolerance) {
          best.deleted_edge = e;
          best.edge_u = part.endpoint_a;
          best.edge_v = part.endpoint_b;
          best.server_b = x1;
          best.server_a = x2;
          best.f2 = f2;
          best.f5 = f5;
          best.objective = value;
        }
      }
    }
  }
  return best;
}

std::vector<PathEdgeValue> brute_path_fpmax(const SolverConfig& cfg,
                                            const CompressedPath& cp) {
  cfg.validate();
  const std::size_t len = cp.base.vertices.size();
  if (len < 2) throw PreconditionError("path has no edge to delete");
  const double total = cp.base.total_length;
  std::vector<PathEdgeValue> out;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    double transport = cp.hang_offset;
    double z_left = 0.0, z_right = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double x = cp.base.prefix_dist[i];
      if (i <= k) {
        transport += cp.w_hat[i] * (total - x);
        z_left += cp.z_hat[i];
      } else {
        transport += cp.w_hat[i] * x;
        z_right += cp.z_hat[i];
      }
    }
    const double f5 = std::abs(z_left - z_right);
    out.push_back({k, cp.base.edges[k], transport, f5,
                   maxian_scalarization(cfg.lambda, transport, f5)});
  }
  return out;
}

}  // namespace baltree
