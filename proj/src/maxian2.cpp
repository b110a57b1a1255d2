#include "baltree/maxian2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "baltree/errors.hpp"

namespace baltree {

const char* to_string(MaxianMethod method) {
  switch (method) {
    case MaxianMethod::cubic: return "cubic";
    case MaxianMethod::linear: return "linear";
    case MaxianMethod::brute: return "brute";
  }
  return "?";
}

MaxianMethod parse_maxian_method(std::string_view name) {
  if (name == "cubic") return MaxianMethod::cubic;
  if (name == "linear") return MaxianMethod::linear;
  throw ConfigError("unknown maxian method '" + std::string(name) +
                    "' (expected linear or cubic)");
}

MaskedWeighting mask_weights(const WeightedTree& tree,
                             const EdgeBipartition& partition) {
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;
  MaskedWeighting m{partition.edge, std::vector<double>(slots, 0.0),
                    std::vector<double>(slots, 0.0)};
  for (VertexId v = 1; v <= tree.size(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    (partition.in_a(v) ? m.side_a_weights : m.side_b_weights)[i] = tree.weight(v);
  }
  return m;
}

namespace {

void require_two_vertices(const WeightedTree& tree) {
  if (tree.size() < 2) {
    throw PreconditionError("balanced 2-maxian needs at least two vertices");
  }
}

double masked_sum(const std::vector<double>& weights,
                  const std::vector<double>& distances) {
  double s = 0.0;
  for (std::size_t i = 1; i < weights.size(); ++i) s += weights[i] * distances[i];
  return s;
}

}  // namespace

MaxianSolution solve_balanced_2maxian_cubic(const SolverConfig& cfg,
                                            const WeightedTree& tree) {
  cfg.validate();
  require_two_vertices(tree);
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;

  MaxianSolution best;
  best.method = MaxianMethod::cubic;
  std::vector<double> serve_b(slots, 0.0), serve_a(slots, 0.0);
  for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
    const EdgeBipartition part = split_by_edge(tree, e);
    const MaskedWeighting mask = mask_weights(tree, part);
    const double f5 = eval_f5(part);

    for (VertexId x = 1; x <= tree.size(); ++x) {
      const auto d = distances_from(tree, x);
      const auto i = static_cast<std::size_t>(x);
      if (part.in_a(x)) {
        serve_b[i] = masked_sum(mask.side_b_weights, d);
      } else {
        serve_a[i] = masked_sum(mask.side_a_weights, d);
      }
    }
    for (VertexId x1 : part.side_a) {
      for (VertexId x2 : part.side_b) {
        const double transport = serve_b[static_cast<std::size_t>(x1)] +
                                 serve_a[static_cast<std::size_t>(x2)];
        const double value = maxian_scalarization(cfg.lambda, transport, f5);
        if (best.deleted_edge < 0 || value > best.objective + cfg.tolerance) {
          best.deleted_edge = e;
          best.edge_u = part.endpoint_a;
          best.edge_v = part.endpoint_b;
          best.server_b = x1;
          best.server_a = x2;
          best.f2 = transport;
          best.f5 = f5;
          best.objective = value;
        }
      }
    }
  }
  return best;
}

namespace {

// Transport over the compressed path for deleting edge k, without the hang
// offset, and the imbalance, both from running sums.
struct PathSums {
  std::vector<double> w_prefix, wx_prefix, z_prefix;
  double wx_total = 0.0;
  double length = 0.0;
  double z_total = 0.0;

  explicit PathSums(const CompressedPath& cp) {
    const std::size_t len = cp.w_hat.size();
    w_prefix.resize(len);
    wx_prefix.resize(len);
    z_prefix.resize(len);
    double w = 0.0, wx = 0.0, z = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      w += cp.w_hat[i];
      wx += cp.w_hat[i] * cp.base.prefix_dist[i];
      z += cp.z_hat[i];
      w_prefix[i] = w;
      wx_prefix[i] = wx;
      z_prefix[i] = z;
    }
    wx_total = wx;
    length = cp.base.total_length;
    z_total = cp.total_z;
  }

  // Left part (positions 0..k) is served by the last path vertex, the right
  // part by the first.
  double transport(std::size_t k) const {
    return (length * w_prefix[k] - wx_prefix[k]) + (wx_total - wx_prefix[k]);
  }
  double imbalance(std::size_t k) const {
    return std::abs(z_prefix[k] - (z_total - z_prefix[k]));
  }
};

}  // namespace

double recurrence_delta(const SolverConfig& cfg, const CompressedPath& cp,
                        std::size_t u) {
  cfg.validate();
  const std::size_t len = cp.base.vertices.size();
  if (u == 0 || u + 1 >= len) {
    throw std::invalid_argument("recurrence needs an interior path vertex");
  }
  if (u == cp.pivot) {
    throw std::invalid_argument("recurrence does not cross the pivot vertex");
  }
  const double to_first = cp.base.prefix_dist[u];
  const double to_last = cp.base.total_length - to_first;
  const double transport = cfg.lambda * cp.w_hat[u] * (to_first - to_last);
  const double balance = 2.0 * (1.0 - cfg.lambda) * cp.z_hat[u];
  return u < cp.pivot ? transport - balance : transport + balance;
}

std::vector<PathEdgeValue> path_fpmax_sweep(const SolverConfig& cfg,
                                            const CompressedPath& cp) {
  cfg.validate();
  const std::size_t len = cp.base.vertices.size();
  if (len < 2) throw PreconditionError("path has no edge to delete");
  const std::size_t edges = len - 1;
  const PathSums sums(cp);

  // The recurrence runs on the two components separately:
  //   T(e_before) - T(e_after) = w_u (d(u, first) - d(u, last))
  //   F(e_before) - F(e_after) = +2 z_u left of the pivot, -2 z_u right of it
  std::vector<double> transport(edges), imbalance(edges);
  auto anchor = [&](std::size_t k) {
    transport[k] = sums.transport(k);
    imbalance[k] = sums.imbalance(k);
  };
  auto step = [&](std::size_t k) {
    const std::size_t u = k;  // vertex shared by edges k-1 and k
    const double to_first = cp.base.prefix_dist[u];
    const double to_last = cp.base.total_length - to_first;
    transport[k] = transport[k - 1] - cp.w_hat[u] * (to_first - to_last);
    imbalance[k] = u < cp.pivot ? imbalance[k - 1] - 2.0 * cp.z_hat[u]
                                : imbalance[k - 1] + 2.0 * cp.z_hat[u];
  };

  anchor(0);
  for (std::size_t k = 1; k < edges && k < cp.pivot; ++k) step(k);
  if (cp.pivot >= 1 && cp.pivot < edges) {
    anchor(cp.pivot);
    for (std::size_t k = cp.pivot + 1; k < edges; ++k) step(k);
  } else if (cp.pivot == 0) {
    for (std::size_t k = 1; k < edges; ++k) step(k);
  }

#if !defined(NDEBUG) || defined(BALTREE_VALIDATE_RECURRENCE)
  {
    const double scale =
        std::max(1.0, sums.length * (sums.w_prefix.back()) + sums.z_total);
    for (std::size_t k = 0; k < edges; ++k) {
      if (std::abs(transport[k] - sums.transport(k)) > 1e-9 * scale ||
          std::abs(imbalance[k] - sums.imbalance(k)) > 1e-9 * scale) {
        throw std::logic_error("path recurrence disagrees with direct evaluation at edge " +
                               std::to_string(k));
      }
    }
  }
#endif

  std::vector<PathEdgeValue> out(edges);
  for (std::size_t k = 0; k < edges; ++k) {
    out[k].position = k;
    out[k].edge = cp.base.edges[k];
    out[k].transport = transport[k] + cp.hang_offset;
    out[k].f5 = imbalance[k];
    out[k].objective = maxian_scalarization(cfg.lambda, out[k].transport, out[k].f5);
  }
  return out;
}

MaxianSolution solve_balanced_2maxian_linear(const SolverConfig& cfg,
                                             const WeightedTree& tree) {
  cfg.validate();
  require_two_vertices(tree);
  if (tree.has_zero_length_edge()) {
    MaxianSolution s = solve_balanced_2maxian_cubic(cfg, tree);
    s.warning =
        "zero-length edge present: diameter-endpoint optimality needs strictly "
        "positive distances; solved with the cubic method instead";
    return s;
  }

  const PathDescriptor path = diameter(tree);
  const CompressedPath cp = compress_onto_path(tree, path);
  const auto values = path_fpmax_sweep(cfg, cp);

  std::size_t pick = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double gap = values[k].objective - values[pick].objective;
    if (gap > cfg.tolerance ||
        (gap >= -cfg.tolerance && values[k].edge < values[pick].edge)) {
      pick = k;
    }
  }
  const PathEdgeValue& best = values[pick];
  const Edge& cut = tree.edge(best.edge);

  MaxianSolution s;
  s.method = MaxianMethod::linear;
  s.deleted_edge = best.edge;
  s.edge_u = std::min(cut.u, cut.v);
  s.edge_v = std::max(cut.u, cut.v);
  const VertexId first = path.vertices.front();
  const VertexId last = path.vertices.back();
  // The first end serves the part holding the last end, and vice versa.
  const bool first_in_a = path.vertices[best.position] == s.edge_u;
  s.server_a = first_in_a ? last : first;
  s.server_b = first_in_a ? first : last;
  s.f2 = best.transport;
  s.f5 = best.f5;
  s.objective = best.objective;
  return s;
}

MaxianSolution solve_balanced_2maxian(const SolverConfig& cfg,
                                      const WeightedTree& tree,
                                      MaxianMethod method) {
  switch (method) {
    case MaxianMethod::linear: return solve_balanced_2maxian_linear(cfg, tree);
    case MaxianMethod::cubic: return solve_balanced_2maxian_cubic(cfg, tree);
    case MaxianMethod::brute: break;
  }
  throw ConfigError("brute force lives in the oracle module");
}

}  // namespace baltree
