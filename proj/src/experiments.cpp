#include "baltree/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "baltree/errors.hpp"
#include "baltree/format.hpp"
#include "baltree/oracle.hpp"

namespace baltree {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
}

double ValueDist::draw(SplitMix64& rng) const {
  switch (kind) {
    case Kind::fixed: return lo;
    case Kind::uniform_real: return lo + (hi - lo) * rng.uniform01();
    case Kind::uniform_int:
      return lo + static_cast<double>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  return lo;
}

namespace {

void check_dist(const ValueDist& d, const char* what) {
  const bool finite = std::isfinite(d.lo) && std::isfinite(d.hi);
  if (!finite || d.lo < 0.0 || d.hi < d.lo) {
    throw ConfigError(std::string(what) + " range must satisfy 0 <= min <= max");
  }
  if (d.kind == ValueDist::Kind::uniform_int &&
      (d.lo != std::floor(d.lo) || d.hi != std::floor(d.hi))) {
    throw ConfigError(std::string(what) + " integer range needs integer bounds");
  }
}

}  // namespace

void GenSpec::validate() const {
  if (n < 1) throw ConfigError("generated tree needs n >= 1");
  check_dist(lengths, "length");
  check_dist(weights, "weight");
  check_dist(service, "service time");
}

WeightedTree gen_random_tree(const GenSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.n - 1));
  for (VertexId i = 2; i <= spec.n; ++i) {
    const auto parent = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(i - 1)));
    edges.push_back({parent, i, spec.lengths.draw(rng)});
  }
  std::vector<VertexData> vertices(static_cast<std::size_t>(spec.n));
  for (auto& v : vertices) {
    v.weight = spec.weights.draw(rng);
    v.service_time = spec.service.draw(rng);
  }
  return WeightedTree(std::move(vertices), std::move(edges));
}

SolveOutcome solve_problem(const SolverConfig& cfg, const WeightedTree& tree,
                           Problem problem, const std::string& method,
                           int oracle_cap) {
  SolveOutcome out;
  out.problem = problem;
  if (problem == Problem::median) {
    out.method = method.empty() ? "edge-deletion" : method;
    MedianSolution s;
    if (out.method == "edge-deletion") {
      s = solve_balanced_2median(cfg, tree);
    } else if (out.method == "brute") {
      s = brute_2median(cfg, tree, oracle_cap);
    } else {
      throw ConfigError("unknown median method '" + out.method +
                        "' (expected edge-deletion or brute)");
    }
    out.transport = s.f1;
    out.f5 = s.f5;
    out.objective = s.objective;
    out.deleted_edge = s.deleted_edge;
    out.edge_u = s.edge_u;
    out.edge_v = s.edge_v;
    out.fac1 = s.median_a;
    out.fac2 = s.median_b;
    return out;
  }

  out.method = method.empty() ? "linear" : method;
  MaxianSolution s;
  if (out.method == "brute") {
    s = brute_2maxian(cfg, tree, oracle_cap);
  } else {
    s = solve_balanced_2maxian(cfg, tree, parse_maxian_method(out.method));
  }
  out.transport = s.f2;
  out.f5 = s.f5;
  out.objective = s.objective;
  out.deleted_edge = s.deleted_edge;
  out.edge_u = s.edge_u;
  out.edge_v = s.edge_v;
  out.fac1 = s.server_a;
  out.fac2 = s.server_b;
  out.warning = s.warning;
  return out;
}

std::vector<ExperimentRecord> lambda_sweep(const WeightedTree& tree, Problem problem,
                                           std::span<const double> lambdas,
                                           const SweepOptions& options) {
  for (double l : lambdas) SolverConfig{l, options.tolerance}.validate();
  std::vector<ExperimentRecord> records;
  records.reserve(lambdas.size());
  for (double l : lambdas) {
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome o = solve_problem({l, options.tolerance}, tree, problem, options.method);
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    records.push_back({options.test_id, tree.size(), options.seed, problem, o.method, l,
                       o.transport, o.f5, o.objective, o.edge_u, o.edge_v, o.fac1,
                       o.fac2, took.count()});
  }
  return records;
}

std::vector<ExperimentRecord> run_benchmark(const BenchmarkSpec& spec) {
  std::vector<ExperimentRecord> all;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    GenSpec gs = spec.instance;
    gs.n = spec.sizes[i];
    gs.seed = spec.base_seed + i;
    const WeightedTree tree = gen_random_tree(gs);
    SweepOptions opt;
    opt.method = spec.method;
    opt.test_id = static_cast<int>(i) + 1;
    opt.seed = gs.seed;
    auto part = lambda_sweep(tree, spec.problem, spec.lambdas, opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::vector<ParetoPoint> pareto_front(const WeightedTree& tree, Problem problem,
                                      int grid_size, const std::string& method) {
  if (grid_size < 2) throw ConfigError("pareto grid needs at least two points");
  std::vector<ParetoPoint> points;
  for (int i = 0; i < grid_size; ++i) {
    const double l = static_cast<double>(i) / (grid_size - 1);
    const SolveOutcome o = solve_problem({l, 1e-9}, tree, problem, method);
    points.push_back({o.transport, o.f5});
  }
  // Oriented so that smaller is better in both coordinates.
  const double sign = problem == Problem::median ? 1.0 : -1.0;
  auto dominates = [sign](const ParetoPoint& p, const ParetoPoint& q) {
    const double pt = sign * p.transport, qt = sign * q.transport;
    return pt <= qt && p.f5 <= q.f5 && (pt < qt || p.f5 < q.f5);
  };
  std::vector<ParetoPoint> front;
  for (const auto& p : points) {
    const bool dominated = std::any_of(points.begin(), points.end(),
                                       [&](const ParetoPoint& q) { return dominates(q, p); });
    if (!dominated && std::find(front.begin(), front.end(), p) == front.end()) {
      front.push_back(p);
    }
  }
  std::sort(front.begin(), front.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    return a.transport < b.transport || (a.transport == b.transport && a.f5 < b.f5);
  });
  return front;
}

AllocationReport allocation_report(const WeightedTree& tree,
                                   const Assignment& assignment, double tolerance) {
  const auto from_a = distances_from(tree, assignment.server_a);
  const auto from_b = distances_from(tree, assignment.server_b);
  AllocationReport report;
  for (VertexId v = 1; v <= tree.size(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    const bool side_a = assignment.partition.in_a(v);
    const double served = side_a ? from_a[i] : from_b[i];
    const double other = side_a ? from_b[i] : from_a[i];
    const bool deviates = assignment.mode == Problem::median
                              ? served > other + tolerance
                              : served < other - tolerance;
    if (deviates) report.vertices.push_back(v);
  }
  report.deviations = static_cast<int>(report.vertices.size());
  return report;
}

AllocationReport allocation_report(const WeightedTree& tree,
                                   const MedianSolution& solution) {
  return allocation_report(tree, make_assignment(tree, solution.deleted_edge,
                                                 solution.median_a, solution.median_b,
                                                 Problem::median));
}

AllocationReport allocation_report(const WeightedTree& tree,
                                   const MaxianSolution& solution) {
  return allocation_report(tree, make_assignment(tree, solution.deleted_edge,
                                                 solution.server_a, solution.server_b,
                                                 Problem::maxian));
}

void emit_csv(std::span<const ExperimentRecord> records, std::ostream& sink) {
  sink << kCsvHeader << '\n';
  for (const auto& r : records) {
    sink << r.test_id << ',' << r.n << ',' << r.seed << ',' << to_string(r.problem) << ','
         << r.method << ',' << format_number(r.lambda) << ','
         << format_number(r.transport) << ',' << format_number(r.f5) << ','
         << format_number(r.objective) << ',' << r.edge_u << ',' << r.edge_v << ','
         << r.fac1 << ',' << r.fac2 << ',' << format_number(r.runtime_ms) << '\n';
  }
  sink.flush();
  if (!sink) throw std::runtime_error("failed to write CSV output");
}

}  // namespace baltree
