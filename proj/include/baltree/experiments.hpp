#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "baltree/maxian2.hpp"
#include "baltree/median2.hpp"
#include "baltree/objectives.hpp"
#include "baltree/tree.hpp"

namespace baltree {

/// SplitMix64 (increment 0x9E3779B97F4A7C15, mix constants 0xBF58476D1CE4E5B9
/// and 0x94D049BB133111EB, shifts 30/27/31). Bounded integers use the
/// multiply-shift reduction (x * bound) >> 64; reals use the top 53 bits.
/// Identical on every platform, unlike the std:: distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1).
  double uniform01() noexcept;
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// How one per-vertex or per-edge quantity is drawn.
struct ValueDist {
  enum class Kind { fixed, uniform_real, uniform_int };
  Kind kind = Kind::fixed;
  double lo = 0.0;
  double hi = 0.0;

  static ValueDist fixed(double value) { return {Kind::fixed, value, value}; }
  static ValueDist uniform(double lo, double hi) { return {Kind::uniform_real, lo, hi}; }
  static ValueDist uniform_int(long lo, long hi) {
    return {Kind::uniform_int, static_cast<double>(lo), static_cast<double>(hi)};
  }

  double draw(SplitMix64& rng) const;
};

struct GenSpec {
  int n = 10;
  std::uint64_t seed = 0;
  ValueDist lengths = ValueDist::uniform(0.01, 5.0);
  ValueDist weights = ValueDist::fixed(5.0);
  ValueDist service = ValueDist::fixed(1.0);

  /// Throws ConfigError.
  void validate() const;
};

/// Random recursive tree: vertex i >= 2 attaches to a uniform vertex in
/// 1..i-1 with a drawn length (parent draw, then length draw, per vertex).
/// Weights and service times are drawn afterwards for vertices 1..n.
WeightedTree gen_random_tree(const GenSpec& spec);

/// Uniform interface over every solver, as used by sweeps and the CLI.
/// Median methods: "edge-deletion" (default), "brute". Maxian methods:
/// "linear" (default), "cubic", "brute".
struct SolveOutcome {
  Problem problem = Problem::median;
  std::string method;
  double transport = 0.0;
  double f5 = 0.0;
  double objective = 0.0;
  EdgeIndex deleted_edge = -1;
  VertexId edge_u = 0, edge_v = 0;
  VertexId fac1 = 0;  // serves side A (holds edge_u)
  VertexId fac2 = 0;  // serves side B
  std::string warning;
};

/// Throws ConfigError for an unknown method name.
SolveOutcome solve_problem(const SolverConfig& cfg, const WeightedTree& tree,
                           Problem problem, const std::string& method = "",
                           int oracle_cap = 16);

struct ExperimentRecord {
  int test_id = 1;
  int n = 0;
  std::uint64_t seed = 0;
  Problem problem = Problem::median;
  std::string method;
  double lambda = 0.0;
  double transport = 0.0;  // f1 for median, f2 for maxian
  double f5 = 0.0;
  double objective = 0.0;
  VertexId edge_u = 0, edge_v = 0;
  VertexId fac1 = 0, fac2 = 0;
  double runtime_ms = 0.0;
};

struct SweepOptions {
  std::string method;  // empty: the fast solver of the problem
  int test_id = 1;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

/// One record per lambda, in the given order.
std::vector<ExperimentRecord> lambda_sweep(const WeightedTree& tree, Problem problem,
                                           std::span<const double> lambdas,
                                           const SweepOptions& options = {});

/// `sizes.size()` generated instances (test i uses seed base_seed + i), each
/// swept over `lambdas`. Records are ordered by (test, lambda).
struct BenchmarkSpec {
  std::vector<int> sizes;
  std::vector<double> lambdas;
  Problem problem = Problem::median;
  std::string method;
  std::uint64_t base_seed = 1;
  GenSpec instance;  // n and seed are overridden per test
};
std::vector<ExperimentRecord> run_benchmark(const BenchmarkSpec& spec);

struct ParetoPoint {
  double transport = 0.0;
  double f5 = 0.0;
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

/// Sweeps lambda over `grid_size` evenly spaced values in [0, 1] and keeps the
/// nondominated (transport, f5) pairs, sorted by transport. Median minimises
/// both; maxian maximises transport and minimises f5.
std::vector<ParetoPoint> pareto_front(const WeightedTree& tree, Problem problem,
                                      int grid_size, const std::string& method = "");

/// Vertices not served by their nearest (median) or farthest (maxian)
/// facility. Equidistant facilities never count as a deviation.
struct AllocationReport {
  int deviations = 0;
  std::vector<VertexId> vertices;
};

AllocationReport allocation_report(const WeightedTree& tree,
                                   const Assignment& assignment,
                                   double tolerance = 1e-9);
AllocationReport allocation_report(const WeightedTree& tree,
                                   const MedianSolution& solution);
AllocationReport allocation_report(const WeightedTree& tree,
                                   const MaxianSolution& solution);

inline constexpr const char* kCsvHeader =
    "test,n,seed,problem,method,lambda,transport,f5,objective,edge_u,edge_v,"
    "fac1,fac2,runtime_ms";

/// Header plus one line per record, LF endings, shortest round-trip numbers.
/// Throws std::runtime_error if the stream fails.
void emit_csv(std::span<const ExperimentRecord> records, std::ostream& sink);

}  // namespace baltree
