#include <gtest/gtest.h>

#include "test_support.hpp"

namespace baltree {
namespace {

using testing::integer_tree;
using testing::is_leaf;
using testing::lambda_grid;
using testing::t6b;

// Off-diameter split beats every diameter split for lambda < 1.
constexpr const char* kStar =
    "4\n1 2 1\n1 3 2\n1 4 2\n1 1 3\n2 4 3\n3 5 1\n4 2 2\n";

TEST(MaxianMethodNames, ParseAndPrint) {
  EXPECT_EQ(parse_maxian_method("linear"), MaxianMethod::linear);
  EXPECT_EQ(parse_maxian_method("cubic"), MaxianMethod::cubic);
  EXPECT_THROW(parse_maxian_method("quadratic"), ConfigError);
  EXPECT_STREQ(to_string(MaxianMethod::brute), "brute");
}

TEST(MaskWeights, ZeroOutTheOtherSide) {
  const WeightedTree t = parse_tree("3\n1 2 1\n2 3 1\n1 2 1\n2 3 1\n3 4 1\n");
  const auto m = mask_weights(t, split_by_edge(t, 1));
  EXPECT_EQ(m.side_a_weights, (std::vector<double>{0, 2, 3, 0}));
  EXPECT_EQ(m.side_b_weights, (std::vector<double>{0, 0, 0, 4}));
}

TEST(Maxian2Cubic, SixVertexExampleAtHalf) {
  const WeightedTree t = t6b();
  const MaxianSolution s = solve_balanced_2maxian_cubic(SolverConfig{0.5}, t);
  EXPECT_EQ(s.objective, 12.0);
  EXPECT_EQ(s.edge_u, 3);
  EXPECT_EQ(s.edge_v, 4);
  EXPECT_EQ(s.server_b, 1);
  EXPECT_EQ(s.server_a, 5);
  EXPECT_EQ(s.f2, 24.0);
  EXPECT_EQ(s.f5, 0.0);
  EXPECT_EQ(s.method, MaxianMethod::cubic);
}

TEST(Maxian2Cubic, TwoVertexTree) {
  const MaxianSolution s = solve_balanced_2maxian_cubic(SolverConfig{0.5}, parse_tree("2\n1 2 1\n"));
  EXPECT_EQ(s.objective, 1.0);
  EXPECT_EQ(s.server_a, 2);
  EXPECT_EQ(s.server_b, 1);
}

TEST(Maxian2Cubic, Preconditions) {
  EXPECT_THROW(solve_balanced_2maxian_cubic(SolverConfig{}, parse_tree("1\n")),
               PreconditionError);
  EXPECT_THROW(solve_balanced_2maxian_linear(SolverConfig{}, parse_tree("1\n")),
               PreconditionError);
  EXPECT_THROW(solve_balanced_2maxian_cubic(SolverConfig{-1.0}, t6b()), ConfigError);
}

CompressedPath t6b_diameter() {
  const WeightedTree t = t6b();
  return compress_onto_path(t, diameter(t));
}

TEST(PathSweep, SixVertexEdgeValues) {
  const auto values = path_fpmax_sweep(SolverConfig{0.5}, t6b_diameter());
  ASSERT_EQ(values.size(), 4u);
  EXPECT_EQ(values[0].objective, 10.0);
  EXPECT_EQ(values[1].objective, 11.5);
  EXPECT_EQ(values[2].objective, 12.0);
  EXPECT_EQ(values[3].objective, 7.0);
  EXPECT_EQ(values[1].transport, 25.0);
  EXPECT_EQ(values[1].f5, 2.0);
}

TEST(PathSweep, UnitPaths) {
  const WeightedTree four = parse_tree("4\n1 2 1\n2 3 1\n3 4 1\n");
  const auto v4 = path_fpmax_sweep(SolverConfig{0.5}, compress_onto_path(four, diameter(four)));
  EXPECT_EQ(v4[1].objective, 5.0);
  EXPECT_EQ(v4[2].objective, 3.5);
  const WeightedTree three = parse_tree("3\n1 2 1\n2 3 1\n");
  const auto v3 = path_fpmax_sweep(SolverConfig{0.5}, compress_onto_path(three, diameter(three)));
  EXPECT_EQ(v3[0].objective, 2.0);
  EXPECT_EQ(v3[1].objective, 2.0);
}

TEST(RecurrenceDelta, HandCheckedAnchors) {
  const CompressedPath cp = t6b_diameter();
  ASSERT_EQ(cp.pivot, 2u);
  EXPECT_EQ(recurrence_delta(SolverConfig{0.5}, cp, 1), -1.5);
  EXPECT_EQ(recurrence_delta(SolverConfig{0.5}, cp, 3), 5.0);
  EXPECT_THROW(recurrence_delta(SolverConfig{0.5}, cp, 2), std::invalid_argument);
  EXPECT_THROW(recurrence_delta(SolverConfig{0.5}, cp, 0), std::invalid_argument);
  EXPECT_THROW(recurrence_delta(SolverConfig{0.5}, cp, 4), std::invalid_argument);
}

TEST(RecurrenceDelta, MatchesNeighbourDifferences) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const WeightedTree t = integer_tree(3 + static_cast<int>(seed % 20), seed);
    const CompressedPath cp = compress_onto_path(t, diameter(t));
    for (double lambda : lambda_grid()) {
      const SolverConfig cfg{lambda};
      const auto direct = brute_path_fpmax(cfg, cp);
      for (std::size_t u = 1; u + 1 < cp.base.vertices.size(); ++u) {
        if (u == cp.pivot) continue;
        // lambda scaling rounds differently from the objective differences.
        EXPECT_NEAR(recurrence_delta(cfg, cp, u),
                    direct[u - 1].objective - direct[u].objective, 1e-9)
            << "seed " << seed << " u " << u;
      }
    }
  }
}

TEST(PathSweep, MatchesDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedTree t = integer_tree(2 + static_cast<int>(seed % 30), seed);
    const CompressedPath cp = compress_onto_path(t, diameter(t));
    for (double lambda : lambda_grid()) {
      const auto fast = path_fpmax_sweep(SolverConfig{lambda}, cp);
      const auto slow = brute_path_fpmax(SolverConfig{lambda}, cp);
      ASSERT_EQ(fast.size(), slow.size());
      for (std::size_t k = 0; k < fast.size(); ++k) {
        EXPECT_EQ(fast[k].transport, slow[k].transport);
        EXPECT_EQ(fast[k].f5, slow[k].f5);
        EXPECT_EQ(fast[k].objective, slow[k].objective);
      }
    }
  }
}

// The compressed transport plus the hang offset is the true transport of the
// split with facilities at the path ends.
TEST(PathSweep, TransportMatchesFullEvaluation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const WeightedTree t = integer_tree(2 + static_cast<int>(seed % 25), seed);
    const PathDescriptor path = diameter(t);
    const auto values = path_fpmax_sweep(SolverConfig{0.5}, compress_onto_path(t, path));
    for (const PathEdgeValue& pv : values) {
      const auto p = split_by_edge(t, pv.edge);
      const VertexId first = path.vertices.front(), last = path.vertices.back();
      const bool first_in_a = p.in_a(first);
      const auto a = make_assignment(t, pv.edge, first_in_a ? last : first,
                                     first_in_a ? first : last, Problem::maxian);
      EXPECT_EQ(pv.transport, eval_transport(t, a));
      EXPECT_EQ(pv.f5, eval_f5(p));
    }
  }
}

TEST(Maxian2Linear, SixVertexExampleAtHalf) {
  const MaxianSolution s = solve_balanced_2maxian_linear(SolverConfig{0.5}, t6b());
  EXPECT_EQ(s.objective, 12.0);
  EXPECT_EQ(s.edge_u, 3);
  EXPECT_EQ(s.edge_v, 4);
  EXPECT_EQ(s.server_a, 5);
  EXPECT_EQ(s.server_b, 1);
  EXPECT_EQ(s.method, MaxianMethod::linear);
  EXPECT_TRUE(s.warning.empty());
}

TEST(Maxian2Linear, ZeroLengthEdgeFallsBackToCubic) {
  const WeightedTree t = parse_tree("4\n1 2 0\n2 3 1\n3 4 2\n");
  const MaxianSolution s = solve_balanced_2maxian_linear(SolverConfig{0.5}, t);
  EXPECT_EQ(s.method, MaxianMethod::cubic);
  EXPECT_FALSE(s.warning.empty());
  EXPECT_EQ(s.objective, solve_balanced_2maxian_cubic(SolverConfig{0.5}, t).objective);
}

TEST(Maxian2Linear, ReportedAssignmentReproducesObjective) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const WeightedTree t = integer_tree(2 + static_cast<int>(seed % 40), seed);
    for (double lambda : {0.0, 0.3, 1.0}) {
      const SolverConfig cfg{lambda};
      const MaxianSolution s = solve_balanced_2maxian_linear(cfg, t);
      const auto a = make_assignment(t, s.deleted_edge, s.server_a, s.server_b,
                                     Problem::maxian);
      EXPECT_EQ(eval_fpmax(cfg, t, a), s.objective);
      EXPECT_EQ(eval_transport(t, a), s.f2);
    }
  }
}

// With lambda = 1 the balance term vanishes and the diameter ends are
// optimal, so all three methods agree.
TEST(Maxian2Linear, EqualsOraclesForPureTransport) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const WeightedTree t = integer_tree(3 + static_cast<int>(seed % 10), seed);
    const SolverConfig cfg{1.0};
    const double lin = solve_balanced_2maxian_linear(cfg, t).objective;
    EXPECT_EQ(lin, solve_balanced_2maxian_cubic(cfg, t).objective) << "seed " << seed;
    EXPECT_EQ(lin, brute_2maxian(cfg, t).objective) << "seed " << seed;
  }
}

TEST(Maxian2Linear, CanMissOffDiameterOptimum) {
  const WeightedTree t = parse_tree(kStar);
  const SolverConfig cfg{0.0};
  const MaxianSolution cubic = solve_balanced_2maxian_cubic(cfg, t);
  const MaxianSolution linear = solve_balanced_2maxian_linear(cfg, t);
  EXPECT_EQ(cubic.objective, 0.0);
  EXPECT_EQ(cubic.edge_u, 1);
  EXPECT_EQ(cubic.edge_v, 2);
  EXPECT_EQ(linear.objective, -14.0);
  EXPECT_LT(linear.objective, cubic.objective);
}

TEST(Maxian2Cubic, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedTree t = integer_tree(3 + static_cast<int>(seed % 10), seed);
    for (double lambda : lambda_grid()) {
      const SolverConfig cfg{lambda};
      const MaxianSolution c = solve_balanced_2maxian_cubic(cfg, t);
      const MaxianSolution b = brute_2maxian(cfg, t);
      EXPECT_EQ(c.objective, b.objective);
      EXPECT_EQ(c.deleted_edge, b.deleted_edge);
      EXPECT_EQ(c.server_a, b.server_a);
      EXPECT_EQ(c.server_b, b.server_b);
    }
  }
}

TEST(Maxian2Cubic, SomeOptimalPairIsLeaves) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedTree t = integer_tree(3 + static_cast<int>(seed % 10), seed);
    for (double lambda : {0.0, 0.5, 1.0}) {
      const MaxianSolution s = solve_balanced_2maxian_cubic(SolverConfig{lambda}, t);
      const auto p = split_by_edge(t, s.deleted_edge);
      // Moving a facility towards a leaf of its own side never lowers the
      // transport, so the best pair found by leaf search matches the optimum.
      double best_leaf = -std::numeric_limits<double>::infinity();
      for (VertexId x1 : p.side_a)
        for (VertexId x2 : p.side_b)
          if ((is_leaf(t, x1) || p.side_a.size() == 1) &&
              (is_leaf(t, x2) || p.side_b.size() == 1)) {
            const auto a = make_assignment(t, s.deleted_edge, x2, x1, Problem::maxian);
            best_leaf = std::max(best_leaf, eval_fpmax(SolverConfig{lambda}, t, a));
          }
      EXPECT_NEAR(best_leaf, s.objective, 1e-9) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace baltree
