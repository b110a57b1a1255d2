#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

namespace baltree {
namespace {

using testing::floyd;
using testing::integer_tree;
using testing::t6;
using testing::t6b;

TEST(ParseTree, SmallestInstance) {
  const WeightedTree t = parse_tree("1\n1 1 1");
  EXPECT_EQ(t.size(), 1);
  EXPECT_EQ(t.edge_count(), 0);
  EXPECT_DOUBLE_EQ(t.total_z(), 1.0);
}

TEST(ParseTree, SixVertexFixtureDefaultsToUnitWeights) {
  const WeightedTree t = t6();
  EXPECT_EQ(t.size(), 6);
  EXPECT_EQ(t.total_z(), 6.0);
  EXPECT_EQ(t.total_weight(), 6.0);
  const WeightedTree from_file = load_tree(testing::fixture_path("t6.tree"));
  EXPECT_EQ(render_tree(from_file), render_tree(t));
}

TEST(ParseTree, VertexLinesInAnyOrderAndLoadIsProduct) {
  const WeightedTree t = parse_tree("# c\n2\n\n1 2 0.5\n2 3 4\n1 2 0.25\n");
  EXPECT_EQ(t.weight(2), 3.0);
  EXPECT_EQ(t.service_time(2), 4.0);
  EXPECT_EQ(t.z(2), 12.0);
  EXPECT_EQ(t.z(1), 0.5);
  EXPECT_EQ(t.total_z(), 12.5);
}

struct BadInput {
  const char* text;
  std::size_t line;
  const char* fragment;
};

void PrintTo(const BadInput& b, std::ostream* os) { *os << b.fragment; }

class ParseTreeErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseTreeErrors, NamesOffendingLine) {
  const BadInput& bad = GetParam();
  try {
    parse_tree(bad.text);
    FAIL() << "accepted: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_NE(std::string(e.what()).find(bad.fragment), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Validation, ParseTreeErrors,
    ::testing::Values(
        BadInput{"3\n1 2 1\n1 2 1\n", 3, "duplicate edge"},
        BadInput{"3\n1 2 1\n2 1 1\n", 3, "duplicate edge"},
        BadInput{"4\n1 2 1\n2 3 1\n3 1 1\n", 4, "cycle"},
        BadInput{"2\n1 2 -1\n", 2, "negative edge length"},
        BadInput{"2\n1 2 1\n1 1 1\n2 -3 1\n", 4, "negative vertex weight"},
        BadInput{"2\n1 2 1\n1 1 1\n", 3, "vertex lines"},
        BadInput{"2\n1 2 1\n1 1 1\n1 1 1\n", 4, "listed twice"},
        BadInput{"2\n1 3 1\n", 2, "out of range"},
        BadInput{"2\n1 2\n", 2, "u v length"},
        BadInput{"x\n", 1, "integer"},
        BadInput{"0\n", 1, "at least 1"},
        BadInput{"3\n1 2 1\n", 0, "edge lines"},
        BadInput{"2\n1 2 abc\n", 2, "edge length"}));

TEST(WeightedTree, ConstructorRejectsNonTrees) {
  EXPECT_THROW(WeightedTree({{}, {}, {}}, {{1, 2, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedTree({{}, {}, {}}, {{1, 2, 1.0}, {2, 1, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(WeightedTree({{-1.0, 1.0}}, {}), std::invalid_argument);
  EXPECT_THROW(WeightedTree({}, {}), std::invalid_argument);
}

TEST(Dist, HandSums) {
  const WeightedTree t = t6();
  EXPECT_EQ(dist(t, 1, 5), 5.0);
  EXPECT_EQ(dist(t, 5, 6), 2.0);
  EXPECT_EQ(dist(t, 3, 3), 0.0);
  EXPECT_THROW(dist(t, 0, 1), std::out_of_range);
  EXPECT_THROW(dist(t, 1, 7), std::out_of_range);
}

TEST(Dist, MatchesFloydOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightedTree t = integer_tree(15, seed);
    const auto d = floyd(t);
    for (VertexId u = 1; u <= t.size(); ++u) {
      const auto row = distances_from(t, u);
      for (VertexId v = 1; v <= t.size(); ++v) {
        ASSERT_EQ(row[v], d[u][v]);
        ASSERT_EQ(dist(t, v, u), row[v]);
      }
    }
  }
}

TEST(SplitByEdge, CentralEdge) {
  const WeightedTree t = t6();
  const auto p = split_by_edge(t, *t.find_edge(3, 4));
  EXPECT_EQ(p.side_a, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(p.side_b, (std::vector<VertexId>{4, 5, 6}));
  EXPECT_EQ(p.z_a, 3.0);
  EXPECT_EQ(p.z_b, 3.0);
}

TEST(SplitByEdge, LeafEdgeAndTwoVertexTree) {
  const auto p = split_by_edge(t6(), 0);
  EXPECT_EQ(p.side_a, (std::vector<VertexId>{1}));
  EXPECT_EQ(p.z_a, 1.0);
  EXPECT_EQ(p.z_b, 5.0);

  const WeightedTree two = parse_tree("2\n2 1 3\n");
  const auto q = split_by_edge(two, 0);
  EXPECT_EQ(q.endpoint_a, 1);
  EXPECT_EQ(q.side_a, (std::vector<VertexId>{1}));
  EXPECT_EQ(q.side_b, (std::vector<VertexId>{2}));
  EXPECT_THROW(split_by_edge(two, 1), std::out_of_range);
}

TEST(SplitByEdge, SidesPartitionAndConserveMass) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const WeightedTree t = integer_tree(2 + static_cast<int>(seed % 20), seed);
    for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
      const auto p = split_by_edge(t, e);
      const auto oracle = testing::component_of_smaller_end(t, e);
      ASSERT_EQ(p.side_a.size() + p.side_b.size(), static_cast<std::size_t>(t.size()));
      for (VertexId v = 1; v <= t.size(); ++v) ASSERT_EQ(p.in_a(v), oracle[v]);
      EXPECT_EQ(p.z_a + p.z_b, t.total_z());
      EXPECT_EQ(p.weight_a + p.weight_b, t.total_weight());
    }
  }
}

TEST(Diameter, SixVertexTieGoesToSmallerIds) {
  const auto p = diameter(t6());
  EXPECT_EQ(p.vertices, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(p.total_length, 5.0);
  EXPECT_EQ(p.prefix_dist, (std::vector<double>{0, 1, 3, 4, 5}));
}

TEST(Diameter, TrivialShapes) {
  const auto single = diameter(parse_tree("1\n"));
  EXPECT_EQ(single.vertices, (std::vector<VertexId>{1}));
  EXPECT_EQ(single.total_length, 0.0);

  const auto path = diameter(parse_tree("4\n3 4 1\n2 3 2\n1 2 1\n"));
  EXPECT_EQ(path.vertices, (std::vector<VertexId>{1, 2, 3, 4}));
  EXPECT_EQ(path.total_length, 4.0);
}

TEST(Diameter, MatchesAllPairsMaximumAndSmallestPair) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedTree t = integer_tree(2 + static_cast<int>(seed % 49), seed, 1, 3);
    const auto d = floyd(t);
    double best = -1.0;
    std::pair<VertexId, VertexId> pair{0, 0};
    for (VertexId u = 1; u <= t.size(); ++u) {
      for (VertexId v = u + 1; v <= t.size(); ++v) {
        if (d[u][v] > best) {
          best = d[u][v];
          pair = {u, v};
        }
      }
    }
    const auto p = diameter(t);
    ASSERT_EQ(p.total_length, best) << "seed " << seed;
    EXPECT_EQ(p.vertices.front(), pair.first) << "seed " << seed;
    EXPECT_EQ(p.vertices.back(), pair.second) << "seed " << seed;
    // Path additivity: d(a,u) + d(u,b) = d(a,b) for every path vertex.
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const VertexId u = p.vertices[i];
      EXPECT_EQ(d[pair.first][u] + d[u][pair.second], best);
      EXPECT_EQ(p.prefix_dist[i], d[pair.first][u]);
    }
  }
}

TEST(CompressOntoPath, SixVertexVariant) {
  const WeightedTree t = t6b();
  const auto cp = compress_onto_path(t, diameter(t));
  EXPECT_EQ(cp.w_hat, (std::vector<double>{1, 1, 1, 2, 1}));
  EXPECT_EQ(cp.z_hat, (std::vector<double>{1, 1, 1, 2, 1}));
  EXPECT_EQ(cp.pivot, 2u);  // third path vertex
  EXPECT_EQ(cp.hang_offset, 1.0);
}

TEST(CompressOntoPath, PurePathKeepsWeights) {
  const WeightedTree t = parse_tree("3\n1 2 2\n2 3 1\n1 2 3\n2 4 1\n3 1 1\n");
  const auto cp = compress_onto_path(t, diameter(t));
  EXPECT_EQ(cp.w_hat, (std::vector<double>{2, 4, 1}));
  EXPECT_EQ(cp.z_hat, (std::vector<double>{6, 4, 1}));
  EXPECT_EQ(cp.hang_offset, 0.0);
  EXPECT_EQ(cp.pivot, 0u);  // 6 >= 11/2 at the first vertex
}

TEST(CompressOntoPath, StarFoldsLeavesOntoCentre) {
  // Centre 1; leaves 2 and 3 at distance 3 form the diameter; 4, 5 hang at 1.
  const WeightedTree t = parse_tree(
      "5\n1 2 3\n1 3 3\n1 4 1\n1 5 2\n1 1 1\n2 1 1\n3 1 1\n4 2 1\n5 3 2\n");
  const auto cp = compress_onto_path(t, diameter(t));
  EXPECT_EQ(cp.base.vertices, (std::vector<VertexId>{2, 1, 3}));
  EXPECT_EQ(cp.w_hat, (std::vector<double>{1, 6, 1}));
  EXPECT_EQ(cp.z_hat, (std::vector<double>{1, 9, 1}));
  EXPECT_EQ(cp.hang_offset, 2.0 * 1 + 3.0 * 2);
  EXPECT_EQ(cp.pivot, 1u);
}

TEST(CompressOntoPath, ZeroLoadPivotIsFirstVertex) {
  const WeightedTree t = parse_tree("3\n1 2 1\n2 3 1\n1 0 1\n2 0 1\n3 0 1\n");
  EXPECT_EQ(compress_onto_path(t, diameter(t)).pivot, 0u);
}

TEST(CompressOntoPath, RejectsNonPaths) {
  const WeightedTree t = t6();
  PathDescriptor p;
  p.vertices = {1, 3};
  EXPECT_THROW(compress_onto_path(t, p), std::invalid_argument);
  p.vertices = {1, 2, 1};
  EXPECT_THROW(compress_onto_path(t, p), std::invalid_argument);
  p.vertices = {};
  EXPECT_THROW(compress_onto_path(t, p), std::invalid_argument);
}

TEST(CompressOntoPath, ConservesMassAndPivotInequalities) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WeightedTree t = integer_tree(1 + static_cast<int>(seed % 40), seed);
    const auto cp = compress_onto_path(t, diameter(t));
    EXPECT_EQ(std::accumulate(cp.w_hat.begin(), cp.w_hat.end(), 0.0), t.total_weight());
    EXPECT_EQ(std::accumulate(cp.z_hat.begin(), cp.z_hat.end(), 0.0), t.total_z());
    double before = 0.0;
    for (std::size_t i = 0; i < cp.pivot; ++i) before += cp.z_hat[i];
    EXPECT_LT(2.0 * before, cp.total_z);
    EXPECT_GE(2.0 * (before + cp.z_hat[cp.pivot]), cp.total_z);
    EXPECT_GE(cp.hang_offset, 0.0);

    // Offset equals the weighted distance of every vertex to the path.
    const auto d = floyd(t);
    double offset = 0.0;
    for (VertexId v = 1; v <= t.size(); ++v) {
      double nearest = d[v][cp.base.vertices.front()];
      for (VertexId p : cp.base.vertices) nearest = std::min(nearest, d[v][p]);
      offset += t.weight(v) * nearest;
    }
    EXPECT_EQ(cp.hang_offset, offset);
  }
}

TEST(RenderTree, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec g;
    g.n = 30;
    g.seed = seed;
    g.weights = ValueDist::uniform(0.0, 5.0);
    g.service = ValueDist::uniform(0.0, 5.0);
    const WeightedTree t = gen_random_tree(g);
    const WeightedTree back = parse_tree(render_tree(t));
    ASSERT_EQ(back.size(), t.size());
    for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
      EXPECT_EQ(back.edge(e).u, t.edge(e).u);
      EXPECT_EQ(back.edge(e).v, t.edge(e).v);
      EXPECT_EQ(back.edge(e).length, t.edge(e).length);
    }
    for (VertexId v = 1; v <= t.size(); ++v) {
      EXPECT_EQ(back.weight(v), t.weight(v));
      EXPECT_EQ(back.service_time(v), t.service_time(v));
    }
  }
}

}  // namespace
}  // namespace baltree
