#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace baltree {

/// 1-based vertex id, as used in tree files and reported solutions.
using VertexId = std::int32_t;
/// 0-based position of an edge in the tree's edge list (input order).
using EdgeIndex = std::int32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double length = 0.0;
};

/// One direction of an edge in a vertex's adjacency list.
struct Arc {
  VertexId to = 0;
  EdgeIndex edge = -1;
  double length = 0.0;
};

struct VertexData {
  double weight = 1.0;        // demand w
  double service_time = 1.0;  // t
};

/// A vertex- and edge-weighted tree. Immutable once built; the constructor
/// rejects anything that is not a tree on ids 1..n with nonnegative data.
class WeightedTree {
 public:
  /// `vertices[i]` describes vertex i+1. Throws std::invalid_argument.
  WeightedTree(std::vector<VertexData> vertices, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  double weight(VertexId v) const { return w_[checked(v)]; }
  double service_time(VertexId v) const { return t_[checked(v)]; }
  /// z = w * t, the service load of a vertex.
  double z(VertexId v) const { return z_[checked(v)]; }

  double total_weight() const noexcept { return total_w_; }
  double total_z() const noexcept { return total_z_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const;

  /// Edges leaving v, with the far endpoint and length stored inline.
  std::span<const Arc> arcs(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(arcs(v).size()); }
  VertexId opposite(EdgeIndex e, VertexId v) const;

  bool valid_vertex(VertexId v) const noexcept { return v >= 1 && v <= n_; }
  bool valid_edge(EdgeIndex e) const noexcept {
    return e >= 0 && e < edge_count();
  }
  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;
  bool has_zero_length_edge() const noexcept { return has_zero_length_; }

  // Raw per-vertex arrays indexed by id; slot 0 is unused.
  std::span<const double> weights() const noexcept { return w_; }
  std::span<const double> loads() const noexcept { return z_; }

 private:
  std::size_t checked(VertexId v) const;

  int n_ = 0;
  std::vector<double> w_, t_, z_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> adj_offset_;
  std::vector<Arc> adj_;
  double total_w_ = 0.0;
  double total_z_ = 0.0;
  bool has_zero_length_ = false;
};

/// Reads the plain-text tree format:
///
///   n
///   u v length        (n-1 lines)
///   id w t            (n lines in any order, or none at all for w = t = 1)
///
/// Blank lines and lines starting with '#' are ignored. Throws ParseError
/// naming the offending line.
WeightedTree parse_tree(std::istream& in);
WeightedTree parse_tree(std::string_view text);
WeightedTree load_tree(const std::string& path);

/// Writes `tree` in the format accepted by parse_tree, always with explicit
/// vertex lines.
std::string render_tree(const WeightedTree& tree);

/// Distances from `source` to every vertex, indexed by id (slot 0 unused).
std::vector<double> distances_from(const WeightedTree& tree, VertexId source);

/// Length of the unique u-v path.
double dist(const WeightedTree& tree, VertexId u, VertexId v);

/// The two components left after deleting one edge.
struct EdgeBipartition {
  EdgeIndex edge = 0;
  VertexId endpoint_a = 0;  // smaller endpoint id; lies in side A
  VertexId endpoint_b = 0;
  std::vector<VertexId> side_a;  // ascending ids
  std::vector<VertexId> side_b;
  std::vector<std::uint8_t> label;  // label[v]: 0 = side A, 1 = side B
  double weight_a = 0.0, weight_b = 0.0;
  double z_a = 0.0, z_b = 0.0;

  bool in_a(VertexId v) const { return label[static_cast<std::size_t>(v)] == 0; }
};

EdgeBipartition split_by_edge(const WeightedTree& tree, EdgeIndex e);

struct PathDescriptor {
  std::vector<VertexId> vertices;
  std::vector<EdgeIndex> edges;      // edges[i] joins vertices[i], vertices[i+1]
  std::vector<double> prefix_dist;   // distance from vertices.front()
  double total_length = 0.0;
};

/// The unique path from u to v.
PathDescriptor path_between(const WeightedTree& tree, VertexId u, VertexId v);

/// A longest path, found by double sweep. Among all longest paths the one
/// with the lexicographically smallest (min id, max id) endpoint pair is
/// returned, oriented from the smaller endpoint.
PathDescriptor diameter(const WeightedTree& tree);

/// A path with every off-path subtree folded onto the path vertex it hangs
/// from.
struct CompressedPath {
  PathDescriptor base;
  std::vector<double> w_hat;  // aggregated weight per path position
  std::vector<double> z_hat;  // aggregated load per path position
  /// 0-based position r of the balance pivot: the first position whose load
  /// prefix reaches Z/2 (0 when Z = 0).
  std::size_t pivot = 0;
  /// Sum over all vertices of w * (distance to the path vertex it hangs from).
  double hang_offset = 0.0;
  double total_z = 0.0;
};

/// Throws std::invalid_argument if `path` is not a simple path of `tree`.
CompressedPath compress_onto_path(const WeightedTree& tree,
                                  const PathDescriptor& path);

}  // namespace baltree
