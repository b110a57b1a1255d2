#include "baltree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "baltree/errors.hpp"
#include "baltree/format.hpp"
#include "detail.hpp"

namespace baltree {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

WeightedTree::WeightedTree(std::vector<VertexData> vertices,
                           std::vector<Edge> edges)
    : n_(static_cast<int>(vertices.size())), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (edges_.size() != static_cast<std::size_t>(n_ - 1)) {
    throw std::invalid_argument("tree with " + std::to_string(n_) +
                                " vertices needs exactly " +
                                std::to_string(n_ - 1) + " edges");
  }
  const auto slots = static_cast<std::size_t>(n_) + 1;
  w_.assign(slots, 0.0);
  t_.assign(slots, 0.0);
  z_.assign(slots, 0.0);
  for (int i = 1; i <= n_; ++i) {
    const auto& vd = vertices[static_cast<std::size_t>(i - 1)];
    if (!nonnegative(vd.weight) || !nonnegative(vd.service_time)) {
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  " has a negative or non-finite weight");
    }
    w_[i] = vd.weight;
    t_[i] = vd.service_time;
    z_[i] = vd.weight * vd.service_time;
    total_w_ += w_[i];
    total_z_ += z_[i];
  }

  DisjointSets sets(n_);
  std::vector<std::int32_t> degree(slots, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (!valid_vertex(ed.u) || !valid_vertex(ed.v) || ed.u == ed.v) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " has invalid endpoints");
    }
    if (!nonnegative(ed.length)) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " has a negative or non-finite length");
    }
    if (!sets.unite(ed.u, ed.v)) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " closes a cycle");
    }
    if (ed.length == 0.0) has_zero_length_ = true;
    ++degree[ed.u];
    ++degree[ed.v];
  }

  adj_offset_.assign(slots + 1, 0);
  for (int v = 1; v <= n_; ++v) adj_offset_[v + 1] = adj_offset_[v] + degree[v];
  adj_.resize(2 * edges_.size());
  std::vector<std::int32_t> fill(adj_offset_.begin(), adj_offset_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    const auto idx = static_cast<EdgeIndex>(e);
    adj_[static_cast<std::size_t>(fill[ed.u]++)] = {ed.v, idx, ed.length};
    adj_[static_cast<std::size_t>(fill[ed.v]++)] = {ed.u, idx, ed.length};
  }
}

std::size_t WeightedTree::checked(VertexId v) const {
  if (!valid_vertex(v)) {
    throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }
  return static_cast<std::size_t>(v);
}

const Edge& WeightedTree::edge(EdgeIndex e) const {
  if (!valid_edge(e)) {
    throw std::out_of_range("invalid edge index " + std::to_string(e));
  }
  return edges_[static_cast<std::size_t>(e)];
}

std::span<const Arc> WeightedTree::arcs(VertexId v) const {
  const auto i = checked(v);
  return std::span<const Arc>(adj_).subspan(
      static_cast<std::size_t>(adj_offset_[i]),
      static_cast<std::size_t>(adj_offset_[i + 1] - adj_offset_[i]));
}

VertexId WeightedTree::opposite(EdgeIndex e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("vertex " + std::to_string(v) +
                              " is not an endpoint of edge " +
                              std::to_string(e));
}

std::optional<EdgeIndex> WeightedTree::find_edge(VertexId a, VertexId b) const {
  if (!valid_vertex(a) || !valid_vertex(b)) return std::nullopt;
  for (const Arc& arc : arcs(a)) {
    if (arc.to == b) return arc.edge;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct NumberedLine {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

long long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, std::string("expected number for ") + what +
                               ", got '" + std::string(tok) + "'");
  }
  if (value < 0.0) {
    throw ParseError(line, std::string("negative ") + what);
  }
  return value;
}

}  // namespace

WeightedTree parse_tree(std::istream& in) {
  std::vector<std::string> storage;
  std::vector<std::size_t> numbers;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    storage.push_back(std::move(raw));
    numbers.push_back(lineno);
  }
  std::vector<NumberedLine> lines;
  lines.reserve(storage.size());
  for (std::size_t i = 0; i < storage.size(); ++i) {
    lines.push_back({numbers[i], tokenize(storage[i])});
  }
  if (lines.empty()) throw ParseError(0, "empty input: missing vertex count");

  const auto& header = lines.front();
  if (header.tokens.size() != 1) {
    throw ParseError(header.number, "first line must hold only the vertex count");
  }
  const long long n_raw = parse_int(header.tokens[0], header.number, "vertex count");
  if (n_raw < 1 || n_raw > 100'000'000) {
    throw ParseError(header.number, "vertex count must be at least 1");
  }
  const auto n = static_cast<int>(n_raw);

  const std::size_t edge_lines = static_cast<std::size_t>(n - 1);
  if (lines.size() < 1 + edge_lines) {
    throw ParseError(0, "expected " + std::to_string(edge_lines) +
                            " edge lines, found " +
                            std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(edge_lines);
  std::set<std::pair<VertexId, VertexId>> seen;
  DisjointSets sets(n);
  for (std::size_t i = 1; i <= edge_lines; ++i) {
    const auto& ln = lines[i];
    if (ln.tokens.size() != 3) {
      throw ParseError(ln.number, "edge line must be 'u v length'");
    }
    const long long u = parse_int(ln.tokens[0], ln.number, "edge endpoint");
    const long long v = parse_int(ln.tokens[1], ln.number, "edge endpoint");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ln.number, "edge endpoint out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(ln.number, "self-loop edge");
    const double len = parse_real(ln.tokens[2], ln.number, "edge length");
    const std::pair<VertexId, VertexId> key{static_cast<VertexId>(std::min(u, v)),
                                            static_cast<VertexId>(std::max(u, v))};
    if (!seen.insert(key).second) {
      throw ParseError(ln.number, "duplicate edge (" + std::to_string(key.first) +
                                      "," + std::to_string(key.second) + ")");
    }
    if (!sets.unite(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError(ln.number, "edge closes a cycle; edge set is not a tree");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), len});
  }

  std::vector<VertexData> vertices(static_cast<std::size_t>(n));
  const std::size_t vertex_lines = lines.size() - 1 - edge_lines;
  if (vertex_lines != 0) {
    if (vertex_lines != static_cast<std::size_t>(n)) {
      throw ParseError(lines[1 + edge_lines].number,
                       "expected " + std::to_string(n) +
                           " vertex lines (or none), found " +
                           std::to_string(vertex_lines));
    }
    std::vector<bool> given(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 1 + edge_lines; i < lines.size(); ++i) {
      const auto& ln = lines[i];
      if (ln.tokens.size() != 3) {
        throw ParseError(ln.number, "vertex line must be 'id w t'");
      }
      const long long id = parse_int(ln.tokens[0], ln.number, "vertex id");
      if (id < 1 || id > n) {
        throw ParseError(ln.number, "vertex id out of range 1.." + std::to_string(n));
      }
      if (given[static_cast<std::size_t>(id)]) {
        throw ParseError(ln.number, "vertex " + std::to_string(id) + " listed twice");
      }
      given[static_cast<std::size_t>(id)] = true;
      auto& vd = vertices[static_cast<std::size_t>(id - 1)];
      vd.weight = parse_real(ln.tokens[1], ln.number, "vertex weight");
      vd.service_time = parse_real(ln.tokens[2], ln.number, "service time");
    }
  }
  return WeightedTree(std::move(vertices), std::move(edges));
}

WeightedTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

WeightedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_tree(in);
}

std::string render_tree(const WeightedTree& tree) {
  std::string out = std::to_string(tree.size()) + "\n";
  for (const Edge& e : tree.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_number(e.length) + "\n";
  }
  for (VertexId v = 1; v <= tree.size(); ++v) {
    out += std::to_string(v) + " " + format_number(tree.weight(v)) + " " +
           format_number(tree.service_time(v)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traversals

namespace detail {

RootedTree root_at(const WeightedTree& tree, VertexId root) {
  if (!tree.valid_vertex(root)) {
    throw std::out_of_range("invalid vertex id " + std::to_string(root));
  }
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(slots, 0);
  rt.parent_edge.assign(slots, -1);
  rt.depth.assign(slots, 0.0);
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Arc& a : tree.arcs(x)) {
      if (a.edge == rt.parent_edge[x]) continue;
      rt.parent[a.to] = x;
      rt.parent_edge[a.to] = a.edge;
      rt.depth[a.to] = rt.depth[x] + a.length;
      stack.push_back(a.to);
    }
  }
  return rt;
}

VertexId argmax_id(const std::vector<double>& values) {
  VertexId best = 1;
  for (std::size_t v = 2; v < values.size(); ++v) {
    if (values[v] > values[static_cast<std::size_t>(best)]) best = static_cast<VertexId>(v);
  }
  return best;
}

}  // namespace detail

std::vector<double> distances_from(const WeightedTree& tree, VertexId source) {
  if (!tree.valid_vertex(source)) {
    throw std::out_of_range("invalid vertex id " + std::to_string(source));
  }
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;
  std::vector<double> d(slots, 0.0);
  std::vector<std::pair<VertexId, EdgeIndex>> stack{{source, -1}};
  while (!stack.empty()) {
    const auto [x, via] = stack.back();
    stack.pop_back();
    for (const Arc& a : tree.arcs(x)) {
      if (a.edge == via) continue;
      d[a.to] = d[x] + a.length;
      stack.emplace_back(a.to, a.edge);
    }
  }
  return d;
}

double dist(const WeightedTree& tree, VertexId u, VertexId v) {
  if (!tree.valid_vertex(v)) {
    throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }
  if (u == v && tree.valid_vertex(u)) return 0.0;
  return distances_from(tree, u)[static_cast<std::size_t>(v)];
}

EdgeBipartition split_by_edge(const WeightedTree& tree, EdgeIndex e) {
  const Edge& cut = tree.edge(e);
  EdgeBipartition part;
  part.edge = e;
  part.endpoint_a = std::min(cut.u, cut.v);
  part.endpoint_b = std::max(cut.u, cut.v);
  part.label.assign(static_cast<std::size_t>(tree.size()) + 1, 1);

  std::vector<std::pair<VertexId, EdgeIndex>> stack{{part.endpoint_a, e}};
  part.label[static_cast<std::size_t>(part.endpoint_a)] = 0;
  while (!stack.empty()) {
    const auto [x, via] = stack.back();
    stack.pop_back();
    for (const Arc& a : tree.arcs(x)) {
      if (a.edge == via) continue;
      part.label[static_cast<std::size_t>(a.to)] = 0;
      stack.emplace_back(a.to, a.edge);
    }
  }
  for (VertexId v = 1; v <= tree.size(); ++v) {
    if (part.in_a(v)) {
      part.side_a.push_back(v);
      part.weight_a += tree.weight(v);
      part.z_a += tree.z(v);
    } else {
      part.side_b.push_back(v);
      part.weight_b += tree.weight(v);
      part.z_b += tree.z(v);
    }
  }
  return part;
}

// ---------------------------------------------------------------------------
// Paths

namespace {

PathDescriptor path_from_rooted(const WeightedTree& tree,
                                const detail::RootedTree& rt, VertexId target) {
  PathDescriptor p;
  for (VertexId x = target; x != 0; x = rt.parent[x]) {
    p.vertices.push_back(x);
    if (rt.parent_edge[x] >= 0) p.edges.push_back(rt.parent_edge[x]);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  p.prefix_dist.assign(p.vertices.size(), 0.0);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    p.prefix_dist[i + 1] = p.prefix_dist[i] + tree.edge(p.edges[i]).length;
  }
  p.total_length = p.prefix_dist.back();
  return p;
}

}  // namespace

PathDescriptor path_between(const WeightedTree& tree, VertexId u, VertexId v) {
  if (!tree.valid_vertex(v)) {
    throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }
  return path_from_rooted(tree, detail::root_at(tree, u), v);
}

PathDescriptor diameter(const WeightedTree& tree) {
  const VertexId a = detail::argmax_id(distances_from(tree, 1));
  detail::RootedTree from_a = detail::root_at(tree, a);
  const VertexId b = detail::argmax_id(from_a.depth);
  const double length = from_a.depth[static_cast<std::size_t>(b)];
  detail::RootedTree from_b = detail::root_at(tree, b);

  // ecc(v) = max(d(v,a), d(v,b)); diameter endpoints are the vertices whose
  // eccentricity equals the diameter length.
  const double slack = 1e-12 * std::max(1.0, length);
  VertexId first = 0;
  for (VertexId v = 1; v <= tree.size() && first == 0; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (std::max(from_a.depth[i], from_b.depth[i]) >= length - slack) first = v;
  }
  // Usually one of the sweep ends; reuse its traversal.
  const detail::RootedTree rt = first == a   ? std::move(from_a)
                                : first == b ? std::move(from_b)
                                             : detail::root_at(tree, first);
  VertexId second = first;
  for (VertexId v = 1; v <= tree.size(); ++v) {
    if (v != first && rt.depth[static_cast<std::size_t>(v)] >= length - slack) {
      second = v;
      break;
    }
  }
  return path_from_rooted(tree, rt, second);
}

CompressedPath compress_onto_path(const WeightedTree& tree,
                                  const PathDescriptor& path) {
  if (path.vertices.empty()) throw std::invalid_argument("empty path");
  const auto slots = static_cast<std::size_t>(tree.size()) + 1;
  std::vector<std::int32_t> position(slots, -1);

  CompressedPath cp;
  cp.base.vertices = path.vertices;
  cp.base.prefix_dist.assign(path.vertices.size(), 0.0);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (!tree.valid_vertex(v)) {
      throw std::invalid_argument("path holds invalid vertex " + std::to_string(v));
    }
    if (position[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("path repeats vertex " + std::to_string(v));
    }
    position[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
    if (i == 0) continue;
    const auto e = tree.find_edge(path.vertices[i - 1], v);
    if (!e) {
      throw std::invalid_argument("path vertices " +
                                  std::to_string(path.vertices[i - 1]) + " and " +
                                  std::to_string(v) + " are not adjacent");
    }
    cp.base.edges.push_back(*e);
    cp.base.prefix_dist[i] = cp.base.prefix_dist[i - 1] + tree.edge(*e).length;
  }
  cp.base.total_length = cp.base.prefix_dist.back();

  const std::size_t len = path.vertices.size();
  cp.w_hat.assign(len, 0.0);
  cp.z_hat.assign(len, 0.0);

  // Each component of the tree minus the path edges contains exactly one path
  // vertex; walk outward from it without stepping back onto the path.
  struct Item {
    VertexId vertex;
    EdgeIndex via;
    double depth;
  };
  std::vector<Item> stack;
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId anchor = path.vertices[i];
    stack.push_back({anchor, -1, 0.0});
    while (!stack.empty()) {
      const Item it = stack.back();
      stack.pop_back();
      cp.w_hat[i] += tree.weight(it.vertex);
      cp.z_hat[i] += tree.z(it.vertex);
      cp.hang_offset += tree.weight(it.vertex) * it.depth;
      for (const Arc& a : tree.arcs(it.vertex)) {
        if (a.edge == it.via) continue;
        if (position[static_cast<std::size_t>(a.to)] != -1) continue;
        stack.push_back({a.to, a.edge, it.depth + a.length});
      }
    }
  }

  cp.total_z = std::accumulate(cp.z_hat.begin(), cp.z_hat.end(), 0.0);
  cp.pivot = 0;
  if (cp.total_z > 0.0) {
    const double half = cp.total_z / 2.0;
    double prefix = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      prefix += cp.z_hat[i];
      if (prefix >= half) {
        cp.pivot = i;
        break;
      }
    }
  }
  return cp;
}

}  // namespace baltree
