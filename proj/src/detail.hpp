#pragma once

#include <vector>

#include "baltree/tree.hpp"

namespace baltree::detail {

/// Tree rooted at one vertex; arrays are indexed by id with slot 0 unused.
struct RootedTree {
  VertexId root = 0;
  std::vector<VertexId> parent;       // 0 for the root
  std::vector<EdgeIndex> parent_edge; // -1 for the root
  std::vector<double> depth;          // distance from the root
};

RootedTree root_at(const WeightedTree& tree, VertexId root);

/// Smallest id attaining the maximum of `values[1..]`.
VertexId argmax_id(const std::vector<double>& values);

}  // namespace baltree::detail
