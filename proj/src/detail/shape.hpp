#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unimod/decompose.hpp"
#include "unimod/graph.hpp"

namespace unimod::detail {

// Block structure of a connected edge set, as used by the circuit and
// primitive-subgraph predicates.
struct SubgraphShape {
  Subgraph sub;
  BlockDecomposition blocks;
  std::vector<bool> is_cycle;      // per block
  std::vector<bool> is_cut_edge;   // per block (single edge)
  std::vector<std::size_t> cut_vertex_blocks;  // per local vertex: blocks containing it
  bool connected = false;
};

SubgraphShape analyze_shape(const Graph& g, std::span<const EdgeId> edges);

// Blocks adjacent in the block tree (sharing a cut vertex). Only meaningful
// when every cut vertex lies in exactly two blocks.
std::vector<std::vector<std::size_t>> block_tree(const SubgraphShape& shape);

}  // namespace unimod::detail
