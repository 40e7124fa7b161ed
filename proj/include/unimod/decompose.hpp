#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Vertex membership mask; nonzero entries mark vertices to ignore.
using VertexMask = std::vector<std::uint8_t>;

std::vector<Graph> connected_components(const Graph& g);

/// Components with index maps back into g, ordered by smallest vertex index.
std::vector<Subgraph> component_subgraphs(const Graph& g);

/// component id per vertex, numbered in order of smallest vertex index.
std::vector<std::size_t> component_ids(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;       // each sorted; blocks ordered by first edge
  std::vector<std::vector<VertexId>> block_vertices;
  std::vector<VertexId> cut_vertices;            // sorted
  std::vector<bool> block_bipartite;

  std::size_t non_bipartite_count() const;
};

BlockDecomposition block_decomposition(const Graph& g);

/// A cycle as a closed walk u_0..u_l (u_0 == u_l), l >= 3.
struct CycleWitness {
  Walk walk;
  bool odd = false;

  std::size_t length() const { return walk.length(); }
  /// u_0..u_{l-1}, without the closing repeat.
  std::vector<VertexId> cycle_vertices() const;
  static CycleWitness from_vertices(const Graph& g, std::vector<VertexId> cycle);
};

struct TwoColoring {
  std::vector<int> color;  // 0/1, or -1 for masked-out vertices
};

using BipartiteResult = std::variant<TwoColoring, CycleWitness>;

/// BFS two-coloring; on a conflict returns the odd cycle closed by the
/// conflicting edge through the BFS tree.
BipartiteResult bipartite_check(const Graph& g);
/// Same, on g minus the vertices flagged in `removed`.
BipartiteResult bipartite_check(const Graph& g, const VertexMask& removed);

bool is_bipartite(const Graph& g);
bool is_bipartite(const Graph& g, const VertexMask& removed);

struct CycleEnumeration {
  std::vector<CycleWitness> cycles;
  bool truncated = false;
};

/// All chordless odd cycles, in canonical order: each cycle starts at its
/// smallest vertex and runs toward the smaller of its two neighbours there;
/// cycles are sorted lexicographically by that vertex sequence. At most `cap`
/// are returned; `truncated` is set when more exist.
CycleEnumeration enumerate_induced_odd_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);
/// Single-threaded reference for enumerate_induced_odd_cycles.
CycleEnumeration enumerate_induced_odd_cycles_serial(const Graph& g,
                                                     std::size_t cap = kDefaultCycleCap);

/// All simple cycles of length <= max_length in the same canonical order.
/// `truncated` is set if the cap was hit or a longer cycle may exist.
CycleEnumeration enumerate_simple_cycles(const Graph& g, std::size_t max_length,
                                         std::size_t cap = kDefaultCycleCap);

bool is_chordless(const Graph& g, const CycleWitness& c);

}  // namespace unimod
