#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod::testing {

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t edges);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// Triangles 0-1-2 and 0-3-4 sharing vertex 0.
Graph bowtie();
// Triangles a1=(0,1) a2=(1,2) a3=(2,0), b1=(3,4) b2=(4,5) b3=(5,3), bridge (0,3).
Graph dumbbell();
// Same triangles joined by a path 0-6-3 (edges e7=(0,6), e8=(6,3)).
Graph triangles_joined_by_path2();
// Triangles 0-1-2 and 3-4-5 joined by two internally disjoint length-2
// paths 0-6-3 and 0-7-3.
Graph two_triangles_two_paths();
// Two disjoint triangles 0-1-2 and 3-4-5.
Graph two_triangles();

/// All graphs on n vertices up to isomorphism, one canonical representative
/// each; labels "0".."n-1".
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> all_connected_graphs(std::size_t n);
/// Isomorphism invariant: equal iff the graphs are isomorphic (n <= 32).
std::vector<bool> canonical_form(const Graph& g);

/// Erdos-Renyi G(n, p) with a seeded engine.
Graph random_graph(std::uint64_t seed, std::size_t n, double p);
/// Random bipartite graph with sides a, b and at most max_edges edges.
Graph random_bipartite(std::uint64_t seed, std::size_t a, std::size_t b, std::size_t max_edges);

/// Every edge but `drop`.
Graph delete_edge(const Graph& g, EdgeId drop);

}  // namespace unimod::testing
