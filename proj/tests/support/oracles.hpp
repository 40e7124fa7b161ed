#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod::testing {

/// Every simple cycle as a sorted vertex list plus its length, found by
/// brute force over ordered vertex sequences.
struct BruteCycle {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
};
std::vector<BruteCycle> brute_simple_cycles(const Graph& g);

bool brute_has_disjoint_odd_cycles(const Graph& g);
bool brute_is_bipartite(const Graph& g);

/// A (plus - minus) computed from the edge list directly.
std::vector<BigInt> brute_apply_incidence(const Graph& g, const std::vector<BigInt>& u);

/// All nonzero kernel vectors with |u_i| <= bound by plain enumeration of
/// the whole box (no pruning).
std::vector<std::vector<int>> brute_kernel_box(const Graph& g, int bound);

/// Conformally minimal vectors among brute_kernel_box, sign-normalised,
/// as canonical binomials sorted.
std::vector<Binomial> brute_graver(const Graph& g, int bound);

/// Rank over Q by Gaussian elimination on rationals.
std::size_t brute_rank(const Graph& g);

/// Determinant by cofactor expansion.
BigInt brute_det(const std::vector<std::vector<int>>& m);

/// Distinct |d x d minors| of the incidence matrix by cofactor expansion.
std::set<BigInt> brute_maximal_minor_values(const Graph& g);

/// Some kernel vector with support strictly inside supp, searched in the box.
bool brute_smaller_support_exists(const Graph& g, const Binomial& b, int bound);

}  // namespace unimod::testing
