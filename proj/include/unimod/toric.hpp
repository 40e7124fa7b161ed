#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod {

enum class BasisKind { Circuits, Graver };

struct BasisSet {
  BasisKind kind = BasisKind::Circuits;
  std::vector<Binomial> elements;       // sign-normalized, sorted by canonical_less
  std::optional<std::size_t> degree_cap;
  bool complete = true;
};

struct BasisCaps {
  std::size_t max_subgraph_edges = 20;
  std::size_t max_elements = 100'000;
  std::uint64_t max_candidates = 50'000'000;  // edge subsets / paths examined
};

/// Circuits of I_G from even cycles, pairs of odd cycles meeting in one
/// vertex, and vertex-disjoint odd cycle pairs joined by a path.
BasisSet enumerate_circuits(const Graph& g, const BasisCaps& caps = {});

/// Graver basis of I_G from the connected subgraphs that support a
/// primitive walk: even cycles, or non-biconnected subgraphs whose blocks are
/// cycles or cut edges, each cut vertex in exactly two blocks and splitting
/// the cycle edges into two odd parts.
BasisSet enumerate_graver(const Graph& g, const BasisCaps& caps = {});

struct OracleOptions {
  bool bound_certified = false;          // caller vouches coord_bound covers every Graver element
  double search_limit = 1e9;             // max (2*bound+1)^m
};

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every u in ker(A_G) with |u_i| <= coord_bound, filtered to the
/// conformally minimal ones. `complete` only when options.bound_certified.
BasisSet kernel_oracle_graver(const Graph& g, int coord_bound, const OracleOptions& options = {});
/// Single-threaded reference for kernel_oracle_graver.
BasisSet kernel_oracle_graver_serial(const Graph& g, int coord_bound, const OracleOptions& options = {});

enum class BasesVerdict { Unimodular, NotUnimodular, Indeterminate };

/// Circuits equal the Graver basis and every element is square-free.
BasesVerdict unimodularity_via_bases(const Graph& g, const BasisCaps& caps = {});

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimal support and coprime exponents. Throws NotHomogeneous when b is not
/// in the kernel.
bool is_circuit(const Graph& g, const Binomial& b);

enum class CircuitForm { EvenCycle, OddCyclesSharingVertex, OddCyclesJoinedByPath };

/// Which circuit subgraph shape the edge set has, if any.
std::optional<CircuitForm> circuit_form(const Graph& g, std::span<const EdgeId> edges);

/// Whether the edge set is the subgraph of a primitive walk.
bool is_primitive_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Binomial of an Euler tour of the subgraph with its cut edges doubled.
Binomial primitive_walk_binomial(const Graph& g, std::span<const EdgeId> edges);

}  // namespace unimod
