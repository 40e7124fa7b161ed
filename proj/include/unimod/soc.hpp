#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unimod/decompose.hpp"
#include "unimod/graph.hpp"

namespace unimod {

struct DisjointOddCycles {
  CycleWitness first;
  CycleWitness second;
};

enum class SocStatus { Holds, Fails, Indeterminate };

struct SocResult {
  SocStatus status = SocStatus::Holds;
  std::optional<DisjointOddCycles> witness;  // set iff status == Fails
  std::size_t cycles_examined = 0;
};

/// Strong odd cycle property: no two vertex-disjoint odd cycles. Each
/// chordless odd cycle C is tested by two-coloring g - V(C); two disjoint odd
/// cycles exist iff some chordless one leaves a non-bipartite remainder.
/// Returns Indeterminate when the enumeration cap truncates the candidates
/// and no witness was found among those enumerated.
SocResult has_strong_odd_cycle_property(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// g - v is bipartite. Throws GraphError for an out-of-range vertex.
bool is_link_vertex(const Graph& g, VertexId v);
std::optional<VertexId> find_link_vertex(const Graph& g);

enum class Verdict {
  UnimodularBipartite,
  UnimodularSingleBlockSoc,
  UnimodularLinkVertex,
  NotUnimodular,
  Indeterminate,
};

const char* verdict_name(Verdict v);

/// Two disjoint odd cycles with a shortest path from the first to the second.
struct DisjointPairWitness {
  CycleWitness first;
  CycleWitness second;
  Walk path;
};

struct Certificate {
  Verdict verdict = Verdict::UnimodularBipartite;
  std::size_t s = 0;                       // non-bipartite blocks
  std::optional<VertexId> link_vertex;
  std::optional<std::size_t> soc_block;    // index into block_decomposition(g).blocks
  std::optional<DisjointPairWitness> witness;
  std::optional<Binomial> witness_binomial;
  std::optional<std::string> indeterminate_reason;
  std::optional<std::size_t> component;    // set on per-component certificates
  std::vector<Certificate> components;     // top level only

  bool unimodular() const {
    return verdict == Verdict::UnimodularBipartite || verdict == Verdict::UnimodularSingleBlockSoc ||
           verdict == Verdict::UnimodularLinkVertex;
  }
};

struct DecideOptions {
  std::size_t cycle_cap = kDefaultCycleCap;
};

/// Classifies each connected component as bipartite blocks only, a single
/// non-bipartite block with the strong odd cycle property, or several
/// non-bipartite blocks sharing a link vertex; anything else is refuted with
/// two disjoint odd cycles and a non-square-free circuit.
Certificate decide_unimodular(const Graph& g, const DecideOptions& options = {});

struct CircuitWitness {
  Walk path;      // from a vertex of c1 to a vertex of c2
  Walk walk;      // (c1, p, c2, -p)
  Binomial binomial;
};

/// Shortest connecting path (BFS from all of V(c1), smallest index first)
/// and the binomial of the walk around c1, along p, around c2, back along p.
CircuitWitness circuit_witness(const Graph& g, const CycleWitness& c1, const CycleWitness& c2);
Binomial non_square_free_circuit_witness(const Graph& g, const CycleWitness& c1,
                                         const CycleWitness& c2);

/// Checks every certificate invariant against g; returns the violations.
std::vector<std::string> validate_certificate(const Graph& g, const Certificate& cert);

}  // namespace unimod
