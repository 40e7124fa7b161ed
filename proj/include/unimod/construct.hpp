#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod {

enum class EarCase { Alpha, Beta, Gamma, Bipartite };

/// "alpha", "beta", "gamma", "bipartite".
const char* ear_case_name(EarCase c);
std::optional<EarCase> parse_ear_case(std::string_view name);

struct Ear {
  std::string v1;
  std::string v2;
  std::size_t length = 1;
  EarCase tag = EarCase::Alpha;

  friend bool operator==(const Ear&, const Ear&) = default;
};

struct ConstructionBase {
  enum class Kind { EvenCycle, Flower };
  Kind kind = Kind::EvenCycle;
  std::vector<std::size_t> lengths;  // one entry for an even cycle, the petals for a flower

  friend bool operator==(const ConstructionBase&, const ConstructionBase&) = default;
};

struct ConstructionScript {
  ConstructionBase base;
  std::vector<Ear> ears;

  friend bool operator==(const ConstructionScript&, const ConstructionScript&) = default;
};

class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what, std::optional<std::size_t> ear = std::nullopt)
      : std::invalid_argument(what), ear_index(ear) {}

  std::optional<std::size_t> ear_index;
};

/// Label of the shared vertex of flower_graph.
inline constexpr const char* kCarpel = "0";

/// Odd cycles of the given lengths glued at the carpel "0"; the other
/// vertices are labelled "1", "2", ... petal by petal.
Graph flower_graph(std::span<const std::size_t> odd_lengths);
/// Cycle "0"-"1"-...-"L-1"-"0".
Graph even_cycle(std::size_t length);

struct EarResult {
  Graph graph;
  EarCase applied;
};

/// Appends a path of `length` edges between v1 and v2 through fresh vertices.
/// With a link vertex the case is alpha (an end is the link vertex), beta
/// (v1 == v2, even length) or gamma (parity of a v1-v2 path avoiding the link
/// vertex), and the ends must share a block. Without one the graph must be
/// bipartite and the ear must match the parity of a v1-v2 path.
EarResult add_ear(const Graph& g, std::string_view v1, std::string_view v2, std::size_t length,
                  std::optional<std::string_view> link_vertex = std::nullopt);

/// Builds the base and applies every ear, checking each recorded case tag.
Graph run_script(const ConstructionScript& script);

struct GeneratorParams {
  std::size_t petals = 2;
  std::size_t max_ears = 3;
  std::size_t max_ear_length = 4;
  std::size_t max_petal_length = 3;
  std::size_t max_cycle_length = 6;  // bipartite base
  bool bipartite_mode = false;
  std::size_t retries = 64;          // draws per ear before giving up on it
};

struct GeneratedGraph {
  Graph graph;
  ConstructionScript script;
};

/// Seeded random flower (or even cycle) plus up to max_ears valid ears.
GeneratedGraph random_unimodular(std::uint64_t seed, const GeneratorParams& params = {});

}  // namespace unimod
