#include "unimod/construct.hpp"

#include <algorithm>
#include <random>
#include <variant>

#include "unimod/decompose.hpp"
#include "unimod/soc.hpp"

namespace unimod {

const char* ear_case_name(EarCase c) {
  switch (c) {
    case EarCase::Alpha: return "alpha";
    case EarCase::Beta: return "beta";
    case EarCase::Gamma: return "gamma";
    case EarCase::Bipartite: return "bipartite";
  }
  return "?";
}

std::optional<EarCase> parse_ear_case(std::string_view name) {
  for (EarCase c : {EarCase::Alpha, EarCase::Beta, EarCase::Gamma, EarCase::Bipartite}) {
    if (name == ear_case_name(c)) return c;
  }
  return std::nullopt;
}

Graph flower_graph(std::span<const std::size_t> odd_lengths) {
  if (odd_lengths.size() < 2) throw ConstructionError("a flower needs at least two petals");
  std::size_t n = 1;
  std::vector<Edge> edges;
  for (std::size_t len : odd_lengths) {
    if (len < 3 || len % 2 == 0) {
      throw ConstructionError("petal length " + std::to_string(len) + " is not an odd number >= 3");
    }
    VertexId prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.push_back({prev, n});
      prev = n++;
    }
    edges.push_back({prev, 0});
  }
  return Graph::with_numeric_labels(n, std::move(edges));
}

Graph even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0) {
    throw ConstructionError("base cycle length " + std::to_string(length) + " is not an even number >= 4");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length});
  return Graph::with_numeric_labels(length, std::move(edges));
}

namespace {

std::string fresh_label(const Graph& g, std::size_t& next) {
  while (g.find(std::to_string(next))) ++next;
  return std::to_string(next++);
}

VertexId resolve(const Graph& g, std::string_view label) {
  auto v = g.find(label);
  if (!v) throw ConstructionError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool share_block(const BlockDecomposition& bd, VertexId a, VertexId b) {
  for (const auto& vs : bd.block_vertices) {
    if (std::binary_search(vs.begin(), vs.end(), a) && std::binary_search(vs.begin(), vs.end(), b)) {
      return true;
    }
  }
  return false;
}

// Parity (0 even, 1 odd) of every v1-v2 path in a bipartite graph.
std::size_t reference_parity(const Graph& g, VertexId v1, VertexId v2, const VertexMask& removed,
                             const char* what) {
  auto result = bipartite_check(g, removed);
  const auto* coloring = std::get_if<TwoColoring>(&result);
  if (!coloring) throw ConstructionError(std::string(what) + " is not bipartite");
  return coloring->color[v1] == coloring->color[v2] ? 0 : 1;
}

bool connected_avoiding(const Graph& g, VertexId a, VertexId b, const VertexMask& removed) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == b) return true;
    for (const auto& inc : g.neighbors(v)) {
      const VertexId w = inc.neighbor;
      if (seen[w] || (!removed.empty() && removed[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

const char* parity_name(std::size_t p) { return p == 0 ? "even" : "odd"; }

}  // namespace

EarResult add_ear(const Graph& g, std::string_view v1_label, std::string_view v2_label,
                  std::size_t length, std::optional<std::string_view> link_vertex) {
  const VertexId v1 = resolve(g, v1_label);
  const VertexId v2 = resolve(g, v2_label);
  if (length == 0) throw ConstructionError("ear length must be positive");
  if (v1 == v2 && length < 3) throw ConstructionError("a closed ear needs length >= 3");
  if (length == 1 && g.adjacent(v1, v2)) {
    throw ConstructionError("ear of length 1 duplicates edge '" + std::string(v1_label) + "'-'" +
                            std::string(v2_label) + "'");
  }

  EarCase applied;
  if (link_vertex) {
    const VertexId x = resolve(g, *link_vertex);
    if (!is_link_vertex(g, x)) {
      throw ConstructionError("'" + std::string(*link_vertex) + "' is not a link vertex");
    }
    if (!share_block(block_decomposition(g), v1, v2)) {
      throw ConstructionError("ear ends '" + std::string(v1_label) + "' and '" + std::string(v2_label) +
                              "' lie in different blocks");
    }
    if (v1 == x || v2 == x) {
      applied = EarCase::Alpha;
    } else if (v1 == v2) {
      applied = EarCase::Beta;
      if (length % 2 != 0) throw ConstructionError("case beta requires an even ear length");
    } else {
      applied = EarCase::Gamma;
      VertexMask removed(g.vertex_count(), 0);
      removed[x] = 1;
      if (!connected_avoiding(g, v1, v2, removed)) {
        throw ConstructionError("ear ends are not joined outside the link vertex");
      }
      const std::size_t want = reference_parity(g, v1, v2, removed, "graph minus the link vertex");
      if (length % 2 != want) {
        throw ConstructionError(std::string("case gamma requires an ") + parity_name(want) + " ear length");
      }
    }
  } else {
    applied = EarCase::Bipartite;
    if (v1 == v2) {
      if (length % 2 != 0) throw ConstructionError("case bipartite requires an even closed ear");
      if (!is_bipartite(g)) throw ConstructionError("graph is not bipartite");
    } else {
      if (!connected_avoiding(g, v1, v2, {})) throw ConstructionError("ear ends lie in different components");
      const std::size_t want = reference_parity(g, v1, v2, {}, "graph");
      if (length % 2 != want) {
        throw ConstructionError(std::string("case bipartite requires an ") + parity_name(want) + " ear length");
      }
    }
  }

  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::size_t next = g.vertex_count();
  VertexId prev = v1;
  for (std::size_t i = 1; i < length; ++i) {
    const VertexId w = labels.size();
    labels.push_back(fresh_label(g, next));
    edges.push_back({prev, w});
    prev = w;
  }
  edges.push_back({prev, v2});
  return {Graph::from_indices(std::move(labels), std::move(edges)), applied};
}

namespace {

Graph build_base(const ConstructionBase& base) {
  if (base.kind == ConstructionBase::Kind::Flower) return flower_graph(base.lengths);
  if (base.lengths.size() != 1) throw ConstructionError("an even-cycle base takes exactly one length");
  return even_cycle(base.lengths.front());
}

}  // namespace

Graph run_script(const ConstructionScript& script) {
  Graph g = build_base(script.base);
  std::optional<std::string_view> link;
  if (script.base.kind == ConstructionBase::Kind::Flower) link = kCarpel;
  for (std::size_t i = 0; i < script.ears.size(); ++i) {
    const Ear& ear = script.ears[i];
    EarResult r;
    try {
      r = add_ear(g, ear.v1, ear.v2, ear.length, link);
    } catch (const ConstructionError& e) {
      throw ConstructionError("ear " + std::to_string(i) + ": " + e.what(), i);
    } catch (const GraphError& e) {
      throw ConstructionError("ear " + std::to_string(i) + ": " + e.what(), i);
    }
    if (r.applied != ear.tag) {
      throw ConstructionError("ear " + std::to_string(i) + ": recorded case " + ear_case_name(ear.tag) +
                                  " but case " + ear_case_name(r.applied) + " applies",
                              i);
    }
    g = std::move(r.graph);
  }
  return g;
}

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::optional<std::pair<VertexId, VertexId>> draw_ends(std::mt19937_64& rng, const Graph& g,
                                                       std::optional<VertexId> link, EarCase want) {
  const BlockDecomposition bd = block_decomposition(g);
  if (!link) {
    const VertexId a = uniform(rng, 0, g.vertex_count() - 1);
    const VertexId b = uniform(rng, 0, g.vertex_count() - 1);
    return std::pair{a, b};
  }
  const VertexId x = *link;
  std::vector<std::size_t> candidates;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    const auto& vs = bd.block_vertices[b];
    const bool has_x = std::binary_search(vs.begin(), vs.end(), x);
    if (want == EarCase::Alpha && !has_x) continue;
    if (want == EarCase::Gamma && vs.size() - (has_x ? 1 : 0) < 2) continue;
    candidates.push_back(b);
  }
  if (candidates.empty()) return std::nullopt;
  const auto& vs = bd.block_vertices[pick(rng, candidates)];
  std::vector<VertexId> others;
  for (VertexId v : vs) {
    if (v != x) others.push_back(v);
  }
  switch (want) {
    case EarCase::Alpha:
      return std::pair{x, pick(rng, vs)};
    case EarCase::Beta: {
      const VertexId v = pick(rng, others);
      return std::pair{v, v};
    }
    default: {
      const VertexId a = pick(rng, others);
      VertexId b = pick(rng, others);
      while (b == a) b = pick(rng, others);
      return std::pair{a, b};
    }
  }
}

}  // namespace

GeneratedGraph random_unimodular(std::uint64_t seed, const GeneratorParams& params) {
  std::mt19937_64 rng(seed);
  GeneratedGraph out;
  auto& base = out.script.base;
  if (params.bipartite_mode) {
    base.kind = ConstructionBase::Kind::EvenCycle;
    const std::size_t top = std::max<std::size_t>(4, params.max_cycle_length) / 2;
    base.lengths = {2 * uniform(rng, 2, top)};
  } else {
    base.kind = ConstructionBase::Kind::Flower;
    const std::size_t top = (std::max<std::size_t>(3, params.max_petal_length) - 1) / 2;
    for (std::size_t i = 0; i < std::max<std::size_t>(2, params.petals); ++i) {
      base.lengths.push_back(2 * uniform(rng, 1, top) + 1);
    }
  }
  Graph g = build_base(base);
  std::optional<VertexId> link;
  std::optional<std::string_view> link_label;
  if (!params.bipartite_mode) {
    link = g.index_of(kCarpel);
    link_label = kCarpel;
  }

  const std::size_t ears = params.max_ears == 0 ? 0 : uniform(rng, 0, params.max_ears);
  std::discrete_distribution<int> case_weights({0.4, 0.3, 0.3});
  const std::size_t max_len = std::max<std::size_t>(1, params.max_ear_length);
  for (std::size_t i = 0; i < ears; ++i) {
    for (std::size_t attempt = 0; attempt < params.retries; ++attempt) {
      EarCase want = EarCase::Bipartite;
      if (!params.bipartite_mode) want = static_cast<EarCase>(case_weights(rng));
      const auto ends = draw_ends(rng, g, link, want);
      const std::size_t length = uniform(rng, 1, max_len);
      if (!ends) continue;
      try {
        EarResult r = add_ear(g, g.label(ends->first), g.label(ends->second), length, link_label);
        out.script.ears.push_back({g.label(ends->first), g.label(ends->second), length, r.applied});
        g = std::move(r.graph);
        break;
      } catch (const ConstructionError&) {
      }
    }
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace unimod
