#include "unimod/soc.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <variant>

namespace unimod {

namespace {

VertexMask mask_of(std::size_t n, std::span<const VertexId> vertices) {
  VertexMask mask(n, 0);
  for (VertexId v : vertices) mask[v] = 1;
  return mask;
}

CycleWitness lift(const Graph& g, const Subgraph& sub, const CycleWitness& local) {
  std::vector<VertexId> cycle;
  for (VertexId v : local.cycle_vertices()) cycle.push_back(sub.vertex_map[v]);
  return CycleWitness::from_vertices(g, std::move(cycle));
}

std::optional<CycleWitness> odd_cycle_in(const Graph& g, const Subgraph& sub,
                                         std::optional<VertexId> excluded_original) {
  VertexMask mask;
  if (excluded_original) {
    mask.assign(sub.graph.vertex_count(), 0);
    for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) {
      if (sub.vertex_map[i] == *excluded_original) mask[i] = 1;
    }
  }
  auto result = bipartite_check(sub.graph, mask);
  if (auto* cycle = std::get_if<CycleWitness>(&result)) return lift(g, sub, *cycle);
  return std::nullopt;
}

// Rotates the cycle so it starts (and ends) at `start`.
std::vector<VertexId> closed_from(const CycleWitness& c, VertexId start) {
  auto vs = c.cycle_vertices();
  auto it = std::find(vs.begin(), vs.end(), start);
  std::rotate(vs.begin(), it, vs.end());
  vs.push_back(start);
  return vs;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::UnimodularBipartite: return "UNIMODULAR_BIPARTITE";
    case Verdict::UnimodularSingleBlockSoc: return "UNIMODULAR_SINGLE_BLOCK_SOC";
    case Verdict::UnimodularLinkVertex: return "UNIMODULAR_LINK_VERTEX";
    case Verdict::NotUnimodular: return "NOT_UNIMODULAR";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

SocResult has_strong_odd_cycle_property(const Graph& g, std::size_t cap) {
  const CycleEnumeration candidates = enumerate_induced_odd_cycles(g, cap);
  const auto count = static_cast<std::ptrdiff_t>(candidates.cycles.size());
  std::atomic<std::ptrdiff_t> first_failure{count};

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (i > first_failure.load(std::memory_order_relaxed)) continue;
    const auto vs = candidates.cycles[i].cycle_vertices();
    if (!is_bipartite(g, mask_of(g.vertex_count(), vs))) {
      std::ptrdiff_t cur = first_failure.load();
      while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
      }
    }
  }

  SocResult out;
  const std::ptrdiff_t hit = first_failure.load();
  out.cycles_examined = static_cast<std::size_t>(std::min(hit + 1, count));
  if (hit < count) {
    const CycleWitness& c = candidates.cycles[hit];
    const auto vs = c.cycle_vertices();
    auto rest = bipartite_check(g, mask_of(g.vertex_count(), vs));
    out.status = SocStatus::Fails;
    out.witness = DisjointOddCycles{c, std::get<CycleWitness>(rest)};
  } else if (candidates.truncated) {
    out.status = SocStatus::Indeterminate;
  }
  return out;
}

bool is_link_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw GraphError("unknown vertex index " + std::to_string(v));
  VertexMask mask(g.vertex_count(), 0);
  mask[v] = 1;
  return is_bipartite(g, mask);
}

std::optional<VertexId> find_link_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (is_link_vertex(g, v)) return v;
  }
  return std::nullopt;
}

CircuitWitness circuit_witness(const Graph& g, const CycleWitness& c1, const CycleWitness& c2) {
  const auto v1 = c1.cycle_vertices();
  const auto v2 = c2.cycle_vertices();
  const VertexMask in1 = mask_of(g.vertex_count(), v1);
  const VertexMask in2 = mask_of(g.vertex_count(), v2);
  for (VertexId v : v2) {
    if (in1[v]) throw std::invalid_argument("cycles are not vertex-disjoint");
  }

  constexpr VertexId kNone = SIZE_MAX;
  std::vector<VertexId> parent(g.vertex_count(), kNone);
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::queue<VertexId> queue;
  std::vector<VertexId> sources(v1.begin(), v1.end());
  std::sort(sources.begin(), sources.end());
  for (VertexId v : sources) {
    seen[v] = 1;
    queue.push(v);
  }
  VertexId target = kNone;
  while (!queue.empty() && target == kNone) {
    const VertexId v = queue.front();
    queue.pop();
    for (const auto& inc : g.neighbors(v)) {
      const VertexId w = inc.neighbor;
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (in2[w]) {
        target = w;
        break;
      }
      queue.push(w);
    }
  }
  if (target == kNone) throw std::invalid_argument("no path connects the two cycles");

  std::vector<VertexId> path{target};
  while (parent[path.back()] != kNone) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());

  std::vector<VertexId> seq = closed_from(c1, path.front());
  seq.insert(seq.end(), path.begin() + 1, path.end());
  const auto around2 = closed_from(c2, path.back());
  seq.insert(seq.end(), around2.begin() + 1, around2.end());
  seq.insert(seq.end(), path.rbegin() + 1, path.rend());

  CircuitWitness out;
  out.path = Walk::from_vertices(g, std::move(path));
  out.walk = Walk::from_vertices(g, std::move(seq));
  out.binomial = walk_binomial(out.walk);
  return out;
}

Binomial non_square_free_circuit_witness(const Graph& g, const CycleWitness& c1,
                                         const CycleWitness& c2) {
  if (!c1.odd || !c2.odd) throw std::invalid_argument("witness cycles must be odd");
  return circuit_witness(g, c1, c2).binomial;
}

namespace {

Certificate refute(const Graph& g, CycleWitness c1, CycleWitness c2, std::size_t s) {
  Certificate cert;
  cert.verdict = Verdict::NotUnimodular;
  cert.s = s;
  CircuitWitness cw = circuit_witness(g, c1, c2);
  cert.witness = DisjointPairWitness{std::move(c1), std::move(c2), std::move(cw.path)};
  cert.witness_binomial = std::move(cw.binomial);
  return cert;
}

// Two non-bipartite blocks share at most one (cut) vertex. With no link
// vertex, some pair is either vertex-disjoint or has a block that stays
// non-bipartite without the shared vertex.
std::optional<DisjointOddCycles> disjoint_pair_across_blocks(const Graph& g,
                                                             const BlockDecomposition& bd,
                                                             std::span<const std::size_t> nb) {
  std::vector<Subgraph> subs;
  for (std::size_t b : nb) subs.push_back(edge_subgraph(g, bd.blocks[b]));
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(bd.block_vertices[nb[i]].begin(), bd.block_vertices[nb[i]].end(),
                            bd.block_vertices[nb[j]].begin(), bd.block_vertices[nb[j]].end(),
                            std::back_inserter(shared));
      if (shared.empty()) {
        return DisjointOddCycles{*odd_cycle_in(g, subs[i], std::nullopt),
                                 *odd_cycle_in(g, subs[j], std::nullopt)};
      }
      const VertexId x = shared.front();
      if (auto c = odd_cycle_in(g, subs[i], x)) {
        return DisjointOddCycles{*c, *odd_cycle_in(g, subs[j], std::nullopt)};
      }
      if (auto c = odd_cycle_in(g, subs[j], x)) {
        return DisjointOddCycles{*odd_cycle_in(g, subs[i], std::nullopt), *c};
      }
    }
  }
  return std::nullopt;
}

Certificate decide_component(const Graph& g, const Subgraph& comp, const BlockDecomposition& bd,
                             std::span<const std::size_t> nb, const DecideOptions& options) {
  Certificate cert;
  cert.s = nb.size();
  if (nb.empty()) {
    cert.verdict = Verdict::UnimodularBipartite;
    return cert;
  }
  if (nb.size() == 1) {
    const Subgraph block = edge_subgraph(g, bd.blocks[nb.front()]);
    const SocResult soc = has_strong_odd_cycle_property(block.graph, options.cycle_cap);
    switch (soc.status) {
      case SocStatus::Holds:
        cert.verdict = Verdict::UnimodularSingleBlockSoc;
        cert.soc_block = nb.front();
        return cert;
      case SocStatus::Indeterminate:
        cert.verdict = Verdict::Indeterminate;
        cert.indeterminate_reason = "induced odd cycle enumeration exceeded cap of " +
                                    std::to_string(options.cycle_cap);
        return cert;
      case SocStatus::Fails:
        return refute(g, lift(g, block, soc.witness->first), lift(g, block, soc.witness->second),
                      cert.s);
    }
  }
  if (auto link = find_link_vertex(comp.graph)) {
    cert.verdict = Verdict::UnimodularLinkVertex;
    cert.link_vertex = comp.vertex_map[*link];
    return cert;
  }
  auto pair = disjoint_pair_across_blocks(g, bd, nb);
  if (!pair) throw std::logic_error("no link vertex but no disjoint odd cycle pair found");
  return refute(g, std::move(pair->first), std::move(pair->second), cert.s);
}

}  // namespace

Certificate decide_unimodular(const Graph& g, const DecideOptions& options) {
  const BlockDecomposition bd = block_decomposition(g);
  const auto comp_of = component_ids(g);
  const auto comps = component_subgraphs(g);
  std::vector<std::vector<std::size_t>> non_bipartite(comps.size());
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (!bd.block_bipartite[b]) non_bipartite[comp_of[g.edge(bd.blocks[b].front()).u]].push_back(b);
  }

  Certificate top;
  std::size_t total_s = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Certificate part = decide_component(g, comps[c], bd, non_bipartite[c], options);
    part.component = c;
    total_s += part.s;
    top.components.push_back(std::move(part));
  }

  const Certificate* chosen = nullptr;
  for (Verdict wanted : {Verdict::NotUnimodular, Verdict::Indeterminate}) {
    for (const auto& part : top.components) {
      if (!chosen && part.verdict == wanted) chosen = &part;
    }
  }
  for (const auto& part : top.components) {
    if (!chosen && part.verdict != Verdict::UnimodularBipartite) chosen = &part;
  }
  if (chosen) {
    auto components = std::move(top.components);
    top = *chosen;
    top.components = std::move(components);
  }
  top.s = total_s;
  return top;
}

std::vector<std::string> validate_certificate(const Graph& g, const Certificate& cert) {
  std::vector<std::string> problems;
  const BlockDecomposition bd = block_decomposition(g);
  const auto comp_of = component_ids(g);
  const auto comps = component_subgraphs(g);

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  auto check_one = [&](const Certificate& c, const std::string& where) {
    if (c.verdict == Verdict::UnimodularBipartite) check(c.s == 0, where + ": bipartite verdict with s != 0");
    if (c.verdict == Verdict::UnimodularSingleBlockSoc) {
      check(c.s == 1, where + ": single-block verdict needs s == 1");
      check(c.soc_block && *c.soc_block < bd.blocks.size() && !bd.block_bipartite[*c.soc_block],
            where + ": socBlock must name a non-bipartite block");
    }
    if (c.verdict == Verdict::UnimodularLinkVertex) {
      check(c.s >= 2, where + ": link-vertex verdict needs s >= 2");
      if (!c.link_vertex || *c.link_vertex >= g.vertex_count()) {
        check(false, where + ": link vertex missing");
      } else {
        const Subgraph& comp = comps[comp_of[*c.link_vertex]];
        const auto local = std::find(comp.vertex_map.begin(), comp.vertex_map.end(), *c.link_vertex) -
                           comp.vertex_map.begin();
        check(is_link_vertex(comp.graph, static_cast<VertexId>(local)),
              where + ": deleting the link vertex leaves a non-bipartite component");
      }
    }
    if (c.verdict == Verdict::NotUnimodular) {
      if (!c.witness || !c.witness_binomial) {
        check(false, where + ": refutation without witness");
        return;
      }
      const auto& w = *c.witness;
      check(w.first.odd && w.first.length() % 2 == 1, where + ": first witness cycle not odd");
      check(w.second.odd && w.second.length() % 2 == 1, where + ": second witness cycle not odd");
      const auto a = w.first.cycle_vertices();
      const auto b = w.second.cycle_vertices();
      const VertexMask in_a = mask_of(g.vertex_count(), a);
      check(std::none_of(b.begin(), b.end(), [&](VertexId v) { return in_a[v]; }),
            where + ": witness cycles intersect");
      try {
        Walk::from_vertices(g, {w.first.walk.vertices().begin(), w.first.walk.vertices().end()});
        Walk::from_vertices(g, {w.second.walk.vertices().begin(), w.second.walk.vertices().end()});
        Walk::from_vertices(g, {w.path.vertices().begin(), w.path.vertices().end()});
      } catch (const WalkError& e) {
        check(false, where + ": witness walk invalid: " + e.what());
      }
      check(w.first.walk.closed() && w.second.walk.closed(), where + ": witness cycle not closed");
      check(w.path.length() >= 1 && in_a[w.path.vertices().front()] &&
                std::find(b.begin(), b.end(), w.path.vertices().back()) != b.end(),
            where + ": witness path does not join the cycles");
      check(is_homogeneous(g, *c.witness_binomial), where + ": witness binomial not in the kernel");
      check(!is_square_free(*c.witness_binomial), where + ": witness binomial is square-free");
    }
  };

  for (const auto& part : cert.components) {
    const std::string where = "component " + std::to_string(part.component.value_or(0));
    check_one(part, where);
    if (part.component && *part.component < comps.size()) {
      std::size_t s = 0;
      for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (!bd.block_bipartite[b] && comp_of[g.edge(bd.blocks[b].front()).u] == *part.component) ++s;
      }
      check(s == part.s, where + ": s does not match the block decomposition");
    }
  }
  check(cert.s == bd.non_bipartite_count(), "top level: s does not match the block decomposition");
  check(cert.components.size() == comps.size(), "top level: one certificate per component expected");
  const bool all_unimodular = std::all_of(cert.components.begin(), cert.components.end(),
                                          [](const Certificate& c) { return c.unimodular(); });
  check(cert.unimodular() == all_unimodular, "top level: verdict disagrees with the components");
  if (cert.components.size() == 1) check_one(cert, "top level");
  return problems;
}

}  // namespace unimod
