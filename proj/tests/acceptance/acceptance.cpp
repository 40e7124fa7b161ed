// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "unimod/construct.hpp"
#include "unimod/decompose.hpp"
#include "unimod/linalg.hpp"
#include "unimod/soc.hpp"
#include "unimod/toric.hpp"

using namespace unimod;
using namespace unimod::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

bool vertex_disjoint(const CycleWitness& a, const CycleWitness& b) {
  auto x = a.cycle_vertices();
  auto y = b.cycle_vertices();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<VertexId> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  return common.empty();
}

Outcome exhaustive_oracle_equivalence() {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      ++count;
      const bool structural = decide_unimodular(g).unimodular();
      const bool minors = is_unimodular_matrix(IncidenceMatrix(g));
      if (structural != minors) return fail("disagreement on a graph with " + std::to_string(g.edge_count()) + " edges");
    }
  }
  return {true, std::to_string(count) + " graphs"};
}

Outcome complete_graph_sweep() {
  for (std::size_t n = 3; n <= 8; ++n) {
    if (decide_unimodular(complete_graph(n)).unimodular() != (n <= 5)) return fail("K" + std::to_string(n));
  }
  return {true, "K3..K8"};
}

Outcome bipartite_totally_unimodular() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_bipartite(seed, 2 + seed % 4, 2 + (seed / 4) % 5, 12);
    const IncidenceMatrix a(g);
    if (!is_totally_unimodular_bruteforce(a, std::min(a.rows(), a.cols()))) return fail("TU fails, seed " + std::to_string(seed));
    if (!decide_unimodular(g).unimodular()) return fail("decide fails, seed " + std::to_string(seed));
  }
  return {true, "200 graphs"};
}

Outcome basis_sandwich() {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (g.edge_count() > 9) continue;
      ++count;
      const BasisSet c = enumerate_circuits(g);
      const BasisSet gr = enumerate_graver(g);
      if (!c.complete || !gr.complete) return fail("incomplete enumeration");
      for (const auto& b : c.elements) {
        if (!std::binary_search(gr.elements.begin(), gr.elements.end(), b, canonical_less)) {
          return fail("circuit outside Graver set: " + to_string(b));
        }
      }
      const bool sq = std::all_of(gr.elements.begin(), gr.elements.end(), [](const Binomial& b) { return is_square_free(b); });
      const bool equal_and_sq = c.elements == gr.elements && sq;
      if (equal_and_sq != decide_unimodular(g).unimodular()) return fail("equivalence fails");
    }
  }
  return {true, std::to_string(count) + " graphs"};
}

Outcome kernel_oracle_agreement() {
  const std::vector<std::size_t> petals{3, 5};
  const std::vector<std::pair<const char*, Graph>> fixtures{
      {"C4", cycle_graph(4)},      {"K4", complete_graph(4)}, {"bowtie", bowtie()},
      {"dumbbell", dumbbell()},    {"two paths", two_triangles_two_paths()},
      {"flower", flower_graph(petals)}};
  for (const auto& [name, g] : fixtures) {
    if (enumerate_graver(g).elements != kernel_oracle_graver(g, 2).elements) return fail(name);
  }
  return {true, "6 fixtures"};
}

Outcome hereditarity() {
  std::size_t deletions = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_unimodular(seed).graph;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      ++deletions;
      if (!decide_unimodular(delete_edge(g, e)).unimodular()) return fail("seed " + std::to_string(seed));
    }
  }
  return {true, std::to_string(deletions) + " deletions"};
}

Outcome generator_soundness() {
  std::size_t small = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Graph g = random_unimodular(seed).graph;
    if (!decide_unimodular(g).unimodular()) return fail("seed " + std::to_string(seed));
    if (g.edge_count() <= 12) {
      ++small;
      if (!is_unimodular_matrix(IncidenceMatrix(g))) return fail("minor oracle, seed " + std::to_string(seed));
    }
  }
  if (small < 100) return fail("only " + std::to_string(small) + " graphs with at most 12 edges");
  return {true, std::to_string(small) + " checked by minors"};
}

Outcome witness_validation() {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; found < 100; ++seed) {
    if (seed > 100000) return fail("too few non-unimodular samples");
    const Graph g = random_graph(seed, 7 + seed % 5, 0.4);
    const Certificate cert = decide_unimodular(g);
    if (cert.verdict != Verdict::NotUnimodular) continue;
    ++found;
    if (!cert.witness || !cert.witness_binomial) return fail("missing witness");
    const auto& c1 = cert.witness->first;
    const auto& c2 = cert.witness->second;
    if (!c1.odd || !c2.odd || c1.length() % 2 == 0 || c2.length() % 2 == 0) return fail("even witness cycle");
    if (!vertex_disjoint(c1, c2)) return fail("witness cycles meet");
    if (!is_homogeneous(g, *cert.witness_binomial)) return fail("binomial outside the kernel");
    if (is_square_free(*cert.witness_binomial)) return fail("binomial is square-free");
  }
  return {true, "100 graphs"};
}

Outcome negative_example() {
  const Graph g = dumbbell();
  const BasisSet gr = enumerate_graver(g);
  if (!gr.complete || gr.elements.size() != 1) return fail("Graver size " + std::to_string(gr.elements.size()));
  if (to_string(gr.elements[0]) != "e1*e3*e4*e6 - e2*e5*e7^2") return fail(to_string(gr.elements[0]));
  const auto values = minor_scan(IncidenceMatrix(g)).distinct_abs_values;
  if (values.size() < 2) return fail("single minor value");
  return {true, "1 element, " + std::to_string(values.size()) + " minor values"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exhaustive decide vs minor oracle", exhaustive_oracle_equivalence},
      {"complete graph sweep", complete_graph_sweep},
      {"bipartite graphs are totally unimodular", bipartite_totally_unimodular},
      {"circuits within Graver, equality iff unimodular", basis_sandwich},
      {"Graver listing matches kernel search", kernel_oracle_agreement},
      {"edge deletion keeps unimodularity", hereditarity},
      {"generated graphs are unimodular", generator_soundness},
      {"witnesses validate", witness_validation},
      {"dumbbell structure", negative_example},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%s; %.1fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
