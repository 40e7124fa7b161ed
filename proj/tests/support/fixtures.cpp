#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace unimod::testing {

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::with_numeric_labels(n, edges);
}

Graph path_graph(std::size_t edges) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return Graph::with_numeric_labels(edges + 1, es);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::with_numeric_labels(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph::with_numeric_labels(a + b, edges);
}

Graph bowtie() { return Graph::with_numeric_labels(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph dumbbell() {
  return Graph::with_numeric_labels(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
}

Graph triangles_joined_by_path2() {
  return Graph::with_numeric_labels(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {6, 3}});
}

Graph two_triangles_two_paths() {
  return Graph::with_numeric_labels(
      8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {6, 3}, {0, 7}, {7, 3}});
}

Graph two_triangles() { return Graph::with_numeric_labels(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

namespace {

using Adj = std::vector<std::uint32_t>;  // bit j of adj[i]: edge i-j

// Vertices ordered by degree; canonical code is the lexicographically
// smallest upper-triangle bit string over orderings that keep degree classes.
std::vector<bool> canonical_code(const Adj& adj, std::size_t n, std::vector<std::size_t>* best_perm) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto deg = [&](std::size_t v) { return __builtin_popcount(adj[v]); };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return deg(a) < deg(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg(perm[j]) == deg(perm[i])) ++j;
    classes.emplace_back(i, j);
    std::sort(perm.begin() + i, perm.begin() + j);
    i = j;
  }
  std::vector<bool> best;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      std::vector<bool> code;
      code.reserve(n * (n - 1) / 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) code.push_back((adj[perm[i]] >> perm[j]) & 1U);
      }
      if (!have || code < best) {
        best = std::move(code);
        have = true;
        if (best_perm) *best_perm = perm;
      }
      return;
    }
    auto [lo, hi] = classes[c];
    do {
      rec(c + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);
  return best;
}

Graph from_adj(const Adj& adj, std::size_t n) {
  std::vector<std::size_t> perm;
  canonical_code(adj, n, &perm);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((adj[perm[i]] >> perm[j]) & 1U) edges.push_back({i, j});
    }
  }
  return Graph::with_numeric_labels(n, edges);
}

}  // namespace

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Adj> level{Adj{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<std::vector<bool>> seen;
    std::vector<Adj> next;
    for (const Adj& base : level) {
      for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
        Adj adj = base;
        adj.resize(k, 0);
        adj[k - 1] = mask;
        for (std::size_t j = 0; j + 1 < k; ++j) {
          if ((mask >> j) & 1U) adj[j] |= 1U << (k - 1);
        }
        if (seen.insert(canonical_code(adj, k, nullptr)).second) next.push_back(adj);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  if (n == 0) return out;
  for (const Adj& adj : level) out.push_back(from_adj(adj, n));
  return out;
}

std::vector<bool> canonical_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Adj adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  auto code = canonical_code(adj, n, nullptr);
  code.insert(code.begin(), n, true);
  return code;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          ++count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    if (count == n) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(std::uint64_t seed, std::size_t n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::with_numeric_labels(n, edges);
}

Graph random_bipartite(std::uint64_t seed, std::size_t a, std::size_t b, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> all;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) all.push_back({i, a + j});
  }
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, std::min(max_edges, all.size()))(rng);
  all.resize(m);
  std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  return Graph::with_numeric_labels(a + b, all);
}

Graph delete_edge(const Graph& g, EdgeId drop) {
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != drop) edges.push_back(g.edge(e));
  }
  return Graph::from_indices(std::vector<std::string>(g.labels().begin(), g.labels().end()), edges);
}

}  // namespace unimod::testing
