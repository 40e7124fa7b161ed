#include "unimod/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stack>

namespace unimod {

std::vector<std::size_t> component_ids(const Graph& g) {
  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> comp(g.vertex_count(), kUnset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(v)) {
        if (comp[inc.neighbor] == kUnset) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<Subgraph> component_subgraphs(const Graph& g) {
  const auto comp = component_ids(g);
  const std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);
  std::vector<Subgraph> out;
  out.reserve(count);
  for (const auto& vs : members) out.push_back(induced_subgraph(g, vs));
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (auto& sub : component_subgraphs(g)) out.push_back(std::move(sub.graph));
  return out;
}

std::size_t BlockDecomposition::non_bipartite_count() const {
  return static_cast<std::size_t>(std::count(block_bipartite.begin(), block_bipartite.end(), false));
}

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = SIZE_MAX;
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<EdgeId> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;  // position in neighbor list
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, SIZE_MAX, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const Incidence inc = adj[f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (disc[inc.neighbor] == kUnvisited) {
          edge_stack.push_back(inc.edge);
          disc[inc.neighbor] = low[inc.neighbor] = timer++;
          frames.push_back({inc.neighbor, inc.edge, 0});
        } else if (disc[inc.neighbor] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[inc.neighbor]);
        }
        continue;
      }
      const VertexId child = f.v;
      const EdgeId tree_edge = f.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockDecomposition out;
  std::vector<std::size_t> membership(n, 0);
  for (const auto& block : blocks) {
    std::vector<VertexId> vs;
    for (EdgeId e : block) {
      vs.push_back(g.edge(e).u);
      vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) ++membership[v];
    const Subgraph sub = edge_subgraph(g, block);
    out.block_bipartite.push_back(is_bipartite(sub.graph));
    out.block_vertices.push_back(std::move(vs));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (membership[v] >= 2) out.cut_vertices.push_back(v);
  }
  out.blocks = std::move(blocks);
  return out;
}

std::vector<VertexId> CycleWitness::cycle_vertices() const {
  const auto vs = walk.vertices();
  return {vs.begin(), vs.end() - 1};
}

CycleWitness CycleWitness::from_vertices(const Graph& g, std::vector<VertexId> cycle) {
  const bool odd = cycle.size() % 2 == 1;
  cycle.push_back(cycle.front());
  return {Walk::from_vertices(g, std::move(cycle)), odd};
}

namespace {

// Path from v up the BFS tree to (and including) the root of its tree.
std::vector<VertexId> tree_path(const std::vector<VertexId>& parent, VertexId v) {
  std::vector<VertexId> path{v};
  while (parent[v] != v) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

}  // namespace

BipartiteResult bipartite_check(const Graph& g, const VertexMask& removed) {
  const std::size_t n = g.vertex_count();
  TwoColoring coloring{std::vector<int>(n, -1)};
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (coloring.color[root] != -1 || (!removed.empty() && removed[root])) continue;
    coloring.color[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (const auto& inc : g.neighbors(v)) {
        const VertexId w = inc.neighbor;
        if (!removed.empty() && removed[w]) continue;
        if (coloring.color[w] == -1) {
          coloring.color[w] = 1 - coloring.color[v];
          parent[w] = v;
          queue.push(w);
        } else if (coloring.color[w] == coloring.color[v]) {
          // Same color means same BFS depth; the two tree paths meet at
          // their lowest common ancestor and close an odd cycle with vw.
          auto pv = tree_path(parent, v);
          auto pw = tree_path(parent, w);
          while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          // pv and pw now end at the common ancestor.
          std::vector<VertexId> cycle(pv.rbegin(), pv.rend());  // lca .. v
          for (std::size_t i = 0; i + 1 < pw.size(); ++i) cycle.push_back(pw[i]);  // w .. child of lca
          // Orient as lca -> ... -> v -> w -> ... and close.
          return CycleWitness::from_vertices(g, std::move(cycle));
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!removed.empty() && removed[v]) coloring.color[v] = -1;
  }
  return coloring;
}

BipartiteResult bipartite_check(const Graph& g) { return bipartite_check(g, VertexMask{}); }

bool is_bipartite(const Graph& g) { return std::holds_alternative<TwoColoring>(bipartite_check(g)); }

bool is_bipartite(const Graph& g, const VertexMask& removed) {
  return std::holds_alternative<TwoColoring>(bipartite_check(g, removed));
}

bool is_chordless(const Graph& g, const CycleWitness& c) {
  const auto vs = c.cycle_vertices();
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace unimod
