#include <algorithm>
#include <atomic>
#include <functional>

#include "detail/shape.hpp"
#include "unimod/toric.hpp"

namespace unimod {

namespace detail {

SubgraphShape analyze_shape(const Graph& g, std::span<const EdgeId> edges) {
  SubgraphShape shape;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  shape.sub = edge_subgraph(g, sorted);
  const Graph& w = shape.sub.graph;
  const auto comp = component_ids(w);
  shape.connected = !comp.empty() && std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
  shape.blocks = block_decomposition(w);
  shape.cut_vertex_blocks.assign(w.vertex_count(), 0);
  for (std::size_t b = 0; b < shape.blocks.blocks.size(); ++b) {
    const auto& be = shape.blocks.blocks[b];
    const auto& bv = shape.blocks.block_vertices[b];
    shape.is_cut_edge.push_back(be.size() == 1);
    bool cycle = be.size() >= 3 && be.size() == bv.size();
    shape.is_cycle.push_back(cycle);
    for (VertexId v : bv) ++shape.cut_vertex_blocks[v];
  }
  return shape;
}

std::vector<std::vector<std::size_t>> block_tree(const SubgraphShape& shape) {
  const std::size_t nb = shape.blocks.blocks.size();
  std::vector<std::vector<std::size_t>> at_vertex(shape.sub.graph.vertex_count());
  for (std::size_t b = 0; b < nb; ++b) {
    for (VertexId v : shape.blocks.block_vertices[b]) at_vertex[v].push_back(b);
  }
  std::vector<std::vector<std::size_t>> tree(nb);
  for (const auto& bs : at_vertex) {
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        tree[bs[i]].push_back(bs[j]);
        tree[bs[j]].push_back(bs[i]);
      }
    }
  }
  return tree;
}

}  // namespace detail

namespace {

bool primitive_shape(const detail::SubgraphShape& shape) {
  if (!shape.connected || shape.sub.graph.edge_count() == 0) return false;
  const auto& bd = shape.blocks;
  if (bd.cut_vertices.empty()) {
    return bd.blocks.size() == 1 && shape.is_cycle[0] && bd.blocks[0].size() % 2 == 0;
  }
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (!shape.is_cycle[b] && !shape.is_cut_edge[b]) return false;
  }
  for (VertexId v : bd.cut_vertices) {
    if (shape.cut_vertex_blocks[v] != 2) return false;
  }
  // Each block-tree edge must leave an odd number of cycle edges on each side.
  const auto tree = detail::block_tree(shape);
  const std::size_t nb = bd.blocks.size();
  std::vector<std::size_t> weight(nb, 0);
  std::size_t total = 0;
  for (std::size_t b = 0; b < nb; ++b) {
    if (shape.is_cycle[b]) weight[b] = bd.blocks[b].size();
    total += weight[b];
  }
  if (total % 2 != 0) return false;
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(nb, SIZE_MAX);
  std::vector<bool> seen(nb, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t b = stack.back();
    stack.pop_back();
    order.push_back(b);
    for (std::size_t c : tree[b]) {
      if (!seen[c]) {
        seen[c] = true;
        parent[c] = b;
        stack.push_back(c);
      }
    }
  }
  std::vector<std::size_t> subtree(weight);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t b = *it;
    if (parent[b] == SIZE_MAX) continue;
    if (subtree[b] % 2 == 0) return false;
    subtree[parent[b]] += subtree[b];
  }
  return true;
}

Binomial euler_binomial(const Graph& g, const detail::SubgraphShape& shape) {
  const Graph& w = shape.sub.graph;
  struct Arc {
    VertexId to;
    std::size_t instance;
    EdgeId local_edge;
  };
  std::vector<std::vector<Arc>> arcs(w.vertex_count());
  std::size_t instances = 0;
  std::vector<bool> doubled(w.edge_count(), false);
  for (std::size_t b = 0; b < shape.blocks.blocks.size(); ++b) {
    if (shape.is_cut_edge[b]) doubled[shape.blocks.blocks[b].front()] = true;
  }
  for (EdgeId e = 0; e < w.edge_count(); ++e) {
    const int copies = doubled[e] ? 2 : 1;
    for (int c = 0; c < copies; ++c) {
      arcs[w.edge(e).u].push_back({w.edge(e).v, instances, e});
      arcs[w.edge(e).v].push_back({w.edge(e).u, instances, e});
      ++instances;
    }
  }
  for (auto& a : arcs) {
    std::sort(a.begin(), a.end(), [](const Arc& x, const Arc& y) {
      return x.to != y.to ? x.to < y.to : x.instance < y.instance;
    });
  }

  // Hierholzer.
  std::vector<bool> used(instances, false);
  std::vector<std::size_t> next(w.vertex_count(), 0);
  struct Step {
    VertexId v;
    EdgeId via;  // SIZE_MAX for the start
  };
  std::vector<Step> stack{{0, SIZE_MAX}};
  std::vector<Step> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().v;
    auto& i = next[v];
    while (i < arcs[v].size() && used[arcs[v][i].instance]) ++i;
    if (i < arcs[v].size()) {
      const Arc& a = arcs[v][i];
      used[a.instance] = true;
      stack.push_back({a.to, a.local_edge});
    } else {
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  for (const auto& step : circuit) {
    vertices.push_back(shape.sub.vertex_map[step.v]);
    if (step.via != SIZE_MAX) edges.push_back(shape.sub.edge_map[step.via]);
  }
  return walk_binomial(Walk(g, std::move(vertices), std::move(edges)));
}

}  // namespace

bool is_primitive_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  return primitive_shape(detail::analyze_shape(g, edges));
}

Binomial primitive_walk_binomial(const Graph& g, std::span<const EdgeId> edges) {
  const auto shape = detail::analyze_shape(g, edges);
  if (!primitive_shape(shape)) throw std::invalid_argument("edge set is not a primitive subgraph");
  return euler_binomial(g, shape);
}

namespace {

// Connected edge sets containing `root` as their smallest edge, each
// generated once (ESU on the line graph).
class ConnectedEdgeSets {
 public:
  ConnectedEdgeSets(const Graph& g, EdgeId root, const BasisCaps& caps, std::atomic<std::uint64_t>& used)
      : g_(g), root_(root), caps_(caps), used_(used), cover_(g.vertex_count(), 0) {}

  void run() {
    add(root_);
    std::vector<EdgeId> ext;
    for (VertexId x : {g_.edge(root_).u, g_.edge(root_).v}) {
      for (const auto& inc : g_.neighbors(x)) {
        if (inc.edge > root_) ext.push_back(inc.edge);
      }
    }
    extend(std::move(ext));
  }

  std::vector<Binomial> found;
  bool truncated = false;

 private:
  void add(EdgeId e) {
    set_.push_back(e);
    ++cover_[g_.edge(e).u];
    ++cover_[g_.edge(e).v];
  }
  void remove() {
    const EdgeId e = set_.back();
    set_.pop_back();
    --cover_[g_.edge(e).u];
    --cover_[g_.edge(e).v];
  }

  void visit() {
    for (EdgeId e : set_) {
      for (VertexId x : {g_.edge(e).u, g_.edge(e).v}) {
        if (cover_[x] < 2) return;  // pendant vertex: never primitive
      }
    }
    const auto shape = detail::analyze_shape(g_, set_);
    if (primitive_shape(shape)) found.push_back(euler_binomial(g_, shape).canonical());
  }

  void extend(std::vector<EdgeId> ext) {
    if (used_.fetch_add(1, std::memory_order_relaxed) >= caps_.max_candidates) {
      truncated = true;
      stopped_ = true;
      return;
    }
    visit();
    if (set_.size() == caps_.max_subgraph_edges) {
      for (EdgeId e : ext) {
        if (cover_[g_.edge(e).u] < 4 && cover_[g_.edge(e).v] < 4) truncated = true;
      }
      return;
    }
    while (!ext.empty()) {
      const EdgeId e = ext.back();
      ext.pop_back();
      std::vector<EdgeId> next = ext;
      for (VertexId x : {g_.edge(e).u, g_.edge(e).v}) {
        if (cover_[x] != 0) continue;
        for (const auto& inc : g_.neighbors(x)) {
          const EdgeId f = inc.edge;
          if (f <= root_ || f == e) continue;
          if (cover_[g_.edge(f).u] == 0 && cover_[g_.edge(f).v] == 0) next.push_back(f);
        }
      }
      add(e);
      if (cover_[g_.edge(e).u] <= 4 && cover_[g_.edge(e).v] <= 4) extend(std::move(next));
      remove();
      if (stopped_) return;
    }
  }

  const Graph& g_;
  EdgeId root_;
  const BasisCaps& caps_;
  std::atomic<std::uint64_t>& used_;  // candidates examined, shared across roots
  bool stopped_ = false;
  std::vector<std::size_t> cover_;  // edges of the current set at each vertex
  std::vector<EdgeId> set_;
};

}  // namespace

BasisSet enumerate_graver(const Graph& g, const BasisCaps& caps) {
  BasisSet out;
  out.kind = BasisKind::Graver;
  out.degree_cap = caps.max_subgraph_edges;
  const auto m = static_cast<std::ptrdiff_t>(g.edge_count());
  std::vector<std::vector<Binomial>> parts(g.edge_count());
  std::vector<char> truncated(g.edge_count(), 0);
  std::atomic<std::uint64_t> used{0};

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t root = 0; root < m; ++root) {
    ConnectedEdgeSets search(g, static_cast<EdgeId>(root), caps, used);
    search.run();
    parts[root] = std::move(search.found);
    truncated[root] = search.truncated;
  }

  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (truncated[r]) out.complete = false;
    for (auto& b : parts[r]) out.elements.push_back(std::move(b));
  }
  std::sort(out.elements.begin(), out.elements.end(), canonical_less);
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  if (out.elements.size() > caps.max_elements) {
    out.elements.resize(caps.max_elements);
    out.complete = false;
  }
  return out;
}

}  // namespace unimod
