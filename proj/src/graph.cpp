#include "unimod/graph.hpp"

#include <algorithm>
#include <numeric>

namespace unimod {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  index.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!index.emplace(labels[v], v).second) {
      throw GraphError("duplicate vertex label '" + labels[v] + "'");
    }
  }
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw GraphError("unknown endpoint label '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw GraphError("unknown endpoint label '" + b + "'");
    resolved.push_back({ia->second, ib->second});
  }
  return from_indices(std::move(labels), std::move(resolved));
}

Graph Graph::from_indices(std::vector<std::string> labels, std::vector<Edge> edges) {
  Graph g;
  g.index_.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!g.index_.emplace(labels[v], v).second) {
      throw GraphError("duplicate vertex label '" + labels[v] + "'");
    }
  }
  g.labels_ = std::move(labels);
  g.adjacency_.assign(g.labels_.size(), {});
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= g.labels_.size() || v >= g.labels_.size()) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) throw GraphError("self-loop at vertex '" + g.labels_[u] + "'");
    g.adjacency_[u].push_back({v, e});
    g.adjacency_[v].push_back({u, e});
  }
  for (VertexId v = 0; v < g.adjacency_.size(); ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor < b.neighbor;
    });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].neighbor == adj[i - 1].neighbor) {
        throw GraphError("parallel edge '" + g.labels_[v] + "'-'" + g.labels_[adj[i].neighbor] + "'");
      }
    }
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::with_numeric_labels(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_indices(std::move(labels), std::move(edges));
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw GraphError("unknown vertex '" + std::string(label) + "'");
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  const auto& adj = adjacency_.at(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Incidence& inc, VertexId x) { return inc.neighbor < x; });
  if (it != adj.end() && it->neighbor == b) return it->edge;
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  return out;
}

Graph build_graph(std::vector<std::string> vertex_labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
  return Graph::build(std::move(vertex_labels), edge_pairs);
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges, bool keep_all_vertices) {
  Subgraph sub;
  std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
  if (keep_all_vertices) {
    sub.vertex_map.resize(g.vertex_count());
    std::iota(sub.vertex_map.begin(), sub.vertex_map.end(), VertexId{0});
  } else {
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : edges) {
      used[g.edge(e).u] = 1;
      used[g.edge(e).v] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) sub.vertex_map.push_back(v);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(sub.vertex_map.size());
  for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) {
    local[sub.vertex_map[i]] = i;
    labels.push_back(g.label(sub.vertex_map[i]));
  }
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (EdgeId e : edges) {
    local_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
    sub.edge_map.push_back(e);
  }
  sub.graph = Graph::from_indices(std::move(labels), std::move(local_edges));
  return sub;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (VertexId v : vertices) inside.at(v) = 1;
  Subgraph sub;
  std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!inside[v]) continue;
    local[v] = sub.vertex_map.size();
    sub.vertex_map.push_back(v);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> local_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (inside[ed.u] && inside[ed.v]) {
      local_edges.push_back({local[ed.u], local[ed.v]});
      sub.edge_map.push_back(e);
    }
  }
  sub.graph = Graph::from_indices(std::move(labels), std::move(local_edges));
  return sub;
}

IncidenceMatrix::IncidenceMatrix(const Graph& g)
    : rows_(g.vertex_count()), cols_(g.edge_count()), entries_(rows_ * cols_, 0) {
  for (EdgeId e = 0; e < cols_; ++e) {
    entries_[g.edge(e).u * cols_ + e] = 1;
    entries_[g.edge(e).v * cols_ + e] = 1;
  }
}

IncidenceMatrix incidence_matrix(const Graph& g) { return IncidenceMatrix(g); }

Walk::Walk(const Graph& g, std::vector<VertexId> vertices, std::vector<EdgeId> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw WalkError("walk has no vertices");
  if (edges_.size() + 1 != vertices_.size()) {
    throw WalkError("walk needs exactly one more vertex than edges");
  }
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    const Edge& e = g.edge(edges_[j]);
    const VertexId a = vertices_[j];
    const VertexId b = vertices_[j + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw WalkError("edge e" + std::to_string(edges_[j] + 1) + " does not join walk step " +
                      std::to_string(j));
    }
  }
}

Walk Walk::from_vertices(const Graph& g, std::vector<VertexId> vertices) {
  std::vector<EdgeId> edges;
  for (std::size_t j = 0; j + 1 < vertices.size(); ++j) {
    auto e = g.edge_between(vertices[j], vertices[j + 1]);
    if (!e) {
      throw WalkError("vertices '" + g.label(vertices[j]) + "' and '" + g.label(vertices[j + 1]) +
                      "' are not adjacent");
    }
    edges.push_back(*e);
  }
  return Walk(g, std::move(vertices), std::move(edges));
}

Walk Walk::reversed() const {
  Walk w;
  w.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  w.edges_.assign(edges_.rbegin(), edges_.rend());
  return w;
}

}  // namespace unimod
