#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unimod/bigint.hpp"

namespace unimod {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph. Vertices carry opaque string labels; edge i is
/// the i-th pair given at construction. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates labels and endpoints; throws GraphError naming the offending
  /// label or pair (duplicate label, self-loop, parallel edge, unknown label).
  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based construction; same validation as build().
  static Graph from_indices(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Labels "0", "1", ..., "n-1".
  static Graph with_numeric_labels(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId index_of(std::string_view label) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident (neighbor, edge) pairs sorted by neighbor index.
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edge_pairs() == b.edge_pairs();
  }

 private:
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(std::vector<std::string> vertex_labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs);

/// A subgraph together with the original indices of its vertices and edges.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> vertex_map;  // local -> original
  std::vector<EdgeId> edge_map;      // local -> original
};

/// Subgraph on the given edges. Vertices are the edge endpoints in ascending
/// original order, or every vertex of g when keep_all_vertices is set.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges,
                       bool keep_all_vertices = false);

/// Subgraph induced by the given vertex set (edges in original order).
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// 0/1 vertex-by-edge matrix; column j carries 1s at the endpoints of edge j.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  explicit IncidenceMatrix(const Graph& g);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

IncidenceMatrix incidence_matrix(const Graph& g);

class WalkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex sequence u_0..u_l with the edges joining consecutive vertices.
class Walk {
 public:
  Walk() = default;
  /// Validates that edges[j] joins vertices[j] and vertices[j+1].
  Walk(const Graph& g, std::vector<VertexId> vertices, std::vector<EdgeId> edges);

  /// Resolves the joining edges; throws WalkError on a non-adjacent step.
  static Walk from_vertices(const Graph& g, std::vector<VertexId> vertices);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool closed() const { return !vertices_.empty() && vertices_.front() == vertices_.back(); }
  bool even() const { return edges_.size() % 2 == 0; }

  Walk reversed() const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
};

/// Exponent map edge -> positive exponent (zero exponents are never stored).
using Monomial = std::map<EdgeId, BigInt>;

/// Compares monomials as dense exponent vectors over ascending edge index.
int compare_lex(const Monomial& a, const Monomial& b);

/// x^plus - x^minus, always kept with disjoint supports.
class Binomial {
 public:
  Binomial() = default;

  /// Cancels common factors so the two sides have disjoint supports.
  static Binomial reduced(Monomial plus, Monomial minus);
  /// plus = positive part of u, minus = negative part.
  static Binomial from_vector(std::span<const BigInt> u);
  static Binomial from_vector(std::span<const std::int64_t> u);

  const Monomial& plus() const { return plus_; }
  const Monomial& minus() const { return minus_; }

  bool is_zero() const { return plus_.empty() && minus_.empty(); }
  BigInt plus_degree() const;
  BigInt minus_degree() const;
  BigInt max_exponent() const;
  std::vector<EdgeId> support() const;
  std::vector<BigInt> to_vector(std::size_t edge_count) const;

  Binomial negated() const;
  /// Sign-normalized form: the lexicographically larger monomial is plus.
  Binomial canonical() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Monomial plus_;
  Monomial minus_;
};

/// Total order used for canonical basis listings: degree, then lex on plus,
/// then lex on minus (larger monomials first).
bool canonical_less(const Binomial& a, const Binomial& b);

/// B_w: odd-position edges minus even-position edges, reduced.
Binomial walk_binomial(const Walk& w);

bool is_square_free(const Binomial& b);

/// A_G (plus - minus) = 0.
bool is_homogeneous(const Graph& g, const Binomial& b);

/// "e1*e3 - e2*e4"; edges are named e<index+1>, exponents rendered as ^k.
std::string to_string(const Binomial& b);

}  // namespace unimod
