#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "unimod/graph.hpp"

using namespace unimod;
using namespace unimod::testing;

TEST(BuildGraph, Triangle) {
  const Graph g = build_graph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.label(g.edge(2).u), "1");
  EXPECT_EQ(g.label(g.edge(2).v), "3");
}

TEST(BuildGraph, SingleVertex) {
  const Graph g = build_graph({"1"}, {});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, RejectsParallelEdge) {
  try {
    build_graph({"1", "2"}, {{"1", "2"}, {"2", "1"}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("parallel edge"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'2'"), std::string::npos);
  }
}

TEST(BuildGraph, RejectsOtherViolations) {
  EXPECT_THROW(build_graph({"1", "1"}, {}), GraphError);
  EXPECT_THROW(build_graph({"1", "2"}, {{"1", "1"}}), GraphError);
  EXPECT_THROW(build_graph({"1", "2"}, {{"1", "9"}}), GraphError);
  try {
    build_graph({"a", "b"}, {{"a", "zz"}});
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(IncidenceMatrix, Triangle) {
  const Graph g = build_graph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  const IncidenceMatrix a = incidence_matrix(g);
  const int want[3][3] = {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  ASSERT_EQ(a.rows(), 3u);
  ASSERT_EQ(a.cols(), 3u);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(a.at(r, c), want[r][c]);
  }
}

TEST(IncidenceMatrix, FourCycleAndPath) {
  const IncidenceMatrix c4(cycle_graph(4));
  for (std::size_t i = 0; i < 4; ++i) {
    int row = 0;
    int col = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      row += c4.at(i, j);
      col += c4.at(j, i);
    }
    EXPECT_EQ(row, 2);
    EXPECT_EQ(col, 2);
  }
  const IncidenceMatrix p(path_graph(2));
  ASSERT_EQ(p.rows(), 3u);
  ASSERT_EQ(p.cols(), 2u);
  EXPECT_EQ(p.at(0, 0) + p.at(0, 1), 1);
  EXPECT_EQ(p.at(1, 0) + p.at(1, 1), 2);
  EXPECT_EQ(p.at(2, 0) + p.at(2, 1), 1);
}

TEST(WalkBinomial, FourCycle) {
  const Graph g = cycle_graph(4);
  const Binomial b = walk_binomial(Walk::from_vertices(g, {0, 1, 2, 3, 0}));
  EXPECT_EQ(to_string(b), "e1*e3 - e2*e4");
  EXPECT_TRUE(is_square_free(b));
}

TEST(WalkBinomial, Bowtie) {
  const Graph g = bowtie();
  const Binomial b = walk_binomial(Walk::from_vertices(g, {0, 1, 2, 0, 3, 4, 0}));
  EXPECT_EQ(to_string(b), "e1*e3*e5 - e2*e4*e6");
  EXPECT_TRUE(is_square_free(b));
  EXPECT_EQ(b.plus_degree(), 3);
  EXPECT_TRUE(is_homogeneous(g, b));
}

TEST(WalkBinomial, Dumbbell) {
  const Graph g = dumbbell();
  const Binomial b = walk_binomial(Walk::from_vertices(g, {0, 1, 2, 0, 3, 4, 5, 3, 0}));
  EXPECT_EQ(to_string(b), "e1*e3*e4*e6 - e2*e5*e7^2");
  EXPECT_FALSE(is_square_free(b));
  const auto image = brute_apply_incidence(g, b.to_vector(g.edge_count()));
  for (const auto& x : image) EXPECT_EQ(x, 0);
}

TEST(WalkBinomial, Errors) {
  const Graph g = cycle_graph(4);
  EXPECT_THROW(walk_binomial(Walk::from_vertices(g, {0, 1, 2})), std::invalid_argument);
  EXPECT_THROW(walk_binomial(Walk::from_vertices(cycle_graph(3), {0, 1, 2, 0})), std::invalid_argument);
  EXPECT_THROW(Walk::from_vertices(g, {0, 2}), WalkError);
  EXPECT_THROW(Walk(g, {0, 1}, {1}), WalkError);
}

TEST(SquareFree, Cases) {
  EXPECT_TRUE(is_square_free(Binomial{}));
  EXPECT_EQ(to_string(Binomial{}), "0");
  Monomial plus{{0, 2}};
  Monomial minus{{1, 1}, {2, 1}};
  EXPECT_FALSE(is_square_free(Binomial::reduced(plus, minus)));
}

TEST(Binomial, ReducedCancelsCommonFactors) {
  const Binomial b = Binomial::reduced({{0, 2}, {1, 1}}, {{0, 1}, {2, 1}});
  EXPECT_EQ(to_string(b), "e1*e2 - e3");
  EXPECT_TRUE(Binomial::reduced({{0, 1}}, {{0, 1}}).is_zero());
}

TEST(Binomial, CanonicalSign) {
  const Binomial b = Binomial::reduced({{1, 1}, {3, 1}}, {{0, 1}, {2, 1}});
  EXPECT_EQ(to_string(b.canonical()), "e1*e3 - e2*e4");
  EXPECT_EQ(b.canonical(), b.negated().canonical());
}

namespace {

// Every closed walk of even length <= max_len starting at vertex 0.
void even_closed_walks(const Graph& g, std::size_t max_len, const std::function<void(const Walk&)>& visit) {
  std::vector<VertexId> seq{0};
  std::function<void()> rec = [&]() {
    if (seq.size() > 1 && seq.back() == 0 && (seq.size() - 1) % 2 == 0) visit(Walk::from_vertices(g, seq));
    if (seq.size() - 1 == max_len) return;
    for (const auto& inc : g.neighbors(seq.back())) {
      seq.push_back(inc.neighbor);
      rec();
      seq.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST(WalkBinomialProperty, HomogeneousAndReversalSwapsSides) {
  std::size_t checked = 0;
  for (const Graph& g : {complete_graph(4), bowtie(), dumbbell(), complete_bipartite(2, 3)}) {
    even_closed_walks(g, 8, [&](const Walk& w) {
      const Binomial b = walk_binomial(w);
      const auto image = brute_apply_incidence(g, b.to_vector(g.edge_count()));
      for (const auto& x : image) ASSERT_EQ(x, 0);
      const Binomial r = walk_binomial(w.reversed());
      ASSERT_EQ(r.plus(), b.minus());
      ASSERT_EQ(r.minus(), b.plus());
      ++checked;
    });
  }
  EXPECT_GT(checked, 1000u);
}

TEST(WalkBinomialProperty, EvenCyclesAreSquareFreeOfHalfDegree) {
  for (std::size_t s = 2; s <= 8; ++s) {
    const Graph g = cycle_graph(2 * s);
    std::vector<VertexId> seq;
    for (std::size_t i = 0; i <= 2 * s; ++i) seq.push_back(i % (2 * s));
    const Binomial b = walk_binomial(Walk::from_vertices(g, seq));
    EXPECT_EQ(b.plus_degree(), s);
    EXPECT_EQ(b.minus_degree(), s);
    EXPECT_TRUE(is_square_free(b));
  }
}

TEST(Subgraph, EdgeSubgraphMapsBack) {
  const Graph g = dumbbell();
  const std::vector<EdgeId> edges{3, 4, 5};
  const Subgraph s = edge_subgraph(g, edges);
  EXPECT_EQ(s.graph.vertex_count(), 3u);
  EXPECT_EQ(s.edge_map, edges);
  EXPECT_EQ(s.vertex_map, (std::vector<VertexId>{3, 4, 5}));
  EXPECT_EQ(s.graph.label(0), "3");
}
