#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "unimod/decompose.hpp"
#include "unimod/linalg.hpp"
#include "unimod/soc.hpp"

using namespace unimod;
using namespace unimod::testing;

namespace {

BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    const BigInt d = m[0][j] * cofactor_det(minor);
    total += j % 2 == 0 ? d : BigInt(-d);
  }
  return total;
}

}  // namespace

TEST(ExactRank, Examples) {
  EXPECT_EQ(exact_rank(IncidenceMatrix(cycle_graph(3))), 3u);
  EXPECT_EQ(exact_rank(IncidenceMatrix(cycle_graph(4))), 3u);
  EXPECT_EQ(exact_rank(IncidenceMatrix(path_graph(2))), 2u);
}

TEST(ExactRank, VerticesMinusBipartiteComponents) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      std::size_t bipartite = 0;
      for (const Graph& c : connected_components(g)) bipartite += is_bipartite(c);
      const std::size_t r = exact_rank(IncidenceMatrix(g));
      EXPECT_EQ(r, n - bipartite);
      EXPECT_EQ(r, brute_rank(g));
    }
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  const Graph g = complete_graph(5);
  const IntMatrix a{IncidenceMatrix(g)};
  const std::vector<std::size_t> rows{0, 1, 2, 3, 4};
  for (const std::vector<std::size_t> cols : {std::vector<std::size_t>{0, 1, 4, 7, 9},
                                             std::vector<std::size_t>{0, 2, 3, 5, 8}}) {
    const IntMatrix s = a.submatrix(rows, cols);
    std::vector<std::vector<int>> m(5, std::vector<int>(5));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m[i][j] = static_cast<int>(s(i, j));
    }
    EXPECT_EQ(determinant(s), brute_det(m));
  }
}

TEST(Determinant, OverflowFallsBackToExactArithmetic) {
  IntMatrix m(4, 4);
  std::vector<std::vector<BigInt>> big(4, std::vector<BigInt>(4));
  std::int64_t x = 3'000'000'007;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      x = (x * 48271 + 11) % 9'000'000'000'000LL;
      m(i, j) = x - 4'500'000'000'000LL;
      big[i][j] = m(i, j);
    }
  }
  EXPECT_EQ(determinant(m), cofactor_det(big));
}

TEST(MinorScan, Examples) {
  EXPECT_EQ(minor_scan(IncidenceMatrix(cycle_graph(3))).distinct_abs_values, (std::set<BigInt>{2}));
  EXPECT_EQ(minor_scan(IncidenceMatrix(cycle_graph(4))).distinct_abs_values, (std::set<BigInt>{1}));
  const MinorReport db = minor_scan(IncidenceMatrix(dumbbell()));
  EXPECT_EQ(db.rank, 6u);
  EXPECT_EQ(db.minors_evaluated, 7u);
  EXPECT_GE(db.distinct_abs_values.size(), 2u);
  EXPECT_FALSE(db.sampled);
}

TEST(MinorScan, EmptyEdgeSet) {
  const MinorReport r = minor_scan(IncidenceMatrix(Graph::with_numeric_labels(2, {})));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.distinct_abs_values, (std::set<BigInt>{1}));
}

TEST(MinorScan, AgreesWithCofactorOracleAndSerial) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const IncidenceMatrix a(g);
      const MinorReport par = minor_scan(a);
      const MinorReport ser = minor_scan_serial(a);
      EXPECT_EQ(par.distinct_abs_values, ser.distinct_abs_values);
      EXPECT_EQ(par.minors_evaluated, ser.minors_evaluated);
      EXPECT_EQ(par.minors_evaluated, par.minors_total);
      EXPECT_EQ(par.distinct_abs_values, brute_maximal_minor_values(g));
    }
  }
}

TEST(MinorScan, SampledScansOnlyRefute) {
  const IncidenceMatrix k6{complete_graph(6)};
  ScanOptions opts;
  opts.sample_limit = 4000;
  opts.seed = 3;
  const MinorReport par = minor_scan(k6, opts);
  const MinorReport ser = minor_scan_serial(k6, opts);
  EXPECT_TRUE(par.sampled);
  EXPECT_EQ(par.minors_evaluated, 4000u);
  EXPECT_EQ(par.distinct_abs_values, ser.distinct_abs_values);
  EXPECT_GE(par.distinct_abs_values.size(), 2u);
  EXPECT_FALSE(is_unimodular_report(par));

  const IncidenceMatrix bip{complete_bipartite(3, 4)};
  opts.sample_limit = 20;
  const MinorReport one = minor_scan(bip, opts);
  EXPECT_TRUE(one.sampled);
  EXPECT_THROW(is_unimodular_report(one), ExhaustiveRequired);
}

TEST(UnimodularMatrix, Examples) {
  EXPECT_TRUE(is_unimodular_matrix(IncidenceMatrix(cycle_graph(3))));
  EXPECT_FALSE(is_unimodular_matrix(IncidenceMatrix(dumbbell())));
  EXPECT_THROW(is_unimodular_matrix(IncidenceMatrix(complete_graph(8)), 1000), ExhaustiveRequired);
}

TEST(UnimodularMatrix, BipartiteGraphsUpToTwelveEdges) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_bipartite(seed, 3 + seed % 3, 3 + (seed / 3) % 3, 12);
    EXPECT_TRUE(is_unimodular_matrix(IncidenceMatrix(g)));
  }
}

TEST(TotallyUnimodular, Examples) {
  EXPECT_TRUE(is_totally_unimodular_bruteforce(IncidenceMatrix(cycle_graph(4)), 4));
  EXPECT_FALSE(is_totally_unimodular_bruteforce(IncidenceMatrix(cycle_graph(3)), 3));
  EXPECT_TRUE(is_totally_unimodular_bruteforce(IncidenceMatrix(path_graph(1)), 2));
  EXPECT_THROW(is_totally_unimodular_bruteforce(IncidenceMatrix(complete_graph(8)), 8, 1000), SizeLimitExceeded);
}

TEST(TotallyUnimodular, ImpliesUnimodularAndMatchesBipartiteness) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const IncidenceMatrix a(g);
      const bool tu = is_totally_unimodular_bruteforce(a, std::min(a.rows(), a.cols()));
      EXPECT_EQ(tu, is_bipartite(g));
      if (tu) EXPECT_TRUE(is_unimodular_matrix(a));
    }
  }
}

TEST(Choose, Saturates) {
  EXPECT_EQ(choose(5, 2), 10u);
  EXPECT_EQ(choose(2, 5), 0u);
  EXPECT_EQ(choose(200, 100), UINT64_MAX);
}
