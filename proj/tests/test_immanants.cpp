#include <gtest/gtest.h>

#include "pfaflab/immanants.hpp"
#include "pfaflab/theorems.hpp"

using namespace pfaflab;

TEST(Immanants, TwoByTwo) {
  auto r = check_immanant_examples();
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Immanants, ExtremeColorings) {
  // I = J = [n] is det(B) times the empty minor.
  for (int n = 1; n <= 3; ++n) {
    auto b = GeneralMatrix::symbolic_block(n);
    Subset all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    EXPECT_TRUE(verify_imm_decomposition(b, all, all).ok) << n;
    EXPECT_TRUE(verify_imm_decomposition(b, {}, {}).ok) << n;
  }
}

TEST(Immanants, MinorDecompositionAndWordIndependence) {
  auto r = check_imm_decomposition(3);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Immanants, PfaffianSquared) { EXPECT_TRUE(check_pf_squared(2).ok()); }

TEST(Immanants, PfaffinantBridge) { EXPECT_TRUE(check_bridge(2).ok()); }

TEST(Immanants, QuadraticTableByDirectArithmetic) {
  // Oracle: expand the claimed products by hand and compare polynomials.
  auto g = printed::quadratic_generators();
  const Polynomial &L = g[0], &M = g[1], &N = g[2];
  auto table = printed::quadratic_table();
  GeneralMatrix a = to_general(SkewArray::symbolic(4));
  std::vector<Polynomial> want = {L * L,
                                  -(L * L),
                                  -(L * M),
                                  -(L * L) - L * N,
                                  (L * M).scaled(2),
                                  M * M,
                                  L * L + (L * M).scaled(2) + L * N + M * N,
                                  (L * L).scaled(2) + (L * N).scaled(2) + N * N};
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto d = OrdinaryTLDiagram::from_edges(4, table[i].d);
    EXPECT_EQ(tl_immanant(d, a), want[i]) << "row " << i + 1 << " " << d.key();
  }
}

TEST(Immanants, QuadraticTableSolverAgreesAndIsUnique) {
  auto q = compare_quadratic_table();
  EXPECT_EQ(q.product_rank, 6u);
  ASSERT_EQ(q.rows.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    ASSERT_TRUE(q.rows[i].expansion.has_value());
    if (i != 6) {
      EXPECT_EQ(*q.rows[i].expansion, q.printed[i]) << "row " << i + 1;
    }
  }
  // Row 7: the L*M coefficient is 2.
  printed::Expansion row7 = q.printed[6];
  row7[{0, 1}] = 2;
  EXPECT_EQ(*q.rows[6].expansion, row7);
}

TEST(Immanants, TwelvePointWitnessOutsideSpan) { EXPECT_TRUE(non_span_witness()); }

TEST(Immanants, ColoringConvention) {
  EXPECT_EQ(immanant_coloring({1}, {2}, 2), (Subset{1, 4}));
  EXPECT_EQ(immanant_coloring({}, {}, 2), (Subset{3, 4}));
}
