#include <gtest/gtest.h>

#include "pfaflab/networks.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/theorems.hpp"

using namespace pfaflab;

TEST(Pfaffinants, SixDiagramsForTwo) {
  auto r = check_diagram_pfaffinants_n2();
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Pfaffinants, DiagramPfaffinantsSumToPfaffian) {
  // I = ∅ recovers pf(A).
  for (int n = 1; n <= 3; ++n) {
    PfaffinantEvaluator ev(SkewArray::symbolic(2 * n));
    Polynomial s;
    for (auto& d : enumerate_sym_tl(n))
      if (is_compatible(d, Subset{})) s += ev.diagram_pfaffinant(d);
    EXPECT_EQ(s, pfaffian(ev.array())) << "n = " << n;
  }
}

TEST(Pfaffinants, Decompositions) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_diagram_decomposition(n).ok()) << n;
    EXPECT_TRUE(check_tl_decomposition(n).ok()) << n;
  }
}

TEST(Pfaffinants, TransitionMatrixForTwo) {
  auto t = transition_matrix(2);
  RationalMatrix want = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  EXPECT_EQ(t.m, want);
  EXPECT_EQ(t.rows, (std::vector<Subset>{{1, 3}, {1, 2}, {1, 2, 3, 4}}));
  EXPECT_TRUE(t.upper_unitriangular());
}

TEST(Pfaffinants, BasisRank) {
  for (int n = 1; n <= 4; ++n) {
    auto t = transition_matrix(n);
    EXPECT_EQ(long(t.rows.size()), binomial(2 * n - 1, n));
    EXPECT_TRUE(t.upper_unitriangular());
  }
}

TEST(Pfaffinants, TLExpansionOfComplementaryPfaffian) {
  PfaffinantEvaluator ev(SkewArray::symbolic(6));
  for (auto& I : even_subsets(6)) {
    auto e = tl_expansion(complementary_pfaffian(ev.array(), I), 3);
    ASSERT_TRUE(e.has_value()) << subset_to_string(I);
    Polynomial back;
    for (auto& [d, c] : *e) back += ev.tl_pfaffinant(d).scaled(c);
    EXPECT_EQ(back, complementary_pfaffian(ev.array(), I));
  }
}

TEST(Pfaffinants, BooleanCone) {
  EXPECT_TRUE(check_boolean_cone().ok());
  EXPECT_FALSE(boolean_cone_check(3, Parity::Odd, {0, -1, 0, 0}));
  EXPECT_THROW(boolean_cone_check(3, Parity::Odd, {1, 2}), std::invalid_argument);
}

TEST(Pfaffinants, ConeMembersAreNonnegativeOnNetworks) {
  // Oracle: evaluate on integer grid networks, where every value must be >= 0.
  auto evens = enumerate_sym_tl_even(2);
  std::vector<ConeElement> members;
  for (std::size_t i = 0; i < evens.size(); ++i)
    for (std::size_t j = 0; j < evens.size(); ++j) {
      ConeElement c{2, {{evens[i], 2}, {evens[j], -1}}};
      if (is_network_positive(c)) members.push_back(c);
    }
  ASSERT_FALSE(members.empty());
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto net = random_grid(2, 3, s);
    PfaffinantEvaluator ev(path_weight_matrix(net));
    for (auto& c : members) {
      Rational v = 0;
      for (auto& [d, x] : c.tl_coeffs) v += x * ev.tl_pfaffinant(d).constant_value();
      EXPECT_GE(v, 0);
    }
  }
}
