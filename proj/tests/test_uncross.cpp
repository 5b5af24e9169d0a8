#include <gtest/gtest.h>

#include "pfaflab/theorems.hpp"
#include "pfaflab/uncross.hpp"

using namespace pfaflab;

TEST(Uncross, CrossingPairOnTwoEmbeddings) {
  Matching pi{{{1, 4}, {2, 3}}};
  auto [s0, s1] = distinct_embedding_seeds(pi, 2, 0);
  EXPECT_NE(embed_nu_pi(pi, 2, s0).signature(), embed_nu_pi(pi, 2, s1).signature());
  for (auto seed : {s0, s1}) {
    auto f = f_coefficient(pi, 2, seed);
    for (auto& [key, want] : printed::uncrossing_1423())
      EXPECT_EQ(f.at(SymTLDiagram::from_key(2, key)), want) << key << " seed " << seed;
    EXPECT_EQ(uncross(embed_nu_pi(pi, 2, seed)).count, 16u);
  }
}

TEST(Uncross, WeightMultisetCoversEveryState) {
  Matching pi{{{1, 4}, {2, 3}}};
  auto t = uncross(embed_nu_pi(pi, 2, 0));
  std::uint64_t states = 0;
  for (auto& [w, c] : t.weights) states += c;
  EXPECT_EQ(states, t.count);
  EXPECT_GT(t.count, 0u);
}

TEST(Uncross, EmbeddingIndependence) {
  for (int n = 1; n <= 3; ++n) {
    auto r = check_embedding_independence(n, 5);
    EXPECT_TRUE(r.ok()) << r.to_json().dump();
  }
}

TEST(Uncross, ColumnAgreesWithPfaffinantTable) {
  // f_D({(1,2),(3,4)}) is the a12*a34 coefficient of the tabulated Pfaf_D.
  Matching pi{{{1, 2}, {3, 4}}};
  auto f = f_coefficient(pi, 2, 0);
  Monomial m = Monomial(a(1, 2)) * Monomial(a(3, 4));
  for (auto& [key, p] : printed::diagram_pfaffinants_n2())
    EXPECT_EQ(to_rational(f.at(SymTLDiagram::from_key(2, key))), p.coefficient(m)) << key;
}
