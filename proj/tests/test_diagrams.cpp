#include <gtest/gtest.h>

#include <set>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/pfaffinants.hpp"

using namespace pfaflab;

namespace {

// Oracle: brute-force all sets of disjoint pairs on [2n] that do not cross,
// independent of the enumeration code. Every such set is a valid diagram
// (vertical edges left, horizontal edges for the unused points).
long brute_noncrossing_partial_matchings(int m) {
  long count = 0;
  std::vector<int> partner(std::size_t(m + 1), 0);
  auto valid = [&]() {
    for (int p = 1; p <= m; ++p) {
      int q = partner[std::size_t(p)];
      if (q <= p) continue;
      for (int s = p + 1; s < q; ++s) {
        int t = partner[std::size_t(s)];
        if (!t || t < p || t > q) return false;  // trapped point or crossing
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int p) {
    if (p > m) {
      count += valid();
      return;
    }
    if (partner[std::size_t(p)]) return rec(p + 1);
    rec(p + 1);
    for (int q = p + 1; q <= m; ++q) {
      if (partner[std::size_t(q)]) continue;
      partner[std::size_t(p)] = q;
      partner[std::size_t(q)] = p;
      rec(p + 1);
      partner[std::size_t(p)] = partner[std::size_t(q)] = 0;
    }
  };
  rec(1);
  return count;
}

}  // namespace

TEST(Diagrams, CountsMatchBinomials) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(long(enumerate_sym_tl(n).size()), binomial(2 * n, n)) << n;
    EXPECT_EQ(long(enumerate_sym_tl_even(n).size()), binomial(2 * n - 1, n)) << n;
  }
}

TEST(Diagrams, SymmetricDiagramsAreNoncrossingPartialMatchings) {
  // a symmetric diagram is fixed by its vertical edges: noncrossing, with no
  // horizontal strand trapped under one
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> keys;
    for (auto& d : enumerate_sym_tl(n)) keys.insert(d.key());
    EXPECT_EQ(keys.size(), enumerate_sym_tl(n).size());
    EXPECT_EQ(long(keys.size()), brute_noncrossing_partial_matchings(2 * n));
  }
}

TEST(Diagrams, KeysRoundTrip) {
  for (auto& d : enumerate_sym_tl(4)) {
    EXPECT_EQ(SymTLDiagram::from_key(4, d.key()), d);
    EXPECT_EQ(SymTLDiagram::from_code(4, d.code()), d);
  }
  EXPECT_THROW(SymTLDiagram::from_key(2, "V[(1,3)]"), std::invalid_argument);
  EXPECT_THROW(SymTLDiagram::from_key(2, "V[(1,2)(2,3)]"), std::invalid_argument);
}

TEST(Diagrams, SubsetBijectionsInvert) {
  for (int n = 1; n <= 4; ++n)
    for (auto& d : enumerate_sym_tl(n)) {
      EXPECT_EQ(subset_bijection_inv(n, subset_bijection(d)), d);
      if (d.is_even()) {
        auto [I, Ibar] = standard_partition(d);
        EXPECT_TRUE(is_standard(I, Ibar));
        EXPECT_EQ(standard_partition_inv(n, I, Ibar), d);
      }
    }
}

TEST(Diagrams, ClosureRemovesOddEdges) {
  auto d = SymTLDiagram::from_key(2, "V[(1,2)(3,4)]");
  auto s = s_closure(d);
  std::set<std::string> keys;
  for (auto& e : s) keys.insert(e.key());
  EXPECT_EQ(keys, (std::set<std::string>{"V[]", "V[(1,2)]", "V[(3,4)]", "V[(1,2)(3,4)]"}));
  // (2,3) starts at an even point and stays
  keys.clear();
  for (auto& e : s_closure(SymTLDiagram::from_key(2, "V[(1,4)(2,3)]"))) keys.insert(e.key());
  EXPECT_EQ(keys, (std::set<std::string>{"V[(2,3)]", "V[(1,4)(2,3)]"}));
}

TEST(Diagrams, CompatibilityChecksVerticalEdges) {
  auto d = SymTLDiagram::from_key(2, "V[(1,2)]");
  EXPECT_TRUE(is_compatible(d, {1, 3}));
  EXPECT_FALSE(is_compatible(d, {1, 2}));
  EXPECT_THROW(check_even_subset({1}), OddSubset);
}

TEST(Diagrams, OrderChainForTwo) {
  std::vector<Subset> chain = {{1, 2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2}, {1, 3}};
  auto shuffled = chain;
  std::reverse(shuffled.begin(), shuffled.end());
  std::sort(shuffled.begin(), shuffled.end(), prec_less);
  EXPECT_EQ(shuffled, chain);
}
