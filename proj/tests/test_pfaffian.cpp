#include <gtest/gtest.h>

#include <random>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/pfaffian.hpp"

using namespace pfaflab;

namespace {

// Oracle: determinant by rational Gaussian elimination.
Rational gauss_det(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

SkewArray random_integer_array(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return SkewArray::from_function(m, [&](int, int) { return Polynomial(Rational(d(rng))); });
}

long double_factorial(int k) { return k <= 1 ? 1 : k * double_factorial(k - 2); }

}  // namespace

TEST(Pfaffian, FourByFour) {
  auto a = SkewArray::symbolic(4);
  Polynomial want = Polynomial(pfaflab::a(1, 2)) * Polynomial(pfaflab::a(3, 4)) -
                    Polynomial(pfaflab::a(1, 3)) * Polynomial(pfaflab::a(2, 4)) +
                    Polynomial(pfaflab::a(1, 4)) * Polynomial(pfaflab::a(2, 3));
  EXPECT_EQ(pfaffian(a), want);
}

TEST(Pfaffian, TermCountIsDoubleFactorial) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(long(pfaffian(SkewArray::symbolic(2 * n)).size()), double_factorial(2 * n - 1));
}

TEST(Pfaffian, SquareIsDeterminantOnIntegerArrays) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 2 * (1 + trial % 4);
    auto a = random_integer_array(m, rng);
    std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) dense[std::size_t(i - 1)][std::size_t(j - 1)] = a.at(i, j).constant_value();
    Rational pf = pfaffian(a).constant_value();
    EXPECT_EQ(pf * pf, gauss_det(dense));
    EXPECT_EQ(determinant(to_general(a)).constant_value(), gauss_det(dense));
  }
}

TEST(Pfaffian, ComplementaryPfaffians) {
  auto a = SkewArray::symbolic(4);
  EXPECT_EQ(complementary_pfaffian(a, {1, 3}), Polynomial(pfaflab::a(1, 3)) * Polynomial(pfaflab::a(2, 4)));
  EXPECT_EQ(complementary_pfaffian(a, {1, 2, 3, 4}), pfaffian(a));
  EXPECT_EQ(complementary_pfaffian(a, {}), pfaffian(a));
  EXPECT_THROW(complementary_pfaffian(a, {1}), OddSubset);
}

TEST(Pfaffian, MinPartitionByDefinition) {
  for (int m = 2; m <= 8; m += 2)
    for (auto& I : even_subsets(m)) {
      if (int(I.size()) * 2 < m) continue;
      Subset J = complement(I, m), want;
      for (std::size_t t = 0; t < I.size(); ++t) want.push_back(t < J.size() ? std::min(I[t], J[t]) : I[t]);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(min_partition(I, m), want) << subset_to_string(I);
    }
}
