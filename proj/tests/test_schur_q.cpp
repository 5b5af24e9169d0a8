#include <gtest/gtest.h>

#include <functional>

#include "pfaflab/schur_q.hpp"
#include "pfaflab/theorems.hpp"

using namespace pfaflab;

namespace {

// Oracle: sum over marked shifted tableaux of shape λ/μ, letters 1' < 1 < ... < k' < k,
// coded 2v-2 (primed) and 2v-1. Rows and columns weakly increase, a primed letter
// repeats in no row, an unprimed one in no column.
Polynomial brute_q(const SkewShape& s, int k) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < s.lambda.size(); ++i) {
    int lo = int(i) + (i < s.mu.size() ? s.mu[i] : 0), hi = int(i) + s.lambda[i];
    for (int j = lo; j < hi; ++j) cells.emplace_back(int(i), j);
  }
  std::vector<int> fill(cells.size());
  Polynomial total;
  std::function<void(std::size_t)> go = [&](std::size_t c) {
    if (c == cells.size()) {
      Polynomial m(Rational(1));
      for (int v : fill) m = m * xvar(v / 2 + 1);
      total += m;
      return;
    }
    for (int v = 0; v < 2 * k; ++v) {
      bool ok = true;
      for (std::size_t p = 0; p < c && ok; ++p) {
        int w = fill[p];
        if (cells[p].first == cells[c].first) ok = w < v || (w == v && v % 2 == 1);
        else if (cells[p].second == cells[c].second) ok = w < v || (w == v && v % 2 == 0);
        else if (cells[p].second < cells[c].second && cells[p].first < cells[c].first) ok = w <= v;
      }
      if (!ok) continue;
      fill[c] = v;
      go(c + 1);
    }
  };
  go(0);
  return total;
}

}  // namespace

TEST(SchurQ, MatchesTableauEnumeration) {
  for (int m = 1; m <= 6; ++m)
    for (auto& lam : strict_partitions(m))
      for (int r = 0; r <= m; ++r)
        for (auto& mu : strict_partitions(r)) {
          SkewShape s;
          try {
            s = SkewShape::make(lam, mu);
          } catch (const InvalidShape&) {
            continue;
          }
          EXPECT_EQ(schur_q(s, 3), brute_q(s, 3)) << s.to_string();
        }
}

TEST(SchurQ, SmallValues) {
  EXPECT_EQ(schur_q(Partition{2, 1}, 2).to_string(), "4*x[1]^2*x[2] + 4*x[1]*x[2]^2");
  EXPECT_EQ(schur_q(Partition{1}, 1), xvar(1).scaled(2));
  EXPECT_TRUE(schur_q(Partition{3, 2, 1}, 2).is_zero());
}

TEST(SchurQ, ShapeValidation) {
  EXPECT_EQ(parse_partition("(4,2)"), (Partition{4, 2}));
  EXPECT_THROW(SkewShape::make({2, 2}), InvalidShape);
  EXPECT_THROW(SkewShape::make({3, 1}, {2, 2}), InvalidShape);
  EXPECT_THROW(SkewShape::make({3}, {4}), InvalidShape);
}

TEST(SchurQ, JozefiakPragacz) {
  auto r = verify_jozefiak_pragacz(6, 3);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(SchurQ, ExpandAndRecombine) {
  Polynomial f = schur_q(Partition{3, 1}, 4) + schur_q(Partition{4}, 4).scaled(Rational(2));
  auto e = expand_in_q_basis(f, 4);
  EXPECT_FALSE(e.remainder);
  EXPECT_EQ(e.coefficients, (std::map<Partition, Rational>{{{3, 1}, 1}, {{4}, 2}}));
  EXPECT_EQ(recombine(e, 4), f);
  EXPECT_TRUE(e.nonnegative());
}

TEST(SchurQ, NonSymmetricInputLeavesRemainder) {
  auto e = expand_in_q_basis(xvar(1), 2);
  EXPECT_TRUE(e.remainder);
  EXPECT_EQ(e.to_string(), "1/2*Q(1) + remainder(-x[2])");
  EXPECT_FALSE(monomial_expand(xvar(1), 2).symmetric);
  EXPECT_TRUE(monomial_expand(xvar(1) + xvar(2), 2).symmetric);
}

TEST(SchurQ, TooFewVariables) {
  EXPECT_EQ(injective_degree(4), 14);
  Polynomial f(Monomial(Variable::indeterminate(1), 15));
  EXPECT_THROW(expand_in_q_basis(f, 4), InsufficientVariables);
}

TEST(SchurQ, CellTransferAndSortSplit) {
  auto [j, m] = join_meet(SkewShape::make({3, 2}), SkewShape::make({4, 1}));
  EXPECT_EQ(j, SkewShape::make({4, 2}));
  EXPECT_EQ(m, SkewShape::make({3, 1}));
  auto [a, b] = sort_split({5, 1}, {4, 2});
  EXPECT_EQ(a, (Partition{5, 2}));
  EXPECT_EQ(b, (Partition{4, 1}));
}

TEST(SchurQ, MinDifference) {
  auto r = check_min_difference_q(6, 4);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(SchurQ, ReductionChain) {
  auto r = check_reduction_chain(8, 4);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(SchurQ, SortScannerFixedPointsArePositive) {
  for (auto& v : scan_sort(6)) {
    auto cut = v.instance.find(" ; ");
    Partition l = parse_partition(v.instance.substr(0, cut)), m = parse_partition(v.instance.substr(cut + 3));
    auto [a, b] = sort_split(l, m);
    if (a == l && b == m) {
      EXPECT_EQ(v.verdict, "positive") << v.instance;
      EXPECT_TRUE(v.expansion.coefficients.empty()) << v.instance;
    }
  }
}

TEST(SchurQ, JsonlOutput) {
  std::ostringstream out;
  auto vs = scan_cell_transfer(4);
  ASSERT_FALSE(vs.empty());
  write_jsonl(out, vs);
  std::istringstream in(out.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["conjecture"], "con2");
    ++n;
  }
  EXPECT_EQ(n, vs.size());
}
