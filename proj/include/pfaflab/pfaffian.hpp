#pragma once

// Pfaffians, complementary pfaffians, determinants and minors over exact
// polynomials.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/poly.hpp"

namespace pfaflab {

// Strict upper triangle of a skew-symmetric m x m matrix, 1-based.
class SkewArray {
 public:
  SkewArray() = default;
  explicit SkewArray(int m) : m_(m), e_(std::size_t(m) * std::size_t(m > 0 ? m - 1 : 0) / 2) {}

  static SkewArray symbolic(int m) {
    SkewArray a(m);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) a.set(i, j, Polynomial(Variable::entry(i, j)));
    return a;
  }
  static SkewArray from_function(int m, const std::function<Polynomial(int, int)>& f) {
    SkewArray a(m);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) a.set(i, j, f(i, j));
    return a;
  }

  int size() const { return m_; }
  const Polynomial& entry(int i, int j) const { return e_[index(i, j)]; }
  void set(int i, int j, Polynomial p) { e_[index(i, j)] = std::move(p); }
  // Full-matrix access with a_ji = -a_ij and a_ii = 0.
  Polynomial at(int i, int j) const {
    if (i == j) return {};
    return i < j ? entry(i, j) : -entry(j, i);
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || j <= i || j > m_) throw std::out_of_range("skew array index");
    // row-major strict upper triangle
    std::size_t r = std::size_t(i - 1);
    return r * std::size_t(m_) - r * (r + 1) / 2 + std::size_t(j - i - 1);
  }

  int m_ = 0;
  std::vector<Polynomial> e_;
};

class GeneralMatrix {
 public:
  GeneralMatrix() = default;
  GeneralMatrix(int rows, int cols) : r_(rows), c_(cols), e_(std::size_t(rows) * std::size_t(cols)) {}

  static GeneralMatrix symbolic_block(int n) {
    // b_ij = a[i, j+n], the off-diagonal block of a 2n x 2n skew array
    GeneralMatrix b(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) b.set(i, j, Polynomial(Variable::entry(i, j + n)));
    return b;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Polynomial& at(int i, int j) const { return e_[std::size_t(i - 1) * std::size_t(c_) + std::size_t(j - 1)]; }
  void set(int i, int j, Polynomial p) { e_[std::size_t(i - 1) * std::size_t(c_) + std::size_t(j - 1)] = std::move(p); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Polynomial> e_;
};

inline GeneralMatrix to_general(const SkewArray& a) {
  GeneralMatrix g(a.size(), a.size());
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) g.set(i, j, a.at(i, j));
  return g;
}

// Sub-pfaffian on the rows and columns in I (order-preserving relabeling).
inline Polynomial pfaffian(const SkewArray& a, const Subset& I) {
  check_even_subset(I);
  if (I.size() > 32) throw BoundExceeded("pfaffian size", long(I.size()), 32);
  std::unordered_map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::uint64_t)> rec = [&](std::uint64_t rest) -> Polynomial {
    if (!rest) return Polynomial(1);
    auto it = memo.find(rest);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctzll(rest);
    std::uint64_t r2 = rest & ~(1ull << first);
    Polynomial s;
    int pos = 1;
    for (std::uint64_t m = r2; m; m &= m - 1) {
      int j = __builtin_ctzll(m);
      ++pos;
      const Polynomial& e = a.entry(I[std::size_t(first)], I[std::size_t(j)]);
      if (e.is_zero()) continue;
      Polynomial sub = rec(r2 & ~(1ull << j));
      if (sub.is_zero()) continue;
      Polynomial t = e * sub;
      if (pos % 2) s -= t;
      else s += t;
    }
    memo.emplace(rest, s);
    return s;
  };
  return rec(I.size() == 64 ? ~0ull : ((1ull << I.size()) - 1));
}

inline Polynomial pfaffian(const SkewArray& a) {
  Subset all(std::size_t(a.size()));
  for (int i = 0; i < a.size(); ++i) all[std::size_t(i)] = i + 1;
  return pfaffian(a, all);
}

inline Polynomial complementary_pfaffian(const SkewArray& a, const Subset& I) {
  check_even_subset(I);
  return pfaffian(a, I) * pfaffian(a, complement(I, a.size()));
}

// Value of the matching monomial a_pi = prod a_ij on a concrete array.
inline Polynomial matching_monomial(const SkewArray& a, const Matching& pi) {
  Polynomial p(1);
  for (auto& [i, j] : pi.edges) {
    const Polynomial& e = a.entry(i, j);
    if (e.is_zero()) return {};
    p *= e;
  }
  return p;
}

inline Monomial matching_monomial_symbolic(const Matching& pi) {
  std::vector<Monomial::Factor> fs;
  for (auto& [i, j] : pi.edges) fs.emplace_back(Variable::entry(i, j).code(), 1);
  return Monomial::from_factors(fs);
}

// Determinant of the submatrix on rows R and columns C (1-based, same size).
inline Polynomial minor(const GeneralMatrix& m, const Subset& R, const Subset& C) {
  if (R.size() != C.size()) throw std::invalid_argument("minor needs |I| = |J|");
  if (R.empty()) return Polynomial(1);
  if (C.size() > 30) throw BoundExceeded("minor size", long(C.size()), 30);
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint32_t)> rec = [&](std::size_t row, std::uint32_t cols) -> Polynomial {
    if (row == R.size()) return Polynomial(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial s;
    int pos = 0;
    for (std::uint32_t c = cols; c; c &= c - 1) {
      int k = __builtin_ctz(c);
      const Polynomial& e = m.at(R[row], C[std::size_t(k)]);
      if (!e.is_zero()) {
        Polynomial t = e * rec(row + 1, cols & ~(1u << k));
        if (pos % 2) s -= t;
        else s += t;
      }
      ++pos;
    }
    memo.emplace(cols, s);
    return s;
  };
  return rec(0, (1u << C.size()) - 1);
}

inline Polynomial determinant(const GeneralMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Subset all(std::size_t(m.rows()));
  for (int i = 0; i < m.rows(); ++i) all[std::size_t(i)] = i + 1;
  return minor(m, all, all);
}

// Elementwise minimum of (I, Ibar), padding Ibar with infinities.
inline Subset min_partition(const Subset& I, int m) {
  check_even_subset(I);
  if (int(I.size()) * 2 < m) throw std::invalid_argument("min_partition needs |I| >= n");
  Subset J = complement(I, m);
  Subset out;
  for (std::size_t k = 0; k < I.size(); ++k) out.push_back(k < J.size() ? std::min(I[k], J[k]) : I[k]);
  return out;
}

}  // namespace pfaflab
