#pragma once

// Exact linear algebra over Q on polynomial coefficient vectors.

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pfaflab/poly.hpp"

namespace pfaflab {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < m[row].size(); ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return detail::rref(m, m[0].size()).size();
}

// Monomial index shared by a family of polynomials.
class MonomialIndex {
 public:
  std::size_t add(const Monomial& m) {
    auto [it, fresh] = idx_.emplace(m, idx_.size());
    return it->second;
  }
  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = idx_.find(m);
    if (it == idx_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return idx_.size(); }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx_;
};

inline std::size_t polynomial_rank(const std::vector<Polynomial>& ps) {
  MonomialIndex ix;
  for (auto& p : ps)
    for (auto& t : p.terms()) ix.add(t.first);
  RationalMatrix m(ps.size(), RationalVector(ix.size()));
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (auto& t : ps[r].terms()) m[r][*ix.find(t.first)] = t.second;
  return matrix_rank(std::move(m));
}

// Solve target = sum_i c_i gens[i] over Q. Returns one solution (free
// coefficients set to zero) or nullopt when target is outside the span.
inline std::optional<RationalVector> express_in_span(const Polynomial& target,
                                                    const std::vector<Polynomial>& gens) {
  MonomialIndex ix;
  for (auto& g : gens)
    for (auto& t : g.terms()) ix.add(t.first);
  for (auto& t : target.terms()) ix.add(t.first);
  std::size_t k = gens.size();
  // Rows are monomials, columns are generators plus the augmented target.
  RationalMatrix m(ix.size(), RationalVector(k + 1));
  for (std::size_t c = 0; c < k; ++c)
    for (auto& t : gens[c].terms()) m[*ix.find(t.first)][c] = t.second;
  for (auto& t : target.terms()) m[*ix.find(t.first)][k] = t.second;
  auto piv = detail::rref(m, k + 1);
  RationalVector sol(k);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == k) return std::nullopt;
    sol[piv[r]] = m[r][k];
  }
  return sol;
}

// Inverse of a square matrix; nullopt when singular.
inline std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  std::size_t n = a.size();
  RationalMatrix m(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  auto piv = detail::rref(m, n);
  if (piv.size() != n) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace pfaflab
