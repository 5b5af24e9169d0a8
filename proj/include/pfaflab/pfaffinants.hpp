#pragma once

// Diagram pfaffinants Pfaf'_D, TL-pfaffinants Pfaf_D, the decomposition
// identities, the transition matrix to standard complementary pfaffians, and
// the network-positivity cone.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/ftable.hpp"
#include "pfaflab/linalg.hpp"
#include "pfaflab/pfaffian.hpp"
#include "pfaflab/report.hpp"

namespace pfaflab {

// A general pfaffinant sum_pi f(pi) a_pi.
struct PfaffinantFunctional {
  int n = 0;
  std::map<Matching, Rational> coefficients;
};

// Evaluates pfaffinants on one fixed array, reusing the matching products.
class PfaffinantEvaluator {
 public:
  explicit PfaffinantEvaluator(const SkewArray& a, std::uint64_t seed = 0)
      : a_(a), n_(a.size() / 2), table_(&f_table(n_, seed)) {
    if (a.size() % 2) throw std::invalid_argument("pfaffinants need an even-size array");
    values_.reserve(table_->matchings.size());
    for (auto& pi : table_->matchings) values_.push_back(matching_monomial(a_, pi));
  }

  int n() const { return n_; }
  const FTable& table() const { return *table_; }

  Polynomial evaluate(const PfaffinantFunctional& f) const {
    Polynomial s;
    for (std::size_t k = 0; k < table_->matchings.size(); ++k) {
      auto it = f.coefficients.find(table_->matchings[k]);
      if (it != f.coefficients.end() && it->second != 0) s += values_[k].scaled(it->second);
    }
    return s;
  }

  Polynomial diagram_pfaffinant(const SymTLDiagram& d) const {
    check_size(d);
    std::size_t col = table_->diagram_index.at(d);
    Polynomial s;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      long long c = table_->f[k][col];
      if (c) s += values_[k].scaled(to_rational(c));
    }
    return s;
  }

  Polynomial tl_pfaffinant(const SymTLDiagram& d) const {
    check_size(d);
    if (!d.is_even()) throw std::invalid_argument("TL-pfaffinants are indexed by even diagrams");
    Polynomial s;
    for (auto& e : s_closure(d)) s += diagram_pfaffinant(e);
    return s;
  }

  const SkewArray& array() const { return a_; }

 private:
  void check_size(const SymTLDiagram& d) const {
    if (d.n() != n_) throw std::invalid_argument("diagram size does not match the array");
  }

  SkewArray a_;
  int n_;
  const FTable* table_;
  std::vector<Polynomial> values_;
};

inline Polynomial diagram_pfaffinant(const SymTLDiagram& d, const SkewArray& a) {
  return PfaffinantEvaluator(a).diagram_pfaffinant(d);
}

inline Polynomial tl_pfaffinant(const SymTLDiagram& d, const SkewArray& a) {
  return PfaffinantEvaluator(a).tl_pfaffinant(d);
}

inline IdentityCheck verify_diagram_decomposition(const PfaffinantEvaluator& ev, const Subset& I) {
  Polynomial rhs;
  for (auto& d : compatible_diagrams(I, ev.n())) rhs += ev.diagram_pfaffinant(d);
  return IdentityCheck::compare(complementary_pfaffian(ev.array(), I), rhs);
}

inline IdentityCheck verify_tl_decomposition(const PfaffinantEvaluator& ev, const Subset& I) {
  Polynomial rhs;
  for (auto& d : i_maximal_diagrams(I, ev.n())) rhs += ev.tl_pfaffinant(d);
  return IdentityCheck::compare(complementary_pfaffian(ev.array(), I), rhs);
}

inline IdentityCheck verify_diagram_decomposition(const SkewArray& a, const Subset& I) {
  return verify_diagram_decomposition(PfaffinantEvaluator(a), I);
}
inline IdentityCheck verify_tl_decomposition(const SkewArray& a, const Subset& I) {
  return verify_tl_decomposition(PfaffinantEvaluator(a), I);
}

// ---------------------------------------------------------------------------
// Transition matrix: rows are standard partitions (I, Ibar) with |I| even,
// columns even diagrams, both sorted in decreasing order; row k is paired with
// column k through D -> I(D).

struct TransitionMatrix {
  int n = 0;
  std::vector<Subset> rows;
  std::vector<SymTLDiagram> cols;
  RationalMatrix m;

  bool upper_unitriangular() const {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i == j && m[i][j] != 1) return false;
        if (i > j && m[i][j] != 0) return false;
      }
    return true;
  }
};

inline TransitionMatrix transition_matrix(int n, int bound = 6) {
  check_bound("transition matrix n", n, bound);
  TransitionMatrix t;
  t.n = n;
  t.cols = enumerate_sym_tl_even(n);
  std::reverse(t.cols.begin(), t.cols.end());
  for (auto& d : t.cols) t.rows.push_back(i_set(d));
  t.m.assign(t.rows.size(), RationalVector(t.cols.size()));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (!is_standard(t.rows[r], complement(t.rows[r], 2 * n)))
      throw std::logic_error("row partition is not standard");
    for (auto& d : i_maximal_diagrams(t.rows[r], n)) {
      auto it = std::find(t.cols.begin(), t.cols.end(), d);
      t.m[r][std::size_t(it - t.cols.begin())] = 1;
    }
  }
  return t;
}

struct BasisCertificate {
  int n = 0;
  std::size_t expected = 0;
  std::size_t tl_rank = 0;
  std::size_t pf_rank = 0;
  std::size_t tl_count = 0;
  bool ok() const { return tl_rank == expected && pf_rank == expected && tl_count == expected; }
};

inline long binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

inline BasisCertificate certify_basis(int n) {
  check_bound("basis certification n", n, 4);
  BasisCertificate c;
  c.n = n;
  c.expected = std::size_t(binomial(2 * n - 1, n));
  PfaffinantEvaluator ev(SkewArray::symbolic(2 * n));
  std::vector<Polynomial> tl, pf;
  for (auto& d : enumerate_sym_tl_even(n)) tl.push_back(ev.tl_pfaffinant(d));
  for (auto& I : even_subsets(2 * n)) pf.push_back(complementary_pfaffian(ev.array(), I));
  c.tl_count = tl.size();
  c.tl_rank = polynomial_rank(tl);
  c.pf_rank = polynomial_rank(pf);
  return c;
}

// Coordinates of K in the TL-pfaffinant basis; nullopt when K is not in P_n.
inline std::optional<std::map<SymTLDiagram, Rational>> tl_expansion(const Polynomial& k, int n) {
  PfaffinantEvaluator ev(SkewArray::symbolic(2 * n));
  auto ds = enumerate_sym_tl_even(n);
  std::vector<Polynomial> gens;
  for (auto& d : ds) gens.push_back(ev.tl_pfaffinant(d));
  auto sol = express_in_span(k, gens);
  if (!sol) return std::nullopt;
  std::map<SymTLDiagram, Rational> out;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if ((*sol)[i] != 0) out[ds[i]] = (*sol)[i];
  return out;
}

// ---------------------------------------------------------------------------
// Network-positivity cone.

struct ConeElement {
  int n = 0;
  std::map<SymTLDiagram, Rational> tl_coeffs;  // even diagrams only

  // c'_{D'} = sum over even D with D' in S(D) of c_D.
  std::map<SymTLDiagram, Rational> diagram_coeffs() const {
    std::map<SymTLDiagram, Rational> out;
    for (auto& d : enumerate_sym_tl(n)) out[d] = 0;
    for (auto& [d, c] : tl_coeffs) {
      if (!d.is_even()) throw std::invalid_argument("cone coefficients must sit on even diagrams");
      for (auto& e : s_closure(d)) out[e] += c;
    }
    return out;
  }

  // Keeps only the coefficients on S(dm).
  ConeElement restricted_to(const SymTLDiagram& dm) const {
    ConeElement r;
    r.n = n;
    auto s = s_closure(dm);
    for (auto& [d, c] : tl_coeffs)
      if (std::find(s.begin(), s.end(), d) != s.end()) r.tl_coeffs[d] = c;
    return r;
  }
};

struct NetworkPositive {};
struct NotCertified {
  SymTLDiagram witness;
  Rational value;
};
using ConeVerdict = std::variant<NetworkPositive, NotCertified>;

inline ConeVerdict cone_membership(const ConeElement& c) {
  auto dc = c.diagram_coeffs();
  std::vector<SymTLDiagram> order;
  for (auto& kv : dc) order.push_back(kv.first);
  std::sort(order.begin(), order.end(), diagram_less);
  for (auto& d : order)
    if (dc[d] < 0) return NotCertified{d, dc[d]};
  return NetworkPositive{};
}

inline bool is_network_positive(const ConeElement& c) {
  return std::holds_alternative<NetworkPositive>(cone_membership(c));
}

inline std::vector<SymTLDiagram> maximal_diagrams(int n) {
  Subset alt;
  for (int i = 1; i <= 2 * n; i += 2) alt.push_back(i);
  return i_maximal_diagrams(alt, n);
}

enum class Parity { Odd, Even };

// Subsets of [s] of the given parity: larger sets first, then lexicographic.
inline std::vector<Subset> boolean_levels(int s, Parity p) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < (1u << s); ++m)
    if ((__builtin_popcount(m) % 2 == 1) == (p == Parity::Odd)) out.push_back(mask_subset(m));
  std::sort(out.begin(), out.end(), prec_less);
  return out;
}

// t is indexed by boolean_levels(s, parity). Checks that for every S' in B_s
// the sum of t_S over indexed S containing S' is nonnegative.
inline bool boolean_cone_check(int s, Parity parity, const std::vector<Rational>& t) {
  check_bound("boolean lattice rank", s, 4);
  auto levels = boolean_levels(s, parity);
  if (t.size() != levels.size()) throw std::invalid_argument("vector length does not match the lattice levels");
  for (std::uint32_t sp = 0; sp < (1u << s); ++sp) {
    Rational sum = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      std::uint32_t m = subset_mask(levels[k]);
      if ((m & sp) == sp) sum += t[k];
    }
    if (sum < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Whether each Pfaf'_D lies in P_n, tested against the standard complementary
// pfaffians.

struct SpanProbe {
  SymTLDiagram diagram;
  std::optional<std::vector<std::pair<Subset, Rational>>> coefficients;
};

inline std::vector<Subset> standard_even_subsets(int n) {
  std::vector<Subset> out;
  for (auto& I : even_subsets(2 * n))
    if (is_standard(I, complement(I, 2 * n))) out.push_back(I);
  return out;
}

inline std::vector<SpanProbe> check_pfafprime_in_span(int n) {
  check_bound("span probe n", n, 4);
  PfaffinantEvaluator ev(SkewArray::symbolic(2 * n));
  auto std_sets = standard_even_subsets(n);
  std::vector<Polynomial> gens;
  for (auto& I : std_sets) gens.push_back(complementary_pfaffian(ev.array(), I));
  std::vector<SpanProbe> out;
  for (auto& d : enumerate_sym_tl(n)) {
    SpanProbe p{d, std::nullopt};
    if (auto sol = express_in_span(ev.diagram_pfaffinant(d), gens)) {
      std::vector<std::pair<Subset, Rational>> cs;
      for (std::size_t i = 0; i < std_sets.size(); ++i)
        if ((*sol)[i] != 0) cs.emplace_back(std_sets[i], (*sol)[i]);
      p.coefficients = cs;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pfaflab
