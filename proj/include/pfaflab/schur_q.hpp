#pragma once

// Schur Q-functions of shifted (skew) shapes in finitely many variables,
// Q-Jacobi-Trudi arrays, expansions in the Q and monomial bases, cell
// transfer and the positivity scanners.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/parallel.hpp"
#include "pfaflab/pfaffian.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/poly.hpp"
#include "pfaflab/report.hpp"

namespace pfaflab {

using Partition = std::vector<int>;  // weakly decreasing, trailing zeros dropped unless noted

inline std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline Partition trim(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool is_strict(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i + 1] > 0 && p[i + 1] >= p[i]) return false;
    if (i + 1 < p.size() && p[i] == 0 && p[i + 1] != 0) return false;
  }
  return true;
}

inline Partition parse_partition(std::string_view s) {
  Partition p;
  int cur = -1;
  for (char c : s) {
    if (c >= '0' && c <= '9') cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
      if (cur >= 0) p.push_back(cur);
      cur = -1;
    } else {
      throw InvalidShape("bad partition '" + std::string(s) + "'");
    }
  }
  if (cur >= 0) p.push_back(cur);
  return p;
}

// Strict partitions of m (parts strictly decreasing), in reverse lex order.
inline std::vector<Partition> strict_partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (!rest) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p - 1);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// λ/μ with S(μ) ⊆ S(λ). μ may carry one trailing zero part.
struct SkewShape {
  Partition lambda, mu;

  static SkewShape make(Partition l, Partition m = {}) {
    SkewShape s{trim(std::move(l)), trim(std::move(m))};
    s.validate();
    return s;
  }
  void validate() const {
    if (!is_strict(lambda)) throw InvalidShape("outer shape " + partition_to_string(lambda) + " is not strict");
    if (!is_strict(mu)) throw InvalidShape("inner shape " + partition_to_string(mu) + " is not strict");
    if (trim(mu).size() > lambda.size()) throw InvalidShape("inner shape is longer than the outer one");
    for (std::size_t i = 0; i < mu.size() && i < lambda.size(); ++i)
      if (mu[i] > lambda[i]) throw InvalidShape(to_string() + ": inner shape not contained");
  }
  int size() const { return weight(lambda) - weight(mu); }
  std::string to_string() const {
    return mu.empty() ? partition_to_string(lambda) : partition_to_string(lambda) + "/" + partition_to_string(mu);
  }
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

inline Polynomial xvar(int i) { return Polynomial(Variable::indeterminate(i)); }

namespace detail {

// Number of ways to fill ν'/ν with {i', i} under the shifted tableau rules.
// Within one letter: a primed letter may only sit at the left end of its row
// segment (rows weakly increase and hold at most one i'), an unprimed one only
// at the bottom of its column segment (columns weakly increase and hold at
// most one i). Cells that are both get two choices.
inline long long strip_fillings(const Partition& inner, const Partition& outer) {
  std::set<std::pair<int, int>> cells;  // (row, column), shifted coordinates
  for (std::size_t r = 0; r < outer.size(); ++r) {
    int a = r < inner.size() ? inner[r] : 0;
    for (int c = a; c < outer[r]; ++c) cells.emplace(int(r), int(r) + c);
  }
  long long ways = 1;
  for (auto [r, c] : cells) {
    bool leftmost = !cells.count({r, c - 1});
    bool bottom = !cells.count({r + 1, c});
    if (!leftmost && !bottom) return 0;
    if (leftmost && bottom) ways *= 2;
  }
  return ways;
}

// Shifted shapes ν with inner ⊆ ν ⊆ outer, as partitions of length outer.size().
inline std::vector<Partition> intermediate_shapes(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  Partition cur(outer.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == outer.size()) {
      out.push_back(cur);
      return;
    }
    int lo = r < inner.size() ? inner[r] : 0;
    int hi = outer[r];
    if (r > 0) hi = std::min(hi, cur[r - 1] > 0 ? cur[r - 1] - 1 : 0);
    for (int v = lo; v <= hi; ++v) {
      cur[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

inline constexpr int kMaxQSize = 24;

// Q_{λ/μ}(x_1..x_k): letters are added one at a time; each step fills a
// strip ν'/ν with copies of i' and i.
inline Polynomial schur_q_uncached(const SkewShape& s, int k) {
  s.validate();
  if (k < 1) throw InsufficientVariables("need at least one variable");
  check_bound("shape size", weight(s.lambda), kMaxQSize);
  const Partition& outer = s.lambda;
  Partition inner = s.mu;
  inner.resize(outer.size(), 0);
  auto shapes = detail::intermediate_shapes(inner, outer);
  std::map<Partition, std::size_t> idx;
  for (std::size_t i = 0; i < shapes.size(); ++i) idx[shapes[i]] = i;
  // transitions ν -> ν' with their filling counts
  std::vector<std::vector<std::pair<std::size_t, long long>>> next(shapes.size());
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = 0; b < shapes.size(); ++b) {
      bool contained = true;
      for (std::size_t r = 0; r < outer.size() && contained; ++r) contained = shapes[a][r] <= shapes[b][r];
      if (!contained) continue;
      long long w = detail::strip_fillings(shapes[a], shapes[b]);
      if (w) next[a].emplace_back(b, w);
    }
  std::vector<Polynomial> cur(shapes.size());
  cur[idx.at(inner)] = Polynomial(1L);
  for (int i = 1; i <= k; ++i) {
    std::vector<Polynomial> nxt(shapes.size());
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      if (cur[a].is_zero()) continue;
      for (auto [b, w] : next[a]) {
        int d = weight(shapes[b]) - weight(shapes[a]);
        nxt[b] += (cur[a] * xvar(i).pow(unsigned(d))).scaled(to_rational(w));
      }
    }
    cur = std::move(nxt);
  }
  return cur[idx.at(outer)];
}

inline const Polynomial& schur_q(const SkewShape& s, int k) {
  static std::mutex m;
  static std::map<std::pair<SkewShape, int>, std::unique_ptr<Polynomial>> memo;
  {
    std::lock_guard<std::mutex> g(m);
    auto it = memo.find({s, k});
    if (it != memo.end()) return *it->second;
  }
  auto p = std::make_unique<Polynomial>(schur_q_uncached(s, k));
  std::lock_guard<std::mutex> g(m);
  auto [it, fresh] = memo.emplace(std::make_pair(s, k), std::move(p));
  (void)fresh;
  return *it->second;
}

inline const Polynomial& schur_q(const Partition& lambda, int k) { return schur_q(SkewShape::make(lambda), k); }

// Q_r with Q_0 = 1 and Q_{-r} = 0.
inline Polynomial q_single(int r, int k) {
  if (r < 0) return {};
  if (r == 0) return Polynomial(1L);
  return schur_q(Partition{r}, k);
}

// Q_{(r,s)} extended by Q_{(r,0)} = Q_r, Q_{(r,r)} = 0 and Q_{(r,s)} = -Q_{(s,r)}.
inline Polynomial q_pair(int r, int s, int k) {
  if (r == s) return {};
  if (r < s) return -q_pair(s, r, k);
  if (s < 0) throw InvalidShape("negative part in a Q-Jacobi-Trudi entry");
  if (s == 0) return q_single(r, k);
  return schur_q(Partition{r, s}, k);
}

// The Q-Jacobi-Trudi array [[A_λ, H], [-H^t, 0]] with h_ij = Q_{λ_i - μ_{r+1-j}}
// (or Q_{λ_i - μ_j} for the alternative column order). When l + r is odd
// μ gets an extra zero part. With `generalized`, λ and μ only need to be
// weakly decreasing.
inline SkewArray q_jt_matrix(const Partition& lambda_in, const Partition& mu_in, int k, bool generalized = false,
                             bool reversed_columns = false) {
  Partition lambda = trim(lambda_in), mu = trim(mu_in);
  if (!generalized) SkewShape::make(lambda, mu);
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) throw InvalidShape("outer parts must be weakly decreasing");
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) throw InvalidShape("inner parts must be weakly decreasing");
  if ((lambda.size() + mu.size()) % 2) mu.push_back(0);
  int l = int(lambda.size()), r = int(mu.size());
  SkewArray a(l + r);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) a.set(i, j, q_pair(lambda[std::size_t(i - 1)], lambda[std::size_t(j - 1)], k));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= r; ++j) {
      int m = reversed_columns ? mu[std::size_t(j - 1)] : mu[std::size_t(r - j)];
      a.set(i, l + j, q_single(lambda[std::size_t(i - 1)] - m, k));
    }
  return a;
}

// Number of inner parts after padding, r in the sign (-1)^C(r,2).
inline int padded_inner_length(const Partition& lambda, const Partition& mu) {
  std::size_t l = trim(lambda).size(), r = trim(mu).size();
  return int(r + (l + r) % 2);
}

inline VerificationReport verify_jozefiak_pragacz(int max_size, int k) {
  VerificationReport rep;
  rep.theorem = "q-jacobi-trudi";
  rep.n = max_size;
  for (int m = 0; m <= max_size; ++m)
    for (auto& lambda : strict_partitions(m))
      for (int mm = 0; mm <= m; ++mm)
        for (auto& mu : strict_partitions(mm)) {
          SkewShape s;
          try {
            s = SkewShape::make(lambda, mu);
          } catch (const InvalidShape&) {
            continue;
          }
          const Polynomial& q = schur_q(s, k);
          Polynomial pf = pfaffian(q_jt_matrix(lambda, mu, k));
          rep.add(s.to_string(), IdentityCheck::compare(pf, q));
          int r = padded_inner_length(lambda, mu);
          Polynomial alt = pfaffian(q_jt_matrix(lambda, mu, k, false, true));
          if ((r * (r - 1) / 2) % 2) alt = -alt;
          rep.add(s.to_string() + " alt-columns", IdentityCheck::compare(pf, alt));
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Expansions.

// Exponent vector of a monomial in x_1..x_k, or nullopt if it involves
// anything else.
inline std::optional<std::vector<int>> exponents(const Monomial& m, int k) {
  std::vector<int> e(std::size_t(k), 0);
  for (auto& [code, ex] : m.factors()) {
    Variable v = Variable::from_code(code);
    if (v.kind() != Variable::Kind::Indeterminate || v.first() > k) return std::nullopt;
    e[std::size_t(v.first() - 1)] = int(ex);
  }
  return e;
}

inline int variable_count(const Polynomial& f) {
  int k = 0;
  for (auto& v : f.variables()) {
    if (v.kind() != Variable::Kind::Indeterminate) return -1;
    k = std::max(k, v.first());
  }
  return k;
}

struct QExpansion {
  std::map<Partition, Rational> coefficients;
  bool remainder = false;
  Polynomial rest;  // what was left when elimination stopped

  bool nonnegative() const {
    if (remainder) return false;
    for (auto& [p, c] : coefficients)
      if (c < 0) return false;
    return true;
  }
  std::string to_string() const {
    std::string s;
    for (auto& [p, c] : coefficients) {
      if (!s.empty()) s += " + ";
      s += rational_to_string(c) + "*Q" + partition_to_string(p);
    }
    if (s.empty()) s = "0";
    if (remainder) s += " + remainder(" + rest.to_string() + ")";
    return s;
  }
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [p, c] : coefficients) j[partition_to_string(p)] = rational_to_string(c);
    return j;
  }
};

// Largest degree for which every strict partition has at most k parts.
inline int injective_degree(int k) { return (k + 1) * (k + 2) / 2 - 1; }

// Triangular elimination against Q_λ(x_1..x_k), always removing the
// lex-greatest monomial. Strict partitions of degree <= dmax need at most k
// parts for the truncated Q_λ to be independent.
inline QExpansion expand_in_q_basis(const Polynomial& f, int k, int dmax = -1) {
  if (dmax < 0)
    for (auto& t : f.terms()) dmax = std::max(dmax, int(t.first.degree()));
  if (dmax > injective_degree(k))
    throw InsufficientVariables("degree " + std::to_string(dmax) + " needs more than " + std::to_string(k) +
                                " variables");
  QExpansion out;
  Polynomial g = f;
  while (!g.is_zero()) {
    // lex-greatest exponent vector
    std::optional<std::vector<int>> best;
    Rational coeff;
    for (auto& [m, c] : g.terms()) {
      auto e = exponents(m, k);
      if (!e) {
        out.remainder = true;
        out.rest = g;
        return out;
      }
      if (!best || *e > *best) {
        best = e;
        coeff = c;
      }
    }
    Partition lam = trim(*best);
    bool strict = is_strict(lam);
    for (std::size_t i = 0; i + 1 < best->size() && strict; ++i)
      if ((*best)[i] == 0 && (*best)[i + 1] != 0) strict = false;
    if (!strict) {
      out.remainder = true;
      out.rest = g;
      return out;
    }
    Rational c = coeff;
    c /= Rational(mpz_class(1) << lam.size());
    out.coefficients[lam] += c;
    g -= schur_q(lam, k).scaled(c);
  }
  for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
    it = it->second == 0 ? out.coefficients.erase(it) : std::next(it);
  return out;
}

inline Polynomial recombine(const QExpansion& e, int k) {
  Polynomial s;
  for (auto& [p, c] : e.coefficients) s += schur_q(p, k).scaled(c);
  return s;
}

struct MonomialExpansion {
  bool symmetric = false;
  std::map<Partition, Rational> coefficients;
  bool nonnegative() const {
    if (!symmetric) return false;
    for (auto& [p, c] : coefficients)
      if (c < 0) return false;
    return true;
  }
};

// Coefficients on the monomial symmetric functions m_λ in k variables.
inline MonomialExpansion monomial_expand(const Polynomial& f, int k) {
  MonomialExpansion out;
  std::map<Partition, std::map<std::vector<int>, Rational>> orbits;
  for (auto& [m, c] : f.terms()) {
    auto e = exponents(m, k);
    if (!e) return out;
    Partition p = *e;
    std::sort(p.rbegin(), p.rend());
    orbits[trim(p)][*e] = c;
  }
  for (auto& [p, members] : orbits) {
    Partition full = p;
    full.resize(std::size_t(k), 0);
    std::sort(full.begin(), full.end());
    std::size_t orbit = 0;
    do ++orbit;
    while (std::next_permutation(full.begin(), full.end()));
    if (members.size() != orbit) return out;
    const Rational& c0 = members.begin()->second;
    for (auto& [e, c] : members)
      if (c != c0) return out;
    out.coefficients[p] = c0;
  }
  out.symmetric = true;
  return out;
}

// ---------------------------------------------------------------------------
// Cell transfer.

inline Partition coordinatewise(const Partition& a, const Partition& b, bool take_max) {
  Partition out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    out[i] = take_max ? std::max(x, y) : std::min(x, y);
  }
  return trim(out);
}

inline std::pair<SkewShape, SkewShape> join_meet(const SkewShape& s, const SkewShape& t) {
  Partition jl = coordinatewise(s.lambda, t.lambda, true), jm = coordinatewise(s.mu, t.mu, true);
  Partition ml = coordinatewise(s.lambda, t.lambda, false), mm = coordinatewise(s.mu, t.mu, false);
  if (!is_strict(jl) || !is_strict(jm) || !is_strict(ml) || !is_strict(mm))
    throw std::logic_error("cell transfer produced a non-strict partition");
  // validated containment
  return {SkewShape::make(jl, jm), SkewShape::make(ml, mm)};
}

inline std::pair<Partition, Partition> sort_split(const Partition& a, const Partition& b) {
  Partition u = trim(a);
  for (int x : trim(b)) u.push_back(x);
  std::sort(u.rbegin(), u.rend());
  Partition s1, s2;
  for (std::size_t i = 0; i < u.size(); ++i) (i % 2 ? s2 : s1).push_back(u[i]);
  if (is_strict(a) && is_strict(b) && (!is_strict(s1) || !is_strict(s2)))
    throw std::logic_error("sort split of strict partitions is not strict");
  return {s1, s2};
}

// ---------------------------------------------------------------------------
// Min-partition difference against the cell-transfer difference, μ = ρ = ∅.

inline Partition pad_even(Partition p) {
  p = trim(p);
  if (p.size() % 2) p.push_back(0);
  return p;
}

inline IdentityCheck verify_min_difference_q(const Partition& lambda, const Partition& nu, int k) {
  Partition a = pad_even(lambda), b = pad_even(nu);
  // π: all parts, weakly decreasing; I: positions taken by a
  std::vector<std::pair<int, int>> parts;  // (value, owner)
  for (int x : a) parts.emplace_back(x, 0);
  for (int x : b) parts.emplace_back(x, 1);
  std::stable_sort(parts.begin(), parts.end(), [](auto& l, auto& r) { return l.first > r.first; });
  Partition pi;
  Subset I;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    pi.push_back(parts[i].first);
    if (parts[i].second == 0) I.push_back(int(i) + 1);
  }
  int m = int(pi.size());
  SkewArray A(m);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) A.set(i, j, q_pair(pi[std::size_t(i - 1)], pi[std::size_t(j - 1)], k));
  Subset big = I.size() * 2 >= std::size_t(m) ? I : complement(I, m);
  Subset mn = min_partition(big, m);
  Polynomial lhs = complementary_pfaffian(A, mn) - complementary_pfaffian(A, I);
  auto [j, mt] = join_meet(SkewShape::make(lambda), SkewShape::make(nu));
  Polynomial rhs = schur_q(j, k) * schur_q(mt, k) - schur_q(lambda, k) * schur_q(nu, k);
  return IdentityCheck::compare(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Scanners. They classify and report; nothing here asserts a conjecture.

struct ScanVerdict {
  std::string conjecture;
  std::string instance;
  std::string verdict;  // positive | counterexample | not-in-Q-span
  QExpansion expansion;

  nlohmann::json to_json() const {
    return {{"conjecture", conjecture}, {"instance", instance}, {"verdict", verdict}, {"expansion", expansion.to_json()}};
  }
};

inline void write_jsonl(std::ostream& out, const std::vector<ScanVerdict>& vs) {
  for (auto& v : vs) out << v.to_json().dump() << "\n";
}

struct ScanSummary {
  long instances = 0, positive = 0, counterexamples = 0, not_in_span = 0;
  void count(const ScanVerdict& v) {
    ++instances;
    if (v.verdict == "positive") ++positive;
    else if (v.verdict == "counterexample") ++counterexamples;
    else ++not_in_span;
  }
};

inline constexpr int kScanVariables = 4;

// A negative expansion is recomputed with one more variable before it is
// reported as a counterexample.
inline ScanVerdict classify(std::string conjecture, std::string instance, const std::function<Polynomial(int)>& make,
                            int k) {
  ScanVerdict v{std::move(conjecture), std::move(instance), "positive", expand_in_q_basis(make(k), k)};
  if (v.expansion.remainder) {
    v.verdict = "not-in-Q-span";
  } else if (!v.expansion.nonnegative()) {
    auto again = expand_in_q_basis(make(k + 1), k + 1);
    v.verdict = again.nonnegative() ? "positive" : "counterexample";
    v.expansion = again;
  }
  return v;
}

// All skew shifted shapes with |λ| <= max_outer.
inline std::vector<SkewShape> skew_shapes(int max_outer) {
  std::vector<SkewShape> out;
  for (int m = 0; m <= max_outer; ++m)
    for (auto& lambda : strict_partitions(m))
      for (int mm = 0; mm <= m; ++mm)
        for (auto& mu : strict_partitions(mm)) {
          try {
            out.push_back(SkewShape::make(lambda, mu));
          } catch (const InvalidShape&) {
          }
        }
  return out;
}

inline std::vector<ScanVerdict> scan_cell_transfer(int bound, int k = kScanVariables, int jobs = 1) {
  auto shapes = skew_shapes(bound);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = a; b < shapes.size(); ++b)
      if (weight(shapes[a].lambda) + weight(shapes[b].lambda) <= bound) pairs.emplace_back(a, b);
  std::vector<ScanVerdict> out(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const SkewShape& s = shapes[pairs[i].first];
    const SkewShape& t = shapes[pairs[i].second];
    auto [j, m] = join_meet(s, t);
    out[i] = classify("con2", s.to_string() + " ; " + t.to_string(), [&](int kk) {
      return schur_q(j, kk) * schur_q(m, kk) - schur_q(s, kk) * schur_q(t, kk);
    }, k);
  });
  return out;
}

inline std::vector<ScanVerdict> scan_sort(int bound, int k = kScanVariables, int jobs = 1) {
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (auto& l : strict_partitions(a))
        for (auto& m : strict_partitions(b))
          if (std::make_pair(a, l) <= std::make_pair(b, m)) pairs.emplace_back(l, m);
  std::vector<ScanVerdict> out(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    auto& [l, m] = pairs[i];
    auto [s1, s2] = sort_split(l, m);
    out[i] = classify("con3", partition_to_string(l) + " ; " + partition_to_string(m), [&](int kk) {
      return schur_q(s1, kk) * schur_q(s2, kk) - schur_q(l, kk) * schur_q(m, kk);
    }, k);
  });
  return out;
}

// Shapes whose Q-Jacobi-Trudi array has size 2n: l + r (after the zero pad)
// equal to 2n, |λ| <= bound. With `generalized`, λ and μ range over weakly
// decreasing sequences with μ_i <= λ_i as well.
inline std::vector<std::pair<Partition, Partition>> jt_shapes(int n, int bound, bool generalized = false) {
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<Partition> outers, inners;
  std::function<void(Partition&, int, int, bool, std::vector<Partition>&)> gen =
      [&](Partition& cur, int rest, int maxp, bool strict, std::vector<Partition>& sink) {
        sink.push_back(cur);
        for (int p = std::min(rest, maxp); p >= 1; --p) {
          cur.push_back(p);
          gen(cur, rest - p, strict ? p - 1 : p, strict, sink);
          cur.pop_back();
        }
      };
  Partition cur;
  gen(cur, bound, bound, !generalized, outers);
  for (auto& l : outers) {
    if (l.empty()) continue;
    for (auto& m : outers) {
      if (m.size() > l.size()) continue;
      bool inside = true;
      for (std::size_t i = 0; i < m.size() && inside; ++i) inside = m[i] <= l[i];
      if (!inside) continue;
      std::size_t len = l.size() + m.size();
      if (len % 2) ++len;
      if (int(len) != 2 * n) continue;
      if (!generalized) {
        try {
          SkewShape::make(l, m);
        } catch (const InvalidShape&) {
          continue;
        }
      }
      out.emplace_back(l, m);
    }
  }
  return out;
}

// Pfaf'_D evaluated on Q-Jacobi-Trudi arrays of size 2n.
inline std::vector<ScanVerdict> scan_con1(int n, int bound, int k = kScanVariables, bool generalized = false,
                                          std::uint64_t seed = 0) {
  std::vector<ScanVerdict> out;
  for (auto& [l, m] : jt_shapes(n, bound, generalized)) {
    std::map<int, std::unique_ptr<PfaffinantEvaluator>> evs;
    auto ev = [&](int kk) -> const PfaffinantEvaluator& {
      auto& p = evs[kk];
      if (!p) p = std::make_unique<PfaffinantEvaluator>(q_jt_matrix(l, m, kk, generalized), seed);
      return *p;
    };
    for (auto& d : enumerate_sym_tl(n)) {
      std::string inst = d.key() + " @ " + partition_to_string(l) + "/" + partition_to_string(m);
      out.push_back(classify("con1", inst, [&](int kk) { return ev(kk).diagram_pfaffinant(d); }, k));
    }
  }
  return out;
}

// Monomial positivity of Pfaf'_D(A_{λ/μ}) for every D in T_n and every shape
// with l + r = 2n, |λ| <= bound. Failures carry the first negative term.
inline VerificationReport verify_monomial_positivity(int n, int bound, int k = kScanVariables,
                                                     bool tl_pfaffinants = false, std::uint64_t seed = 0) {
  VerificationReport rep;
  rep.theorem = tl_pfaffinants ? "monomial-positivity-tl" : "monomial-positivity";
  rep.n = n;
  for (auto& [l, m] : jt_shapes(n, bound)) {
    PfaffinantEvaluator ev(q_jt_matrix(l, m, k), seed);
    for (auto& d : enumerate_sym_tl(n)) {
      if (tl_pfaffinants && !d.is_even()) continue;
      Polynomial f = tl_pfaffinants ? ev.tl_pfaffinant(d) : ev.diagram_pfaffinant(d);
      auto me = monomial_expand(f, k);
      std::string why;
      if (!me.symmetric) why = "not symmetric";
      else
        for (auto& [p, c] : me.coefficients)
          if (c < 0) {
            why = "m" + partition_to_string(p) + " has coefficient " + rational_to_string(c);
            break;
          }
      rep.add(d.key() + " @ " + partition_to_string(l) + "/" + partition_to_string(m), why.empty(), why);
    }
  }
  return rep;
}

}  // namespace pfaflab
