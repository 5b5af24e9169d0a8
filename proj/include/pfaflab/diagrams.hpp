#pragma once

// Matchings, symmetric Temperley-Lieb diagrams and ordinary TL diagrams.
//
// A symmetric diagram on [2n] u [2n]' is stored by its left vertical edges;
// every other left point i is joined horizontally to i', and the right side is
// the mirror image. Subsets of [2n] are sorted std::vector<int>, 1-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaflab/errors.hpp"

namespace pfaflab {

using Subset = std::vector<int>;
using Edge = std::pair<int, int>;

inline constexpr int kMaxSymDiagramN = 8;  // 2n points fit the 32-bit code

inline Subset complement(const Subset& s, int m) {
  Subset c;
  std::size_t k = 0;
  for (int i = 1; i <= m; ++i) {
    if (k < s.size() && s[k] == i) ++k;
    else c.push_back(i);
  }
  return c;
}

inline std::uint32_t subset_mask(const Subset& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= 1u << (i - 1);
  return m;
}

inline Subset mask_subset(std::uint32_t m) {
  Subset s;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i + 1);
  return s;
}

inline std::string subset_to_string(const Subset& s) {
  std::string r = "{";
  for (std::size_t k = 0; k < s.size(); ++k) r += (k ? "," : "") + std::to_string(s[k]);
  return r + "}";
}

inline std::string edges_to_string(const std::vector<Edge>& es) {
  std::string s;
  for (auto& [i, j] : es) s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return s;
}

// Parse "(1,2)(3,4)" or "(1,2),(3,4)" with optional surrounding braces.
inline std::vector<Edge> parse_edge_list(std::string_view s) {
  std::vector<Edge> es;
  std::size_t p = 0;
  auto num = [&]() {
    while (p < s.size() && s[p] == ' ') ++p;
    std::size_t b = p;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
    if (b == p) throw std::invalid_argument("bad edge list: " + std::string(s));
    return std::stoi(std::string(s.substr(b, p - b)));
  };
  while (p < s.size()) {
    char c = s[p];
    if (c == '(') {
      ++p;
      int i = num();
      while (p < s.size() && s[p] == ' ') ++p;
      if (p >= s.size() || s[p] != ',') throw std::invalid_argument("bad edge list: " + std::string(s));
      ++p;
      int j = num();
      while (p < s.size() && s[p] == ' ') ++p;
      if (p >= s.size() || s[p] != ')') throw std::invalid_argument("bad edge list: " + std::string(s));
      ++p;
      es.emplace_back(std::min(i, j), std::max(i, j));
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      ++p;
    } else {
      throw std::invalid_argument("bad edge list: " + std::string(s));
    }
  }
  std::sort(es.begin(), es.end());
  return es;
}

// ---------------------------------------------------------------------------
// Perfect matchings of an ordered vertex set.

struct Matching {
  std::vector<Edge> edges;  // each (i, j) with i < j, sorted

  std::size_t size() const { return edges.size(); }
  std::string key() const { return "M[" + edges_to_string(edges) + "]"; }
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

inline void for_each_matching(const std::vector<int>& verts, const std::function<void(const Matching&)>& f) {
  if (verts.size() % 2) return;
  Matching cur;
  std::vector<char> used(verts.size(), 0);
  std::function<void()> rec = [&]() {
    std::size_t a = 0;
    while (a < verts.size() && used[a]) ++a;
    if (a == verts.size()) {
      Matching m = cur;
      std::sort(m.edges.begin(), m.edges.end());
      f(m);
      return;
    }
    used[a] = 1;
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (used[b]) continue;
      used[b] = 1;
      cur.edges.emplace_back(verts[a], verts[b]);
      rec();
      cur.edges.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec();
}

inline std::vector<Matching> enumerate_matchings(int n, int bound = 6) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  check_bound("matching size n", n, bound);
  std::vector<int> v(2 * n);
  for (int i = 0; i < 2 * n; ++i) v[i] = i + 1;
  std::vector<Matching> out;
  for_each_matching(v, [&](const Matching& m) { out.push_back(m); });
  return out;
}

inline int crossing_number(const Matching& m) {
  int c = 0;
  for (auto& [i, j] : m.edges)
    for (auto& [k, l] : m.edges)
      if (i < k && k < j && j < l) ++c;
  return c;
}

inline int matching_sign(const Matching& m) { return crossing_number(m) % 2 ? -1 : 1; }

// ---------------------------------------------------------------------------
// Symmetric TL diagrams.

class SymTLDiagram {
 public:
  SymTLDiagram() = default;

  static SymTLDiagram from_edges(int n, std::vector<Edge> edges) {
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    SymTLDiagram d(n, std::move(edges));
    if (!d.valid()) throw std::invalid_argument("not a symmetric TL diagram: " + d.key());
    return d;
  }
  static std::optional<SymTLDiagram> try_from_edges(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    SymTLDiagram d(n, std::move(edges));
    if (!d.valid()) return std::nullopt;
    return d;
  }
  static SymTLDiagram from_key(int n, std::string_view key) {
    std::string_view s = key;
    if (s.size() >= 3 && s.substr(0, 2) == "V[" && s.back() == ']') s = s.substr(2, s.size() - 3);
    return from_edges(n, parse_edge_list(s));
  }

  // Two bits per point: 0 horizontal, 1 opens a vertical edge, 2 closes one.
  std::uint32_t code() const {
    std::uint32_t c = 0;
    for (auto& [i, j] : v_) c |= (1u << 2 * (i - 1)) | (2u << 2 * (j - 1));
    return c;
  }
  static SymTLDiagram from_code(int n, std::uint32_t c) {
    std::vector<Edge> es;
    std::vector<int> stack;
    for (int p = 1; p <= 2 * n; ++p) {
      unsigned t = (c >> 2 * (p - 1)) & 3u;
      if (t == 1) stack.push_back(p);
      else if (t == 2) {
        es.emplace_back(stack.back(), p);
        stack.pop_back();
      }
    }
    std::sort(es.begin(), es.end());
    return SymTLDiagram(n, std::move(es));
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return v_; }
  int order() const { return int(v_.size()); }
  bool is_even() const { return v_.size() % 2 == 0; }

  // partner[i] = j for a vertical edge, 0 for a horizontal point; index 0 unused.
  std::vector<int> partner() const {
    std::vector<int> p(2 * n_ + 1, 0);
    for (auto& [i, j] : v_) p[i] = j, p[j] = i;
    return p;
  }
  Subset horizontal_points() const {
    auto p = partner();
    Subset h;
    for (int i = 1; i <= 2 * n_; ++i)
      if (!p[i]) h.push_back(i);
    return h;
  }

  std::string key() const { return "V[" + edges_to_string(v_) + "]"; }

  friend auto operator<=>(const SymTLDiagram&, const SymTLDiagram&) = default;

 private:
  SymTLDiagram(int n, std::vector<Edge> v) : n_(n), v_(std::move(v)) {}

  bool valid() const {
    if (n_ < 0) return false;
    std::vector<int> seen(2 * n_ + 1, 0);
    for (auto& [i, j] : v_) {
      if (i < 1 || j > 2 * n_ || i >= j || seen[i] || seen[j]) return false;
      seen[i] = seen[j] = 1;
    }
    for (auto& [i, j] : v_) {
      for (auto& [k, l] : v_)
        if (i < k && k < j && j < l) return false;
      for (int h = i + 1; h < j; ++h)
        if (!seen[h]) return false;  // a horizontal strand would cross (i,j)
    }
    return true;
  }

  int n_ = 0;
  std::vector<Edge> v_;
};

inline Subset i_set(const SymTLDiagram& d) {
  auto p = d.partner();
  Subset s;
  for (int i = 1; i <= 2 * d.n(); ++i)
    if (!p[i] || p[i] > i) s.push_back(i);
  return s;
}

// I precedes J: larger sets first, then lexicographic.
inline bool prec_less(const Subset& I, const Subset& J) {
  if (I.size() != J.size()) return I.size() > J.size();
  return I < J;
}

inline bool diagram_less(const SymTLDiagram& a, const SymTLDiagram& b) {
  return prec_less(i_set(a), i_set(b));
}

inline std::vector<SymTLDiagram> enumerate_sym_tl(int n, int bound = kMaxSymDiagramN) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  check_bound("symmetric diagram size n", n, std::min(bound, kMaxSymDiagramN));
  std::vector<SymTLDiagram> out;
  std::vector<Edge> es;
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int p) {
    if (p > 2 * n) {
      if (stack.empty()) out.push_back(SymTLDiagram::from_edges(n, es));
      return;
    }
    int left = 2 * n - p + 1;
    if (stack.empty()) rec(p + 1);  // horizontal
    if (int(stack.size()) + 1 <= left - 1) {
      stack.push_back(p);
      rec(p + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      es.emplace_back(i, p);
      rec(p + 1);
      es.pop_back();
      stack.push_back(i);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), diagram_less);
  return out;
}

inline std::vector<SymTLDiagram> enumerate_sym_tl_even(int n, int bound = kMaxSymDiagramN) {
  auto all = enumerate_sym_tl(n, bound);
  std::vector<SymTLDiagram> ev;
  for (auto& d : all)
    if (d.is_even()) ev.push_back(d);
  return ev;
}

// Blacken left endpoints of vertical edges, then the largest remaining points.
inline Subset subset_bijection(const SymTLDiagram& d) {
  int n = d.n();
  std::vector<char> black(2 * n + 1, 0);
  auto partner = d.partner();
  int count = 0;
  for (auto& e : d.edges()) black[e.first] = 1, ++count;
  // the rightmost unmatched points make up the rest
  for (int i = 2 * n; i >= 1 && count < n; --i)
    if (!partner[i]) black[i] = 1, ++count;
  Subset s;
  for (int i = 1; i <= 2 * n; ++i)
    if (black[i]) s.push_back(i);
  return s;
}

inline SymTLDiagram subset_bijection_inv(int n, const Subset& blacks) {
  if (int(blacks.size()) != n) throw std::invalid_argument("subset must have n elements");
  std::vector<char> black(2 * n + 1, 0), used(2 * n + 1, 0);
  for (int b : blacks) black[b] = 1;
  std::vector<Edge> es;
  for (int i = 2 * n; i >= 1; --i) {
    if (!black[i]) continue;
    for (int j = i + 1; j <= 2 * n; ++j)
      if (!black[j] && !used[j]) {
        used[j] = 1;
        es.emplace_back(i, j);
        break;
      }
  }
  return SymTLDiagram::from_edges(n, es);
}

inline SymTLDiagram omega(const SymTLDiagram& d) {
  auto p = d.partner();
  std::vector<Edge> es = d.edges();
  if (d.n() == 0) return d;
  if (!p[1]) {
    int i = 2;
    while (p[i]) ++i;
    es.emplace_back(1, i);
  } else {
    es.erase(std::find(es.begin(), es.end(), Edge(1, p[1])));
  }
  return SymTLDiagram::from_edges(d.n(), es);
}

// Closure of {d} under removing one odd edge (i odd) at a time, keeping only
// removals that leave a valid diagram.
inline std::vector<SymTLDiagram> s_closure(const SymTLDiagram& d) {
  std::set<SymTLDiagram> seen{d};
  std::vector<SymTLDiagram> todo{d};
  while (!todo.empty()) {
    SymTLDiagram cur = todo.back();
    todo.pop_back();
    for (std::size_t k = 0; k < cur.edges().size(); ++k) {
      if (cur.edges()[k].first % 2 == 0) continue;
      auto es = cur.edges();
      es.erase(es.begin() + long(k));
      auto nd = SymTLDiagram::try_from_edges(cur.n(), es);
      if (nd && seen.insert(*nd).second) todo.push_back(*nd);
    }
  }
  std::vector<SymTLDiagram> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), diagram_less);
  return out;
}

inline void check_even_subset(const Subset& I) {
  if (I.size() % 2) throw OddSubset("subset " + subset_to_string(I) + " has odd size");
}

inline bool is_compatible(const SymTLDiagram& d, const Subset& I) {
  check_even_subset(I);
  std::uint32_t m = subset_mask(I);
  for (auto& [i, j] : d.edges())
    if (bool(m >> (i - 1) & 1) == bool(m >> (j - 1) & 1)) return false;
  return true;
}

inline std::vector<SymTLDiagram> compatible_diagrams(const Subset& I, int n) {
  check_even_subset(I);
  std::vector<SymTLDiagram> out;
  for (auto& d : enumerate_sym_tl(n))
    if (is_compatible(d, I)) out.push_back(d);
  return out;
}

inline std::vector<SymTLDiagram> i_maximal_diagrams(const Subset& I, int n) {
  auto comp = compatible_diagrams(I, n);
  std::set<SymTLDiagram> covered;
  for (auto& d : comp)
    for (auto& e : s_closure(d))
      if (!(e == d)) covered.insert(e);
  std::vector<SymTLDiagram> out;
  for (auto& d : comp)
    if (d.is_even() && !covered.count(d)) out.push_back(d);
  return out;
}

inline std::vector<Subset> even_subsets(int m) {
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    if (__builtin_popcount(mask) % 2 == 0) out.push_back(mask_subset(mask));
  std::sort(out.begin(), out.end(), prec_less);
  return out;
}

// (I, Ibar) standard: |I| >= |Ibar| and i_k < j_k for every k <= |Ibar|.
inline bool is_standard(const Subset& I, const Subset& Ibar) {
  if (I.size() < Ibar.size()) return false;
  for (std::size_t k = 0; k < Ibar.size(); ++k)
    if (I[k] >= Ibar[k]) return false;
  return true;
}

inline std::pair<Subset, Subset> standard_partition(const SymTLDiagram& d) {
  Subset I = i_set(d);
  return {I, complement(I, 2 * d.n())};
}

// Greedy inverse: each j in Ibar, ascending, is joined to the largest free
// element of I below it.
inline SymTLDiagram standard_partition_inv(int n, const Subset& I, const Subset& Ibar) {
  if (int(I.size() + Ibar.size()) != 2 * n || complement(I, 2 * n) != Ibar)
    throw std::invalid_argument("not a partition of [2n]");
  if (!is_standard(I, Ibar))
    throw NotStandard("partition " + subset_to_string(I) + "|" + subset_to_string(Ibar) + " is not standard");
  std::vector<char> taken(2 * n + 1, 0);
  std::vector<Edge> es;
  for (int j : Ibar) {
    int best = 0;
    for (int i : I)
      if (i < j && !taken[i]) best = i;
    if (!best) throw NotStandard("greedy inverse failed at " + std::to_string(j));
    taken[best] = 1;
    es.emplace_back(best, j);
  }
  auto d = SymTLDiagram::try_from_edges(n, es);
  if (!d) throw NotStandard("greedy inverse produced an invalid diagram");
  return *d;
}

// ---------------------------------------------------------------------------
// Ordinary TL diagrams on 2n points: 1..n top to bottom on the left, n+1..2n
// bottom to top on the right.

class OrdinaryTLDiagram {
 public:
  OrdinaryTLDiagram() = default;
  static OrdinaryTLDiagram from_edges(int n, std::vector<Edge> es) {
    for (auto& e : es)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    OrdinaryTLDiagram d(n, std::move(es));
    if (!d.valid()) throw std::invalid_argument("not a TL diagram: " + d.key());
    return d;
  }
  static OrdinaryTLDiagram from_key(int n, std::string_view key) {
    std::string_view s = key;
    if (s.size() >= 3 && s.substr(0, 2) == "T[" && s.back() == ']') s = s.substr(2, s.size() - 3);
    return from_edges(n, parse_edge_list(s));
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return e_; }
  std::string key() const { return "T[" + edges_to_string(e_) + "]"; }
  std::vector<int> partner() const {
    std::vector<int> p(2 * n_ + 1, 0);
    for (auto& [i, j] : e_) p[i] = j, p[j] = i;
    return p;
  }
  // Edges with both ends among the left points 1..n.
  int left_cap_count() const {
    int z = 0;
    for (auto& [i, j] : e_)
      if (j <= n_) ++z;
    return z;
  }

  friend auto operator<=>(const OrdinaryTLDiagram&, const OrdinaryTLDiagram&) = default;

 private:
  OrdinaryTLDiagram(int n, std::vector<Edge> e) : n_(n), e_(std::move(e)) {}
  bool valid() const {
    if (int(e_.size()) != n_) return false;
    std::vector<int> seen(2 * n_ + 1, 0);
    for (auto& [i, j] : e_) {
      if (i < 1 || j > 2 * n_ || i >= j || seen[i] || seen[j]) return false;
      seen[i] = seen[j] = 1;
    }
    for (auto& [i, j] : e_)
      for (auto& [k, l] : e_)
        if (i < k && k < j && j < l) return false;
    return true;
  }

  int n_ = 0;
  std::vector<Edge> e_;
};

inline std::vector<OrdinaryTLDiagram> enumerate_tl(int n, int bound = 8) {
  check_bound("TL diagram size n", n, bound);
  std::vector<OrdinaryTLDiagram> out;
  std::vector<int> v(2 * n);
  for (int i = 0; i < 2 * n; ++i) v[i] = i + 1;
  std::vector<Edge> es;
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int p) {
    if (p > 2 * n) {
      if (stack.empty()) out.push_back(OrdinaryTLDiagram::from_edges(n, es));
      return;
    }
    if (int(stack.size()) < 2 * n - p + 1) {
      stack.push_back(p);
      rec(p + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      es.emplace_back(i, p);
      rec(p + 1);
      es.pop_back();
      stack.push_back(i);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_compatible(const OrdinaryTLDiagram& d, const Subset& S) {
  std::uint32_t m = subset_mask(S);
  for (auto& [i, j] : d.edges())
    if (bool(m >> (i - 1) & 1) == bool(m >> (j - 1) & 1)) return false;
  return true;
}

}  // namespace pfaflab
