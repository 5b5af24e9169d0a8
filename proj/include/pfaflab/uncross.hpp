#pragma once

// Mirror-symmetric straight-chord embeddings of nu(pi) and nu(d), and the
// coefficient functions f_D(pi) and g_D(d) obtained by resolving crossings.
//
// Boundary points: left i (1..2n) has id i-1, right i' has id 2n+i-1. They sit
// on the unit circle at (-c_i, s_i) and (c_i, s_i) with
// (c, s) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) and t_1 > t_2 > ... > t_2n in (-1, 1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/poly.hpp"
#include "pfaflab/tangle.hpp"

namespace pfaflab {

struct Point {
  Rational x, y;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

class ChordMap {
 public:
  struct Chord {
    int from, to;  // boundary ids; for left-right chords `from` is the left end
  };
  struct Crossing {
    int c1, c2;         // chord indices, c1 < c2
    Point at;
    Rational along1, along2;  // affine parameter along each chord from its `from` end
    bool unpaired = false;
    int mirror = -1;    // index of the mirror crossing (itself when unpaired)
  };

  int n() const { return n_; }
  const std::vector<Rational>& params() const { return t_; }
  const std::vector<Chord>& chords() const { return chords_; }
  const std::vector<Crossing>& crossings() const { return xs_; }
  int attempts() const { return attempts_; }

  int unpaired_count() const {
    int c = 0;
    for (auto& x : xs_) c += x.unpaired;
    return c;
  }
  int paired_orbit_count() const { return (int(xs_.size()) - unpaired_count()) / 2; }
  int class_count() const { return unpaired_count() + paired_orbit_count(); }

  Point position(int b) const {
    int i = b < 2 * n_ ? b + 1 : b - 2 * n_ + 1;
    const Rational& t = t_[std::size_t(i - 1)];
    Rational den = 1 + t * t;
    Rational c = (1 - t * t) / den, s = 2 * t / den;
    return b < 2 * n_ ? Point{-c, s} : Point{c, s};
  }
  int mirror_point(int b) const { return b < 2 * n_ ? b + 2 * n_ : b - 2 * n_; }
  bool is_left(int b) const { return b < 2 * n_; }

  // Combinatorial type: for every chord, the sequence of chords it meets.
  std::string signature() const {
    std::string s;
    auto t = tangle();
    for (std::size_t c = 0; c < t.strands.size(); ++c) {
      s += std::to_string(c) + ":";
      for (int x : t.strands[c].crossings) {
        auto& cr = xs_[std::size_t(x)];
        s += std::to_string(cr.c1 == int(c) ? cr.c2 : cr.c1) + ",";
      }
      s += ";";
    }
    return s;
  }

  Tangle tangle() const {
    Tangle t;
    t.boundary_points = 4 * n_;
    t.strands.resize(chords_.size());
    for (std::size_t c = 0; c < chords_.size(); ++c) {
      t.strands[c].start = chords_[c].from;
      t.strands[c].end = chords_[c].to;
    }
    std::vector<std::vector<std::pair<Rational, int>>> along(chords_.size());
    for (std::size_t k = 0; k < xs_.size(); ++k) {
      along[std::size_t(xs_[k].c1)].emplace_back(xs_[k].along1, int(k));
      along[std::size_t(xs_[k].c2)].emplace_back(xs_[k].along2, int(k));
    }
    t.crossings.resize(xs_.size());
    for (std::size_t c = 0; c < chords_.size(); ++c) {
      std::sort(along[c].begin(), along[c].end(),
                [](auto& l, auto& r) { return l.first < r.first; });
      for (std::size_t p = 0; p < along[c].size(); ++p) {
        int k = along[c][p].second;
        t.strands[c].crossings.push_back(k);
        auto& tx = t.crossings[std::size_t(k)];
        if (xs_[std::size_t(k)].c1 == int(c)) tx.a = int(c), tx.pa = int(p);
        else tx.b = int(c), tx.pb = int(p);
      }
    }
    std::vector<int> cls(xs_.size(), -1);
    for (std::size_t k = 0; k < xs_.size(); ++k) {
      if (cls[k] >= 0) continue;
      cls[k] = t.num_classes;
      cls[std::size_t(xs_[k].mirror)] = t.num_classes;
      t.class_unpaired.push_back(xs_[k].unpaired);
      ++t.num_classes;
    }
    for (std::size_t k = 0; k < xs_.size(); ++k) t.crossings[k].cls = cls[k];
    t.strand_mirror = mirror_;
    for (std::size_t c = 0; c < chords_.size(); ++c) {
      auto& m = chords_[std::size_t(mirror_[c])];
      t.strand_mirror_reversed.push_back(mirror_point(chords_[c].from) == m.to);
    }
    return t;
  }

  // Places the chords (given as boundary-id pairs, closed under the mirror)
  // and computes all crossings exactly. Re-places deterministically while
  // three or more chords are concurrent.
  static ChordMap build(int n, std::vector<Chord> chords, std::uint64_t seed) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      ChordMap m;
      m.n_ = n;
      m.attempts_ = attempt + 1;
      m.t_ = placement(n, seed, attempt);
      m.chords_ = chords;
      for (auto& c : m.chords_)
        if (!m.is_left(c.from) && m.is_left(c.to)) std::swap(c.from, c.to);
      if (m.compute()) return m;
    }
    throw EmbeddingFailed("no generic placement found");
  }

 private:
  static std::vector<Rational> placement(int n, std::uint64_t seed, int attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + std::uint64_t(attempt) * 0xbf58476d1ce4e5b9ull +
                        std::uint64_t(n));
    long den = 997 + 1000L * attempt;
    std::uniform_int_distribution<long> dist(-(den - 1), den - 1);
    std::vector<long> nums;
    while (int(nums.size()) < 2 * n) {
      long v = dist(rng);
      if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
    }
    std::sort(nums.rbegin(), nums.rend());
    std::vector<Rational> t;
    for (long v : nums) t.emplace_back(Rational(v, den));
    for (auto& q : t) q.canonicalize();
    return t;
  }

  static std::pair<int, int> sorted_pair(int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); }

  // Position of boundary id b in the cyclic order of the circle.
  int cyclic(int b) const { return b < 2 * n_ ? b : 6 * n_ - 1 - b; }

  bool interleave(const Chord& p, const Chord& q) const {
    int a = cyclic(p.from), b = cyclic(p.to);
    if (a > b) std::swap(a, b);
    int c = cyclic(q.from), d = cyclic(q.to);
    bool cin = a < c && c < b, din = a < d && d < b;
    return cin != din;
  }

  bool compute() {
    std::map<std::pair<int, int>, int> chord_of;
    for (std::size_t c = 0; c < chords_.size(); ++c) {
      chord_of[sorted_pair(chords_[c].from, chords_[c].to)] = int(c);
    }
    mirror_.assign(chords_.size(), -1);
    for (std::size_t c = 0; c < chords_.size(); ++c) {
      auto it = chord_of.find(sorted_pair(mirror_point(chords_[c].from), mirror_point(chords_[c].to)));
      if (it == chord_of.end()) throw std::invalid_argument("chord set is not mirror symmetric");
      mirror_[c] = it->second;
    }
    xs_.clear();
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t c1 = 0; c1 < chords_.size(); ++c1)
      for (std::size_t c2 = c1 + 1; c2 < chords_.size(); ++c2) {
        auto& p = chords_[c1];
        auto& q = chords_[c2];
        if (!interleave(p, q)) continue;
        if (!(is_left(p.from) && !is_left(p.to) && is_left(q.from) && !is_left(q.to)))
          throw std::logic_error("crossing between chords that are not left-right");
        Point p1 = position(p.from), p2 = position(p.to), p3 = position(q.from), p4 = position(q.to);
        Rational dx1 = p2.x - p1.x, dy1 = p2.y - p1.y, dx2 = p4.x - p3.x, dy2 = p4.y - p3.y;
        Rational den = dx1 * dy2 - dy1 * dx2;
        Rational ex = p3.x - p1.x, ey = p3.y - p1.y;
        Rational lam = (ex * dy2 - ey * dx2) / den;
        Rational mu = (ex * dy1 - ey * dx1) / den;
        Crossing x;
        x.c1 = int(c1);
        x.c2 = int(c2);
        x.at = Point{p1.x + lam * dx1, p1.y + lam * dy1};
        x.along1 = lam;
        x.along2 = mu;
        x.unpaired = mirror_[c1] == int(c2);
        idx[{int(c1), int(c2)}] = int(xs_.size());
        xs_.push_back(std::move(x));
      }
    // no three chords through one point
    std::vector<Point> pts;
    for (auto& x : xs_) pts.push_back(x.at);
    std::sort(pts.begin(), pts.end());
    for (std::size_t k = 1; k < pts.size(); ++k)
      if (pts[k] == pts[k - 1]) return false;
    for (auto& x : xs_) {
      auto it = idx.find(sorted_pair(mirror_[std::size_t(x.c1)], mirror_[std::size_t(x.c2)]));
      if (it == idx.end()) throw std::logic_error("crossing set is not mirror symmetric");
      x.mirror = it->second;
    }
    return true;
  }

  int n_ = 0;
  int attempts_ = 0;
  std::vector<Rational> t_;
  std::vector<Chord> chords_;
  std::vector<int> mirror_;
  std::vector<Crossing> xs_;
};

inline int left_id(int n, int i) { (void)n; return i - 1; }
inline int right_id(int n, int i) { return 2 * n + i - 1; }

inline ChordMap embed_nu_pi(const Matching& pi, int n, std::uint64_t seed = 0) {
  if (int(pi.size()) != n) throw std::invalid_argument("matching size does not match n");
  std::vector<ChordMap::Chord> cs;
  for (auto& [i, j] : pi.edges) {
    cs.push_back({left_id(n, i), right_id(n, j)});
    cs.push_back({left_id(n, j), right_id(n, i)});
  }
  return ChordMap::build(n, cs, seed);
}

// d-point p maps to left p (p <= n) or to right (3n+1-p)' (p > n).
inline ChordMap embed_nu_d(const OrdinaryTLDiagram& d, std::uint64_t seed = 0) {
  int n = d.n();
  auto place = [&](int p) { return p <= n ? left_id(n, p) : right_id(n, 3 * n + 1 - p); };
  auto mirror = [&](int b) { return b < 2 * n ? b + 2 * n : b - 2 * n; };
  std::vector<ChordMap::Chord> cs;
  for (auto& [p, q] : d.edges()) {
    int a = place(p), b = place(q);
    cs.push_back({a, b});
    cs.push_back({mirror(a), mirror(b)});
  }
  return ChordMap::build(n, cs, seed);
}

// Converts a mirror-symmetric non-crossing boundary matching to a diagram.
// Throws std::logic_error when the matching is not of that form.
inline std::uint32_t boundary_to_diagram_code(int n, const std::vector<int>& partner) {
  std::uint32_t code = 0;
  for (int b = 0; b < 2 * n; ++b) {
    int p = partner[std::size_t(b)];
    if (p < 0) throw std::logic_error("unmatched boundary point");
    if (p < 2 * n) {
      if (p > b) code |= (1u << 2 * b) | (2u << 2 * p);
      int mb = partner[std::size_t(b + 2 * n)];
      if (mb != p + 2 * n) throw std::logic_error("resolution is not mirror symmetric");
    } else if (p != b + 2 * n) {
      throw std::logic_error("left-right strand is not horizontal");
    }
  }
  return code;
}

struct UncrossTally {
  std::unordered_map<std::uint32_t, long long> by_code;  // diagram code -> total weight
  std::uint64_t count = 0;
  std::map<long long, std::uint64_t> weights;            // weight multiset
};

// Folds every resolution of a chord map into per-diagram weight totals,
// checking that each resolution yields a valid symmetric diagram.
inline UncrossTally uncross(const ChordMap& m, int class_bound = kDefaultClassBound, int jobs = 1) {
  Tangle t = m.tangle();
  int n = m.n();
  auto visit = [&](UncrossTally& acc, const Resolution& r) {
    std::uint32_t code = boundary_to_diagram_code(n, r.partner);
    int uv = 0, ph = 0;
    for (int c = 0; c < t.num_classes; ++c) {
      bool vert = r.vertical_mask >> c & 1;
      if (t.class_unpaired[std::size_t(c)]) uv += vert;
      else ph += !vert;
    }
    long long w = (1LL << r.loop_orbits()) * ((uv + ph) % 2 ? -1 : 1);
    acc.by_code[code] += w;
    ++acc.count;
    ++acc.weights[w];
  };
  auto merge = [](UncrossTally& out, const UncrossTally& in) {
    for (auto& [k, v] : in.by_code) out.by_code[k] += v;
    out.count += in.count;
    for (auto& [k, v] : in.weights) out.weights[k] += v;
  };
  auto tally = sweep_all<UncrossTally>(t, class_bound, jobs, [] { return UncrossTally{}; }, visit, merge);
  // every diagram code must parse back to a valid diagram
  for (auto& kv : tally.by_code) {
    auto d = SymTLDiagram::from_code(n, kv.first);
    if (!SymTLDiagram::try_from_edges(n, d.edges())) throw std::logic_error("resolution produced a crossing diagram");
  }
  return tally;
}

using DiagramCoefficients = std::map<SymTLDiagram, long long>;

inline DiagramCoefficients tally_to_coefficients(int n, const UncrossTally& t) {
  DiagramCoefficients out;
  for (auto& d : enumerate_sym_tl(n)) out[d] = 0;
  for (auto& [code, w] : t.by_code) out[SymTLDiagram::from_code(n, code)] += w;
  return out;
}

inline DiagramCoefficients f_coefficient(const Matching& pi, int n, std::uint64_t seed = 0,
                                         int class_bound = kDefaultClassBound, int jobs = 1) {
  return tally_to_coefficients(n, uncross(embed_nu_pi(pi, n, seed), class_bound, jobs));
}

inline DiagramCoefficients g_coefficient(const OrdinaryTLDiagram& d, std::uint64_t seed = 0,
                                         int class_bound = kDefaultClassBound, int jobs = 1) {
  return tally_to_coefficients(d.n(), uncross(embed_nu_d(d, seed), class_bound, jobs));
}

inline DiagramCoefficients g_tilde_coefficient(const OrdinaryTLDiagram& d, std::uint64_t seed = 0) {
  auto g = g_coefficient(d, seed);
  if ((d.left_cap_count() * d.n()) % 2)
    for (auto& kv : g) kv.second = -kv.second;
  return g;
}

}  // namespace pfaflab
