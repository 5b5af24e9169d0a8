#pragma once

// Strands with ordered crossings, and the sweep over all ways of resolving
// the crossings. Shared by the symmetric chord maps and by wiring diagrams.
//
// Each strand is oriented from its start boundary point; segment k of a strand
// lies between its (k-1)-th and k-th crossing. A vertical resolution joins the
// two incoming arms and the two outgoing arms; a horizontal one joins each
// incoming arm to the other strand's outgoing arm.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pfaflab/errors.hpp"

namespace pfaflab {

inline constexpr int kDefaultClassBound = 24;

struct Tangle {
  struct Strand {
    int start = 0, end = 0;      // boundary point ids
    std::vector<int> crossings;  // crossing ids, in order from start
  };
  struct Crossing {
    int a = 0, pa = 0;  // strand a, position along a
    int b = 0, pb = 0;
    int cls = 0;
  };

  int boundary_points = 0;
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;
  int num_classes = 0;
  std::vector<char> class_unpaired;  // only meaningful for mirror tangles
  // Mirror data; empty for tangles without a symmetry.
  std::vector<int> strand_mirror;
  std::vector<char> strand_mirror_reversed;

  std::vector<int> segment_base() const {
    std::vector<int> base(strands.size() + 1, 0);
    for (std::size_t s = 0; s < strands.size(); ++s)
      base[s + 1] = base[s] + int(strands[s].crossings.size()) + 1;
    return base;
  }
};

struct Resolution {
  std::uint64_t vertical_mask = 0;  // bit c set: class c resolved vertically
  std::vector<int> partner;         // boundary matching
  int loops = 0;
  int self_mirror_loops = 0;        // loops mapped to themselves by the mirror
  int loop_orbits() const { return (loops + self_mirror_loops) / 2; }
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  void reset(int n) {
    p.resize(std::size_t(n));
    std::iota(p.begin(), p.end(), 0);
  }
  int find(int x) {
    while (p[std::size_t(x)] != x) {
      p[std::size_t(x)] = p[std::size_t(p[std::size_t(x)])];
      x = p[std::size_t(x)];
    }
    return x;
  }
  void unite(int a, int b) { p[std::size_t(find(a))] = find(b); }
};

}  // namespace detail

// Calls f(const Resolution&) for every mask in [lo, hi).
template <class F>
void sweep_range(const Tangle& t, std::uint64_t lo, std::uint64_t hi, F&& f) {
  auto base = t.segment_base();
  int nseg = base.back();
  bool mirrored = !t.strand_mirror.empty();
  std::vector<int> seg_mirror;
  if (mirrored) {
    seg_mirror.resize(std::size_t(nseg));
    for (std::size_t s = 0; s < t.strands.size(); ++s) {
      int m = t.strand_mirror[s];
      int len = int(t.strands[s].crossings.size());
      for (int k = 0; k <= len; ++k)
        seg_mirror[std::size_t(base[s] + k)] = base[std::size_t(m)] + (t.strand_mirror_reversed[s] ? len - k : k);
    }
  }
  // boundary point -> segment holding it
  std::vector<int> bseg(std::size_t(t.boundary_points), -1);
  for (std::size_t s = 0; s < t.strands.size(); ++s) {
    bseg[std::size_t(t.strands[s].start)] = base[s];
    bseg[std::size_t(t.strands[s].end)] = base[s] + int(t.strands[s].crossings.size());
  }
  detail::UnionFind uf;
  Resolution r;
  r.partner.assign(std::size_t(t.boundary_points), -1);
  std::vector<int> root_owner(std::size_t(nseg), -1);
  std::vector<int> loop_seen(std::size_t(nseg), 0);
  int stamp = 0;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    uf.reset(nseg);
    for (auto& x : t.crossings) {
      int ain = base[std::size_t(x.a)] + x.pa, aout = ain + 1;
      int bin = base[std::size_t(x.b)] + x.pb, bout = bin + 1;
      if (mask >> x.cls & 1) {
        uf.unite(ain, bin);
        uf.unite(aout, bout);
      } else {
        uf.unite(ain, bout);
        uf.unite(aout, bin);
      }
    }
    r.vertical_mask = mask;
    ++stamp;
    for (int b = 0; b < t.boundary_points; ++b) {
      if (bseg[std::size_t(b)] < 0) continue;
      int root = uf.find(bseg[std::size_t(b)]);
      if (loop_seen[std::size_t(root)] == stamp) {
        int other = root_owner[std::size_t(root)];
        r.partner[std::size_t(b)] = other;
        r.partner[std::size_t(other)] = b;
      } else {
        loop_seen[std::size_t(root)] = stamp;
        root_owner[std::size_t(root)] = b;
      }
    }
    r.loops = 0;
    r.self_mirror_loops = 0;
    for (int sgm = 0; sgm < nseg; ++sgm) {
      int root = uf.find(sgm);
      if (loop_seen[std::size_t(root)] == stamp) continue;
      loop_seen[std::size_t(root)] = stamp;
      ++r.loops;
      if (mirrored && uf.find(seg_mirror[std::size_t(sgm)]) == root) ++r.self_mirror_loops;
    }
    f(static_cast<const Resolution&>(r));
  }
}

// Sweep all 2^classes resolutions, optionally split across worker threads.
// make_acc() builds a per-worker accumulator, visit(acc, res) folds one
// resolution, merge(total, acc) combines.
template <class Acc, class MakeAcc, class Visit, class Merge>
Acc sweep_all(const Tangle& t, int class_bound, int jobs, MakeAcc make_acc, Visit visit, Merge merge) {
  check_bound("crossing classes", t.num_classes, class_bound);
  if (t.num_classes > 62) throw BoundExceeded("crossing classes", t.num_classes, 62);
  std::uint64_t total = 1ull << t.num_classes;
  Acc out = make_acc();
  if (jobs <= 1 || total < 4096) {
    sweep_range(t, 0, total, [&](const Resolution& r) { visit(out, r); });
    return out;
  }
  std::vector<Acc> parts;
  for (int j = 0; j < jobs; ++j) parts.push_back(make_acc());
  std::vector<std::thread> ws;
  for (int j = 0; j < jobs; ++j) {
    std::uint64_t lo = total * std::uint64_t(j) / std::uint64_t(jobs);
    std::uint64_t hi = total * std::uint64_t(j + 1) / std::uint64_t(jobs);
    ws.emplace_back([&, j, lo, hi] {
      sweep_range(t, lo, hi, [&](const Resolution& r) { visit(parts[std::size_t(j)], r); });
    });
  }
  for (auto& w : ws) w.join();
  for (auto& p : parts) merge(out, p);
  return out;
}

}  // namespace pfaflab
