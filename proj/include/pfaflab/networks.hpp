#pragma once

// Planar networks drawn left to right with exact coordinates, Stembridge path
// families, marked subnetworks and the separating networks N(D).

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/parallel.hpp"
#include "pfaflab/pfaffian.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/poly.hpp"
#include "pfaflab/report.hpp"
#include "pfaflab/tangle.hpp"
#include "pfaflab/uncross.hpp"

namespace pfaflab {

namespace geom {

inline int orient(const Point& p, const Point& q, const Point& r) {
  Rational v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(v);
}

// r collinear with p,q assumed; is r inside the closed segment?
inline bool on_segment(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

inline bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Intersection point of two non-parallel segments, if it exists.
inline std::optional<Point> intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  Rational den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  if (den == 0) return std::nullopt;
  Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
  Rational s = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
  if (t < 0 || t > 1 || s < 0 || s > 1) return std::nullopt;
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace geom

struct NetVertex {
  std::string id;
  Point pos;
};

struct NetEdge {
  int from = 0, to = 0;
  Polynomial weight;
};

class Network {
 public:
  Network() = default;
  Network(std::vector<NetVertex> vs, std::vector<NetEdge> es, std::vector<int> sources, std::vector<int> sinks)
      : v_(std::move(vs)), e_(std::move(es)), src_(std::move(sources)), snk_(std::move(sinks)) {
    validate();
  }

  const std::vector<NetVertex>& vertices() const { return v_; }
  const std::vector<NetEdge>& edges() const { return e_; }
  const std::vector<int>& sources() const { return src_; }
  const std::vector<int>& sinks() const { return snk_; }
  const std::vector<int>& out_edges(int v) const { return out_[std::size_t(v)]; }
  const std::vector<int>& in_edges(int v) const { return in_[std::size_t(v)]; }
  int n() const { return int(src_.size()) / 2; }
  bool is_sink(int v) const { return sink_flag_[std::size_t(v)]; }
  bool is_source(int v) const { return source_flag_[std::size_t(v)]; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (auto& v : v_)
      j["vertices"].push_back({{"id", v.id}, {"x", rational_to_string(v.pos.x)}, {"y", rational_to_string(v.pos.y)}});
    j["edges"] = nlohmann::json::array();
    for (auto& e : e_)
      j["edges"].push_back({{"from", v_[std::size_t(e.from)].id}, {"to", v_[std::size_t(e.to)].id},
                            {"weight", e.weight.to_string()}});
    j["sources"] = nlohmann::json::array();
    for (int s : src_) j["sources"].push_back(v_[std::size_t(s)].id);
    j["sinks"] = nlohmann::json::array();
    for (int s : snk_) j["sinks"].push_back(v_[std::size_t(s)].id);
    return j;
  }

  static Network from_json(const nlohmann::json& j) {
    try {
      std::vector<NetVertex> vs;
      std::map<std::string, int> ids;
      auto coord = [](const nlohmann::json& c) {
        return c.is_string() ? parse_rational(c.get<std::string>()) : to_rational(c.get<long long>());
      };
      for (auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        if (!ids.emplace(id, int(vs.size())).second) throw InvalidNetwork("duplicate vertex id " + id);
        vs.push_back({id, {coord(v.at("x")), coord(v.at("y"))}});
      }
      auto lookup = [&](const nlohmann::json& id) {
        auto it = ids.find(id.get<std::string>());
        if (it == ids.end()) throw InvalidNetwork("unknown vertex " + id.get<std::string>());
        return it->second;
      };
      std::vector<NetEdge> es;
      for (auto& e : j.at("edges")) {
        NetEdge ne{lookup(e.at("from")), lookup(e.at("to")), Polynomial(1L)};
        if (e.contains("weight")) {
          auto& w = e.at("weight");
          ne.weight = w.is_string() ? parse_polynomial(w.get<std::string>()) : Polynomial(to_rational(w.get<long long>()));
        }
        es.push_back(std::move(ne));
      }
      std::vector<int> src, snk;
      for (auto& s : j.at("sources")) src.push_back(lookup(s));
      for (auto& s : j.at("sinks")) snk.push_back(lookup(s));
      return Network(std::move(vs), std::move(es), std::move(src), std::move(snk));
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidNetwork(std::string("malformed network json: ") + ex.what());
    } catch (const ParseError& ex) {
      throw InvalidNetwork(std::string("bad weight or coordinate: ") + ex.what());
    }
  }

 private:
  void validate() {
    std::size_t nv = v_.size();
    out_.assign(nv, {});
    in_.assign(nv, {});
    source_flag_.assign(nv, false);
    sink_flag_.assign(nv, false);
    if (src_.size() % 2) throw InvalidNetwork("odd number of sources");
    for (std::size_t k = 0; k < e_.size(); ++k) {
      auto& e = e_[k];
      if (e.from < 0 || e.to < 0 || std::size_t(e.from) >= nv || std::size_t(e.to) >= nv)
        throw InvalidNetwork("edge endpoint out of range");
      if (!(v_[std::size_t(e.from)].pos.x < v_[std::size_t(e.to)].pos.x))
        throw InvalidNetwork("edge " + v_[std::size_t(e.from)].id + "->" + v_[std::size_t(e.to)].id +
                             " does not increase x");
      out_[std::size_t(e.from)].push_back(int(k));
      in_[std::size_t(e.to)].push_back(int(k));
    }
    for (int s : src_) {
      if (s < 0 || std::size_t(s) >= nv || source_flag_[std::size_t(s)]) throw InvalidNetwork("bad source list");
      source_flag_[std::size_t(s)] = true;
    }
    for (int s : snk_) {
      if (s < 0 || std::size_t(s) >= nv || sink_flag_[std::size_t(s)] || source_flag_[std::size_t(s)])
        throw InvalidNetwork("bad sink list");
      sink_flag_[std::size_t(s)] = true;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      if (in_[v].size() > 2 || out_[v].size() > 2)
        throw InvalidNetwork("vertex " + v_[v].id + " has in- or out-degree above 2");
      if (source_flag_[v] && !in_[v].empty()) throw InvalidNetwork("source " + v_[v].id + " has incoming edges");
      if (sink_flag_[v] && !out_[v].empty()) throw InvalidNetwork("sink " + v_[v].id + " has outgoing edges");
    }
    // Boundary arrangement: sources on the leftmost vertical line top to
    // bottom, sinks on the rightmost one top to bottom, everything else
    // strictly between. The bounding curve then passes through both in order.
    if (!src_.empty() && !snk_.empty()) {
      Rational xl = v_[std::size_t(src_[0])].pos.x, xr = v_[std::size_t(snk_[0])].pos.x;
      auto ordered = [&](const std::vector<int>& side, const Rational& x) {
        for (std::size_t k = 0; k < side.size(); ++k) {
          auto& p = v_[std::size_t(side[k])].pos;
          if (p.x != x) return false;
          if (k && !(p.y < v_[std::size_t(side[k - 1])].pos.y)) return false;
        }
        return true;
      };
      if (!ordered(src_, xl)) throw InvalidNetwork("sources must lie on one vertical line, top to bottom");
      if (!ordered(snk_, xr)) throw InvalidNetwork("sinks must lie on one vertical line, top to bottom");
      for (std::size_t v = 0; v < nv; ++v) {
        if (source_flag_[v] || sink_flag_[v]) continue;
        if (!(xl < v_[v].pos.x && v_[v].pos.x < xr))
          throw InvalidNetwork("vertex " + v_[v].id + " is not strictly inside the boundary strip");
      }
    }
    // Planarity of the drawing: edges meet only in shared endpoints.
    for (std::size_t a = 0; a < e_.size(); ++a) {
      const Point& p = v_[std::size_t(e_[a].from)].pos;
      const Point& q = v_[std::size_t(e_[a].to)].pos;
      for (std::size_t v = 0; v < nv; ++v) {
        if (int(v) == e_[a].from || int(v) == e_[a].to) continue;
        if (geom::orient(p, q, v_[v].pos) == 0 && geom::on_segment(p, q, v_[v].pos))
          throw InvalidNetwork("vertex " + v_[v].id + " lies inside an edge");
      }
      for (std::size_t b = a + 1; b < e_.size(); ++b) {
        const Point& r = v_[std::size_t(e_[b].from)].pos;
        const Point& s = v_[std::size_t(e_[b].to)].pos;
        std::set<int> ends{e_[a].from, e_[a].to};
        bool shared = ends.count(e_[b].from) || ends.count(e_[b].to);
        if (!shared) {
          if (geom::segments_touch(p, q, r, s)) throw InvalidNetwork("edges cross away from a vertex");
        } else {
          // sharing an endpoint: only a collinear overlap is a problem
          if (geom::orient(p, q, r) == 0 && geom::orient(p, q, s) == 0) {
            if (e_[a].from == e_[b].from || e_[a].to == e_[b].to)
              throw InvalidNetwork("overlapping collinear edges");
          }
        }
      }
    }
  }

  std::vector<NetVertex> v_;
  std::vector<NetEdge> e_;
  std::vector<int> src_, snk_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<bool> source_flag_, sink_flag_;
};

// ---------------------------------------------------------------------------
// Paths.

struct NetPath {
  std::vector<int> edges;
  std::vector<int> vertices;  // including both ends
};

inline constexpr long kDefaultPathBound = 200000;
inline constexpr long kDefaultFamilyBound = 20000000;

inline std::vector<NetPath> paths_from(const Network& net, int source, long bound = kDefaultPathBound) {
  std::vector<NetPath> out;
  NetPath cur;
  cur.vertices.push_back(source);
  std::function<void(int)> rec = [&](int v) {
    if (net.is_sink(v)) {
      check_bound("paths from one source", long(out.size()) + 1, bound);
      out.push_back(cur);
      return;
    }
    for (int e : net.out_edges(v)) {
      int w = net.edges()[std::size_t(e)].to;
      cur.edges.push_back(e);
      cur.vertices.push_back(w);
      rec(w);
      cur.edges.pop_back();
      cur.vertices.pop_back();
    }
  };
  rec(source);
  return out;
}

inline Polynomial path_weight(const Network& net, const NetPath& p) {
  Polynomial w(1L);
  for (int e : p.edges) w = w * net.edges()[std::size_t(e)].weight;
  return w;
}

inline bool paths_meet(const NetPath& p, const NetPath& q) {
  for (int v : p.vertices)
    if (std::find(q.vertices.begin(), q.vertices.end(), v) != q.vertices.end()) return true;
  return false;
}

// a_ij = sum over vertex-disjoint pairs (p_i, p_j) of w(p_i) w(p_j).
inline SkewArray path_weight_matrix(const Network& net, long bound = kDefaultPathBound) {
  int m = int(net.sources().size());
  std::vector<std::vector<NetPath>> ps;
  std::vector<std::vector<Polynomial>> ws;
  for (int s : net.sources()) {
    ps.push_back(paths_from(net, s, bound));
    ws.emplace_back();
    for (auto& p : ps.back()) ws.back().push_back(path_weight(net, p));
  }
  SkewArray a(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Polynomial s;
      for (std::size_t x = 0; x < ps[std::size_t(i)].size(); ++x)
        for (std::size_t y = 0; y < ps[std::size_t(j)].size(); ++y)
          if (!paths_meet(ps[std::size_t(i)][x], ps[std::size_t(j)][y]))
            s += ws[std::size_t(i)][x] * ws[std::size_t(j)][y];
      a.set(i + 1, j + 1, std::move(s));
    }
  return a;
}

// ---------------------------------------------------------------------------
// Path families without triple vertex use, grouped by marked subnetwork.

inline int pair_bit(int i, int j, int m) {  // 0-based i < j
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

struct MarkedSubnetwork {
  std::vector<std::uint8_t> multiplicity;  // per edge of the parent: 0, 1 or 2
  SymTLDiagram type;
  int free_components = 0;  // r
  long long mult = 1;       // 2^r
  Polynomial weight;
  long long coverings = 0;
  std::map<std::uint32_t, long long> by_meet_pattern;  // pairwise-meeting mask -> families

  std::vector<int> kept_edges() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < multiplicity.size(); ++e)
      if (multiplicity[e]) out.push_back(int(e));
    return out;
  }
  std::vector<int> marked_edges() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < multiplicity.size(); ++e)
      if (multiplicity[e] == 2) out.push_back(int(e));
    return out;
  }
  // |P(N~) ∩ P_I(N)|: families whose meeting pairs all straddle I and its complement.
  long long compatible_coverings(const Subset& I, int m) const {
    std::uint32_t in = subset_mask(I), same = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (bool(in >> i & 1) == bool(in >> j & 1)) same |= 1u << pair_bit(i, j, m);
    long long c = 0;
    for (auto& [mask, k] : by_meet_pattern)
      if (!(mask & same)) c += k;
    return c;
  }
};

namespace detail {

// Fills type, r and mult from the edge multiplicities.
inline void analyse_theta(const Network& net, MarkedSubnetwork& ms) {
  std::size_t nv = net.vertices().size();
  const auto& es = net.edges();
  std::vector<int> use(nv, 0);
  for (std::size_t e = 0; e < es.size(); ++e) use[std::size_t(es[e].to)] += ms.multiplicity[e];
  for (int s : net.sources()) use[std::size_t(s)] = 1;
  // Node ids: in-node 2v, out-node 2v+1. A singly used vertex merges them.
  UnionFind uf;
  uf.reset(int(2 * nv));
  for (std::size_t v = 0; v < nv; ++v)
    if (use[v] == 1) uf.unite(int(2 * v), int(2 * v + 1));
  std::vector<bool> has_edge(2 * nv, false);
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (ms.multiplicity[e] != 1) continue;  // marked edges are removed
    int a = 2 * es[e].from + 1, b = 2 * es[e].to;
    uf.unite(a, b);
    has_edge[std::size_t(a)] = has_edge[std::size_t(b)] = true;
  }
  std::map<int, std::vector<int>> sources_in;
  std::set<int> with_edges;
  for (std::size_t k = 0; k < 2 * nv; ++k)
    if (has_edge[k]) with_edges.insert(uf.find(int(k)));
  for (std::size_t i = 0; i < net.sources().size(); ++i)
    sources_in[uf.find(2 * net.sources()[i] + 1)].push_back(int(i) + 1);
  ms.free_components = 0;
  for (int c : with_edges)
    if (!sources_in.count(c)) ++ms.free_components;
  ms.mult = 1LL << ms.free_components;
  std::vector<Edge> vert;
  for (auto& [c, srcs] : sources_in) {
    if (srcs.size() > 2) throw std::logic_error("theta component holds more than two sources");
    if (srcs.size() == 2) vert.emplace_back(srcs[0], srcs[1]);
  }
  auto t = SymTLDiagram::try_from_edges(net.n(), vert);
  if (!t) throw std::logic_error("marked subnetwork type is not a symmetric TL diagram: " + edges_to_string(vert));
  ms.type = *t;
}

}  // namespace detail

// Every triple-free family in P(N), grouped by its marked subnetwork.
struct FamilyCensus {
  int n = 0;
  long long families = 0;
  std::vector<MarkedSubnetwork> marked;
};

inline FamilyCensus family_census(const Network& net, int jobs = 1, long bound = kDefaultFamilyBound) {
  int m = int(net.sources().size());
  if (m > 8) throw BoundExceeded("sources", m, 8);
  std::vector<std::vector<NetPath>> ps;
  for (int s : net.sources()) ps.push_back(paths_from(net, s));
  long double total = 1;
  for (auto& p : ps) total *= (long double)p.size();
  // The raw product only bounds the search; pruning usually cuts it down.
  if (total > (long double)bound * 64) throw BoundExceeded("path family search space", long(std::min<long double>(total, 9e18L)), bound * 64);

  using Key = std::vector<std::uint8_t>;
  std::map<Key, std::map<std::uint32_t, long long>> groups;
  std::mutex mu;
  long long count = 0;
  std::size_t nv = net.vertices().size(), ne = net.edges().size();
  std::size_t first = m ? ps[0].size() : 1;

  parallel_for(first, jobs, [&](std::size_t f0) {
    std::map<Key, std::map<std::uint32_t, long long>> local;
    long long local_count = 0;
    std::vector<int> use(nv, 0), owner(nv, -1);
    Key mult(ne, 0);
    std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t meet) {
      if (i == m) {
        ++local[mult][meet];
        if (++local_count > bound) throw BoundExceeded("path families", local_count, bound);
        return;
      }
      auto try_path = [&](const NetPath& p) {
        std::uint32_t mk = meet;
        for (int v : p.vertices) {
          if (use[std::size_t(v)] >= 2) return;
          if (use[std::size_t(v)] == 1) mk |= 1u << pair_bit(owner[std::size_t(v)], i, m);
        }
        for (int v : p.vertices) {
          if (use[std::size_t(v)]++ == 0) owner[std::size_t(v)] = i;
        }
        for (int e : p.edges) ++mult[std::size_t(e)];
        rec(i + 1, mk);
        for (int e : p.edges) --mult[std::size_t(e)];
        for (int v : p.vertices) {
          if (--use[std::size_t(v)] == 0) owner[std::size_t(v)] = -1;
        }
      };
      if (i == 0) try_path(ps[0][f0]);
      else
        for (auto& p : ps[std::size_t(i)]) try_path(p);
    };
    if (m == 0) {
      local[mult][0] = 1;
      local_count = 1;
    } else {
      rec(0, 0);
    }
    std::lock_guard<std::mutex> g(mu);
    count += local_count;
    check_bound("path families", long(count), bound);
    for (auto& [k, pat] : local)
      for (auto& [mask, c] : pat) groups[k][mask] += c;
  });

  FamilyCensus out;
  out.n = net.n();
  out.families = count;
  for (auto& [k, pat] : groups) {
    MarkedSubnetwork ms;
    ms.multiplicity = k;
    ms.by_meet_pattern = pat;
    for (auto& [mask, c] : pat) ms.coverings += c;
    ms.weight = Polynomial(1L);
    for (std::size_t e = 0; e < k.size(); ++e)
      if (k[e]) ms.weight = ms.weight * net.edges()[e].weight.pow(k[e]);
    detail::analyse_theta(net, ms);
    out.marked.push_back(std::move(ms));
  }
  return out;
}

inline std::vector<MarkedSubnetwork> marked_subnetworks(const Network& net, int jobs = 1,
                                                        long bound = kDefaultFamilyBound) {
  return family_census(net, jobs, bound).marked;
}

// Q_I(N): weight of all I-compatible families.
inline Polynomial q_i_weight(const FamilyCensus& c, const Subset& I) {
  check_even_subset(I);
  Polynomial s;
  for (auto& ms : c.marked) {
    long long k = ms.compatible_coverings(I, 2 * c.n);
    if (k) s += ms.weight.scaled(to_rational(k));
  }
  return s;
}

inline Polynomial q_i_weight(const Network& net, const Subset& I, int jobs = 1) {
  check_even_subset(I);
  return q_i_weight(family_census(net, jobs), I);
}

// Direct enumeration over all of P(N) with no restriction on vertex reuse.
// Only used to confirm that dropping triple-use families loses nothing.
inline Polynomial q_i_weight_unrestricted(const Network& net, const Subset& I, long bound = kDefaultFamilyBound) {
  check_even_subset(I);
  int m = int(net.sources().size());
  std::uint32_t in = subset_mask(I);
  std::vector<std::vector<NetPath>> ps;
  std::vector<std::vector<Polynomial>> ws;
  for (int s : net.sources()) {
    ps.push_back(paths_from(net, s));
    ws.emplace_back();
    for (auto& p : ps.back()) ws.back().push_back(path_weight(net, p));
  }
  std::vector<const NetPath*> chosen(std::size_t(m), nullptr);
  Polynomial total;
  long long seen = 0;
  std::function<void(int, const Polynomial&)> rec = [&](int i, const Polynomial& w) {
    if (i == m) {
      check_bound("path families", long(++seen), bound);
      total += w;
      return;
    }
    for (std::size_t k = 0; k < ps[std::size_t(i)].size(); ++k) {
      const NetPath& p = ps[std::size_t(i)][k];
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (bool(in >> i & 1) == bool(in >> j & 1) && paths_meet(p, *chosen[std::size_t(j)])) ok = false;
      if (!ok) continue;
      chosen[std::size_t(i)] = &p;
      rec(i + 1, w * ws[std::size_t(i)][k]);
    }
  };
  rec(0, Polynomial(1L));
  return total;
}

inline Polynomial hat_pfaf_prime(const FamilyCensus& c, const SymTLDiagram& d) {
  Polynomial s;
  for (auto& ms : c.marked)
    if (ms.type == d) s += ms.weight.scaled(to_rational(ms.mult));
  return s;
}

inline Polynomial hat_pfaf_prime(const Network& net, const SymTLDiagram& d, int jobs = 1) {
  return hat_pfaf_prime(family_census(net, jobs), d);
}

inline Polynomial hat_pfaf(const FamilyCensus& c, const SymTLDiagram& d) {
  Polynomial s;
  for (auto& e : s_closure(d)) s += hat_pfaf_prime(c, e);
  return s;
}

// Covering counts per I against mult(N~) and the type condition.
inline VerificationReport check_covering_counts(const FamilyCensus& c) {
  VerificationReport r;
  r.theorem = "covering-counts";
  r.n = c.n;
  for (auto& I : even_subsets(2 * c.n))
    for (std::size_t k = 0; k < c.marked.size(); ++k) {
      auto& ms = c.marked[k];
      long long got = ms.compatible_coverings(I, 2 * c.n);
      long long want = is_compatible(ms.type, I) ? ms.mult : 0;
      r.add("N~#" + std::to_string(k) + " I=" + subset_to_string(I), got == want,
            "counted " + std::to_string(got) + ", expected " + std::to_string(want));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Building networks from straight segments.

struct Segment {
  Point a, b;  // a.x < b.x
};

// Promotes all pairwise intersections to vertices. Vertex ids are taken from
// `named` for known points; the rest are c1, c2, ... in left-to-right order.
// Each resulting edge gets the weight x[k], k counting edges in order.
inline Network planarize(const std::vector<std::pair<std::string, Point>>& named, const std::vector<Segment>& segs,
                         const std::vector<std::string>& sources, const std::vector<std::string>& sinks) {
  std::vector<std::vector<Point>> on(segs.size());
  for (std::size_t s = 0; s < segs.size(); ++s) {
    on[s] = {segs[s].a, segs[s].b};
    for (std::size_t t = 0; t < segs.size(); ++t) {
      if (s == t) continue;
      auto p = geom::intersection(segs[s].a, segs[s].b, segs[t].a, segs[t].b);
      if (p) on[s].push_back(*p);
    }
    std::sort(on[s].begin(), on[s].end());
    on[s].erase(std::unique(on[s].begin(), on[s].end()), on[s].end());
  }
  std::set<Point> all;
  for (auto& v : on) all.insert(v.begin(), v.end());
  std::map<Point, int> index;
  std::vector<NetVertex> vs;
  std::map<std::string, int> by_name;
  for (auto& [name, p] : named) {
    index[p] = int(vs.size());
    by_name[name] = int(vs.size());
    vs.push_back({name, p});
  }
  int fresh = 0;
  for (auto& p : all)
    if (!index.count(p)) {
      index[p] = int(vs.size());
      vs.push_back({"c" + std::to_string(++fresh), p});
    }
  std::set<std::pair<int, int>> pairs;
  for (auto& v : on)
    for (std::size_t k = 0; k + 1 < v.size(); ++k) pairs.emplace(index[v[k]], index[v[k + 1]]);
  std::vector<std::pair<int, int>> order(pairs.begin(), pairs.end());
  std::sort(order.begin(), order.end(), [&](auto& l, auto& r) {
    auto& a = vs[std::size_t(l.first)].pos;
    auto& b = vs[std::size_t(r.first)].pos;
    if (!(a == b)) return a < b;
    return vs[std::size_t(r.second)].pos < vs[std::size_t(l.second)].pos;  // upper target first
  });
  std::vector<NetEdge> es;
  int k = 0;
  for (auto& [f, t] : order) es.push_back({f, t, Polynomial(Variable::indeterminate(++k))});
  std::vector<int> src, snk;
  for (auto& s : sources) src.push_back(by_name.at(s));
  for (auto& s : sinks) snk.push_back(by_name.at(s));
  return Network(std::move(vs), std::move(es), std::move(src), std::move(snk));
}

// N(D): sources u_i at (0, 2n-i), sinks w_i at (1, 2n-i) for every i that is
// not the right end of a vertical edge, rails u_i -> w_i, and u_{j_k} -> w_{i_k}
// pairing the right ends with the left ends in increasing order.
inline Network construct_network_of_diagram(const SymTLDiagram& d) {
  int m = 2 * d.n();
  std::vector<bool> ingoing(std::size_t(m + 1), false), outgoing(std::size_t(m + 1), false);
  for (auto& [i, j] : d.edges()) outgoing[std::size_t(i)] = ingoing[std::size_t(j)] = true;
  std::vector<std::pair<std::string, Point>> named;
  std::vector<std::string> src, snk;
  auto u = [&](int i) { return Point{0, to_rational(m - i)}; };
  auto w = [&](int i) { return Point{1, to_rational(m - i)}; };
  for (int i = 1; i <= m; ++i) {
    named.push_back({"u" + std::to_string(i), u(i)});
    src.push_back("u" + std::to_string(i));
  }
  std::vector<Segment> segs;
  std::vector<int> ins, outs;
  for (int i = 1; i <= m; ++i) {
    if (ingoing[std::size_t(i)]) {
      ins.push_back(i);
      continue;
    }
    if (outgoing[std::size_t(i)]) outs.push_back(i);
    named.push_back({"w" + std::to_string(i), w(i)});
    snk.push_back("w" + std::to_string(i));
    segs.push_back({u(i), w(i)});
  }
  for (std::size_t k = 0; k < ins.size(); ++k) segs.push_back({u(ins[k]), w(outs[k])});
  return planarize(named, segs, src, snk);
}

// Random sub-grid: sources on column 0, sinks on column `width`, 2n rows.
// Horizontal steps are always present, down-diagonal steps with probability
// 1/2. Weights are positive integers in [1, 5], or x[k] when symbolic.
inline Network random_grid(int n, int width, std::uint64_t seed, bool symbolic = false) {
  if (width < 1) throw InvalidNetwork("grid width must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1), wt(1, 5);
  int rows = 2 * n;
  std::vector<NetVertex> vs;
  auto id = [&](int x, int r) { return x * rows + r; };  // r = 0 is the top row
  for (int x = 0; x <= width; ++x)
    for (int r = 0; r < rows; ++r) {
      std::string name = x == 0 ? "u" + std::to_string(r + 1)
                         : x == width ? "w" + std::to_string(r + 1)
                                      : "g" + std::to_string(x) + "_" + std::to_string(r + 1);
      vs.push_back({name, {to_rational(x), to_rational(rows - 1 - r)}});
    }
  std::vector<NetEdge> es;
  int k = 0;
  auto weight = [&]() { return symbolic ? Polynomial(Variable::indeterminate(++k)) : Polynomial(to_rational(wt(rng))); };
  for (int x = 0; x < width; ++x)
    for (int r = 0; r < rows; ++r) {
      es.push_back({id(x, r), id(x + 1, r), weight()});
      if (r + 1 < rows && coin(rng)) es.push_back({id(x, r), id(x + 1, r + 1), weight()});
    }
  std::vector<int> src, snk;
  for (int r = 0; r < rows; ++r) {
    src.push_back(id(0, r));
    snk.push_back(id(width, r));
  }
  return Network(std::move(vs), std::move(es), std::move(src), std::move(snk));
}

// ---------------------------------------------------------------------------
// Identities.

// Q_I(N) against pf_{I,Ī}(A(N)) for every even I.
inline VerificationReport verify_stembridge(const Network& net, const FamilyCensus& c, const SkewArray& a) {
  VerificationReport r;
  r.theorem = "stembridge";
  r.n = net.n();
  for (auto& I : even_subsets(2 * net.n()))
    r.add("I=" + subset_to_string(I), IdentityCheck::compare(q_i_weight(c, I), complementary_pfaffian(a, I)));
  return r;
}

// Pfaf_D(A(N)) against the marked-subnetwork sum over S(D).
inline VerificationReport verify_network_equality(const Network& net, const SymTLDiagram& d,
                                                  const FamilyCensus& c, const PfaffinantEvaluator& ev) {
  VerificationReport r;
  r.theorem = "network-equality";
  r.n = net.n();
  r.add(d.key(), IdentityCheck::compare(ev.tl_pfaffinant(d), hat_pfaf(c, d)));
  return r;
}

inline VerificationReport verify_network_equality(const Network& net, const SymTLDiagram& d, int jobs = 1) {
  if (!d.is_even()) throw std::invalid_argument("network equality is stated for even diagrams");
  auto c = family_census(net, jobs);
  PfaffinantEvaluator ev(path_weight_matrix(net));
  return verify_network_equality(net, d, c, ev);
}

}  // namespace pfaflab
