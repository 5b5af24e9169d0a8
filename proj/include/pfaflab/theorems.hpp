#pragma once

// Named verification runs shared by the command line and the acceptance
// runner. Each returns a VerificationReport; ok() means every case held.

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/ftable.hpp"
#include "pfaflab/immanants.hpp"
#include "pfaflab/linalg.hpp"
#include "pfaflab/networks.hpp"
#include "pfaflab/pfaffian.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/report.hpp"
#include "pfaflab/schur_q.hpp"
#include "pfaflab/uncross.hpp"

namespace pfaflab {

struct RunConfig {
  int n = 3;
  int k = kScanVariables;
  int bound = 10;     // scan bound on |λ| + |ν|
  int max_size = 8;   // shape size for Q-function checks
  std::uint64_t seed = 0;
  int jobs = 1;
  int samples = 20;   // sampled subsets / random networks

  void validate() const {
    check_bound("n", n, kMaxSymDiagramN);
    check_bound("k", k, 8);
    check_bound("bound", bound, 16);
    check_bound("max-size", max_size, 14);
    check_bound("samples", samples, 10000);
    if (n < 1 || k < 1 || bound < 0 || max_size < 0 || jobs < 1 || samples < 0)
      throw std::invalid_argument("bounds must be positive");
  }
};

namespace printed {

inline Polynomial e(int i, int j) { return Polynomial(a(i, j)); }

// Diagram pfaffinants for n = 2 as tabulated.
inline std::vector<std::pair<std::string, Polynomial>> diagram_pfaffinants_n2() {
  Polynomial p1234 = e(1, 2) * e(3, 4), p1324 = e(1, 3) * e(2, 4), p1423 = e(1, 4) * e(2, 3);
  return {
      {"V[]", p1234 + p1423 - p1324},
      {"V[(1,2)]", -p1423 + p1324 - p1234},
      {"V[(3,4)]", -p1423 + p1324 - p1234},
      {"V[(1,2)(3,4)]", p1234 + p1423.scaled(2) - p1324},
      {"V[(2,3)]", Polynomial()},
      {"V[(1,4)(2,3)]", p1324 - p1423},
  };
}

// f_D({(1,4),(2,3)}); both embeddings give the same column.
inline std::vector<std::pair<std::string, long long>> uncrossing_1423() {
  return {{"V[]", 1}, {"V[(1,2)]", -1}, {"V[(3,4)]", -1}, {"V[(1,2)(3,4)]", 2}, {"V[(2,3)]", 0}, {"V[(1,4)(2,3)]", -1}};
}

// Generators L, M, N of the quadratic table, as printed.
inline std::vector<Polynomial> quadratic_generators() {
  Polynomial p1234 = e(1, 2) * e(3, 4), p1324 = e(1, 3) * e(2, 4), p1423 = e(1, 4) * e(2, 3);
  return {p1234 + p1423 - p1324, p1324 - p1423, p1324 - p1234};
}

using Expansion = std::map<std::pair<std::size_t, std::size_t>, Rational>;

struct QuadraticEntry {
  std::vector<Edge> d;
  Expansion e;
};

inline std::vector<QuadraticEntry> quadratic_table() {
  auto q = [](std::initializer_list<std::pair<std::pair<std::size_t, std::size_t>, long>> l) {
    Expansion e;
    for (auto& [k, v] : l) e[k] = Rational(v);
    return e;
  };
  return {
      {{{4, 5}, {3, 6}, {2, 7}, {1, 8}}, q({{{0, 0}, 1}})},
      {{{1, 2}, {4, 5}, {3, 6}, {7, 8}}, q({{{0, 0}, -1}})},
      {{{1, 2}, {4, 5}, {6, 7}, {3, 8}}, q({{{0, 1}, -1}})},
      {{{1, 2}, {5, 6}, {4, 7}, {3, 8}}, q({{{0, 0}, -1}, {{0, 2}, -1}})},
      {{{2, 3}, {4, 5}, {6, 7}, {1, 8}}, q({{{0, 1}, 2}})},
      {{{2, 3}, {1, 4}, {6, 7}, {5, 8}}, q({{{1, 1}, 1}})},
      {{{1, 2}, {3, 4}, {6, 7}, {5, 8}}, q({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}})},
      {{{1, 2}, {3, 4}, {5, 6}, {7, 8}}, q({{{0, 0}, 2}, {{0, 2}, 2}, {{2, 2}, 1}})},
  };
}

}  // namespace printed

// ---------------------------------------------------------------------------

inline VerificationReport check_diagram_counts(int max_n) {
  VerificationReport r;
  r.theorem = "diagram-counts";
  r.n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    auto all = enumerate_sym_tl(n);
    long even = long(enumerate_sym_tl_even(n).size());
    r.add("|T_" + std::to_string(n) + "|", long(all.size()) == binomial(2 * n, n),
          std::to_string(all.size()) + " != " + std::to_string(binomial(2 * n, n)));
    r.add("|T^e_" + std::to_string(n) + "|", even == binomial(2 * n - 1, n),
          std::to_string(even) + " != " + std::to_string(binomial(2 * n - 1, n)));
  }
  return r;
}

// Two seeds whose embeddings of ν(π) are not the same chord map.
inline std::pair<std::uint64_t, std::uint64_t> distinct_embedding_seeds(const Matching& pi, int n,
                                                                        std::uint64_t first = 0) {
  auto base = embed_nu_pi(pi, n, first).signature();
  for (std::uint64_t s = first + 1; s < first + 64; ++s)
    if (embed_nu_pi(pi, n, s).signature() != base) return {first, s};
  throw EmbeddingFailed("no second embedding found");
}

inline VerificationReport check_uncrossing_example(std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "uncrossing-example";
  r.n = 2;
  Matching pi{{{1, 4}, {2, 3}}};
  auto [s0, s1] = distinct_embedding_seeds(pi, 2, seed);
  for (auto s : {s0, s1}) {
    auto t = uncross(embed_nu_pi(pi, 2, s));
    r.add("seed " + std::to_string(s) + " |X|", t.count == 16, "|X| = " + std::to_string(t.count));
    auto f = tally_to_coefficients(2, t);
    for (auto& [key, want] : printed::uncrossing_1423()) {
      long long got = f.at(SymTLDiagram::from_key(2, key));
      r.add("seed " + std::to_string(s) + " " + key, got == want,
            "got " + std::to_string(got) + ", printed " + std::to_string(want));
    }
  }
  return r;
}

inline VerificationReport check_diagram_pfaffinants_n2(std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "diagram-pfaffinants-n2";
  r.n = 2;
  PfaffinantEvaluator ev(SkewArray::symbolic(4), seed);
  for (auto& [key, want] : printed::diagram_pfaffinants_n2())
    r.add(key, IdentityCheck::compare(ev.diagram_pfaffinant(SymTLDiagram::from_key(2, key)), want));
  return r;
}

// TL-pfaffinants for n = 2 from their definition as sums over S(D). The
// first two rows agree with the printed table; for V[(1,2)(3,4)] the sum
// over S(D) gives a14*a23 (see README).
inline VerificationReport check_tl_pfaffinants_n2(std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "tl-pfaffinants-n2";
  r.n = 2;
  using printed::e;
  PfaffinantEvaluator ev(SkewArray::symbolic(4), seed);
  std::vector<std::pair<std::string, Polynomial>> want = {
      {"V[]", e(1, 2) * e(3, 4) + e(1, 4) * e(2, 3) - e(1, 3) * e(2, 4)},
      {"V[(1,4)(2,3)]", e(1, 3) * e(2, 4) - e(1, 4) * e(2, 3)},
      {"V[(1,2)(3,4)]", e(1, 4) * e(2, 3)},
  };
  for (auto& [key, w] : want) r.add(key, IdentityCheck::compare(ev.tl_pfaffinant(SymTLDiagram::from_key(2, key)), w));
  return r;
}

// Even subsets of [2n]: all of them up to n = 3, otherwise `samples` drawn
// without replacement.
inline std::vector<Subset> subsets_for(int n, int samples, std::uint64_t seed) {
  auto all = even_subsets(2 * n);
  if (n <= 3 || int(all.size()) <= samples) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::size_t(samples));
  return all;
}

inline VerificationReport check_diagram_decomposition(int n, int samples = 20, std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "diagram-decomposition";
  r.n = n;
  PfaffinantEvaluator ev(SkewArray::symbolic(2 * n), seed);
  for (auto& I : subsets_for(n, samples, seed)) r.add("I=" + subset_to_string(I), verify_diagram_decomposition(ev, I));
  return r;
}

inline VerificationReport check_tl_decomposition(int n, int samples = 20, std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "tl-decomposition";
  r.n = n;
  PfaffinantEvaluator ev(SkewArray::symbolic(2 * n), seed);
  for (auto& I : subsets_for(n, samples, seed)) r.add("I=" + subset_to_string(I), verify_tl_decomposition(ev, I));
  return r;
}

inline VerificationReport check_tl_basis(int n) {
  VerificationReport r;
  r.theorem = "tl-basis";
  r.n = n;
  for (int m = 1; m <= n; ++m) {
    auto t = transition_matrix(m);
    r.add("transition n=" + std::to_string(m), t.upper_unitriangular(), "not upper unitriangular");
    auto c = certify_basis(m);
    r.add("rank n=" + std::to_string(m), c.ok(),
          "ranks " + std::to_string(c.tl_rank) + "/" + std::to_string(c.pf_rank) + ", expected " +
              std::to_string(c.expected));
  }
  return r;
}

inline VerificationReport check_embedding_independence(int n, std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "embedding-independence";
  r.n = n;
  for (auto& pi : enumerate_matchings(n)) {
    auto base = f_coefficient(pi, n, seed);
    for (std::uint64_t s = seed + 1; s <= seed + 2; ++s)
      r.add("f " + pi.key() + " seed " + std::to_string(s), f_coefficient(pi, n, s) == base, "coefficients differ");
  }
  for (auto& d : enumerate_tl(n)) {
    auto base = g_coefficient(d, seed);
    for (std::uint64_t s = seed + 1; s <= seed + 2; ++s)
      r.add("g " + d.key() + " seed " + std::to_string(s), g_coefficient(d, s) == base, "coefficients differ");
  }
  return r;
}

// Stembridge's identity, covering counts and Pfaf_D(A(N)) = hatPfaf_D(N) on
// N(D) for every D in T_n, plus `grids` random weighted grids at n = 2.
inline VerificationReport check_networks(int n, int grids = 10, std::uint64_t seed = 0, int jobs = 1) {
  VerificationReport r;
  r.theorem = "network-equality";
  r.n = n;
  auto run = [&](const std::string& label, const Network& net) {
    auto c = family_census(net, jobs);
    auto a = path_weight_matrix(net);
    for (auto& f : verify_stembridge(net, c, a).failures) r.failures.push_back(label + " " + f);
    auto cov = check_covering_counts(c);
    for (auto& f : cov.failures) r.failures.push_back(label + " " + f);
    PfaffinantEvaluator ev(a, seed);
    for (auto& e : enumerate_sym_tl_even(net.n())) {
      auto eq = verify_network_equality(net, e, c, ev);
      r.add(label + " " + e.key(), eq.ok(), eq.ok() ? "" : eq.failures.front());
    }
    r.cases += long(even_subsets(2 * net.n()).size()) + cov.cases;
  };
  for (auto& d : enumerate_sym_tl(n)) run("N(" + d.key() + ")", construct_network_of_diagram(d));
  for (int g = 0; g < grids; ++g) run("grid#" + std::to_string(g), random_grid(2, 3, seed + std::uint64_t(g)));
  return r;
}

// The unmarked subnetwork using every edge of N(D) is the only one and has type D.
inline VerificationReport check_network_type(int n, int jobs = 1) {
  VerificationReport r;
  r.theorem = "network-type";
  r.n = n;
  for (int m = 1; m <= n; ++m)
    for (auto& d : enumerate_sym_tl(m)) {
      auto net = construct_network_of_diagram(d);
      auto c = family_census(net, jobs);
      bool ok = c.marked.size() == 1 && c.marked[0].type == d && c.marked[0].marked_edges().empty() &&
                c.marked[0].kept_edges().size() == net.edges().size();
      std::string why;
      if (!ok) {
        why = std::to_string(c.marked.size()) + " marked subnetworks";
        for (auto& ms : c.marked) why += " " + ms.type.key();
      }
      r.add(d.key(), ok, why);
    }
  return r;
}

inline VerificationReport check_boolean_cone() {
  VerificationReport r;
  r.theorem = "boolean-cone";
  r.n = 3;
  auto v = [](std::initializer_list<long> l) {
    std::vector<Rational> out;
    for (long x : l) out.emplace_back(x);
    return out;
  };
  std::vector<std::vector<Rational>> good = {v({0, 1, 0, 0}),   v({0, 0, 1, 0}),   v({0, 0, 0, 1}),
                                             v({1, -1, -1, 1}), v({1, -1, 1, -1}), v({1, 1, -1, -1}),
                                             v({1, -1, 0, 0}),  v({1, 0, -1, 0}),  v({1, 0, 0, -1})};
  auto show = [](const std::vector<Rational>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + rational_to_string(t[i]);
    return s + ")";
  };
  for (auto& t : good) r.add(show(t), boolean_cone_check(3, Parity::Odd, t), "rejected");
  auto bad = v({0, -1, 0, 0});
  r.add(show(bad) + " rejected", !boolean_cone_check(3, Parity::Odd, bad), "accepted");
  return r;
}

// pf_{min(I,Ī)} - pf_{I,Ī} expanded in TL-pfaffinants lies in the network cone,
// and D(I) ⊂ D(min(I,Ī)).
inline VerificationReport check_min_difference_network(int n) {
  VerificationReport r;
  r.theorem = "min-difference-network";
  r.n = n;
  check_bound("min-difference n", n, 4);
  SkewArray a = SkewArray::symbolic(2 * n);
  for (auto& I : even_subsets(2 * n)) {
    if (int(I.size()) < n) continue;
    Subset mn = min_partition(I, 2 * n);
    std::string label = "I=" + subset_to_string(I);
    bool inclusion = true;
    for (auto& d : compatible_diagrams(I, n)) inclusion = inclusion && is_compatible(d, mn);
    r.add(label + " compatibility", inclusion, "D(I) not inside D(min)");
    auto c = tl_expansion(complementary_pfaffian(a, mn) - complementary_pfaffian(a, I), n);
    if (!c) {
      r.add(label, false, "difference outside the TL span");
      continue;
    }
    ConeElement ce{n, *c};
    r.add(label, is_network_positive(ce), "not certified");
  }
  return r;
}

inline VerificationReport check_immanant_examples() {
  VerificationReport r;
  r.theorem = "immanant-examples";
  r.n = 2;
  GeneralMatrix b = GeneralMatrix::symbolic_block(2);
  Polynomial x = b.at(1, 1), y = b.at(1, 2), z = b.at(2, 1), t = b.at(2, 2);
  r.add("Imm_P", IdentityCheck::compare(tl_immanant(OrdinaryTLDiagram::from_key(2, "T[(1,4)(2,3)]"), b), x * t - y * z));
  r.add("Imm_Q", IdentityCheck::compare(tl_immanant(OrdinaryTLDiagram::from_key(2, "T[(1,2)(3,4)]"), b), y * z));
  return r;
}

struct QuadraticComparison {
  std::vector<QuadraticRow> rows;
  std::vector<printed::Expansion> printed;
  std::size_t product_rank = 0;
};

inline QuadraticComparison compare_quadratic_table() {
  QuadraticComparison q;
  auto gens = printed::quadratic_generators();
  std::vector<Polynomial> prods;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) prods.push_back(gens[i] * gens[j]);
  q.product_rank = polynomial_rank(prods);
  std::vector<OrdinaryTLDiagram> ds;
  for (auto& row : printed::quadratic_table()) {
    ds.push_back(OrdinaryTLDiagram::from_edges(4, row.d));
    q.printed.push_back(row.e);
  }
  q.rows = quadratic_relation_table(2, gens, ds);
  return q;
}

inline VerificationReport check_quadratic_table() {
  VerificationReport r;
  r.theorem = "quadratic-table";
  r.n = 2;
  auto q = compare_quadratic_table();
  r.add("products independent", q.product_rank == 6, "rank " + std::to_string(q.product_rank));
  std::vector<std::string> names = {"L", "M", "N"};
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    auto& row = q.rows[i];
    bool ok = row.expansion && *row.expansion == q.printed[i];
    r.add("row " + std::to_string(i + 1) + " " + row.d.key(), ok,
          "computed " + expansion_to_string(row.expansion, names) + ", printed " +
              expansion_to_string(q.printed[i], names));
  }
  return r;
}

inline VerificationReport check_non_span_witness(std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "non-span-witness";
  r.n = 3;
  r.add(non_span_witness_diagram().key(), non_span_witness(seed), "inside the span");
  return r;
}

inline VerificationReport check_imm_decomposition(int n) {
  VerificationReport r;
  r.theorem = "immanant-decomposition";
  r.n = n;
  for (int m = 1; m <= n; ++m) {
    r.absorb(verify_imm_decomposition_all(m));
    r.absorb(verify_word_independence(m));
  }
  return r;
}

inline VerificationReport check_pf_squared(int n) {
  VerificationReport r;
  r.theorem = "pf-squared";
  r.n = n;
  for (int m = 1; m <= n; ++m) r.absorb(verify_pf_squared(m, true));
  return r;
}

inline VerificationReport check_bridge(int n, std::uint64_t seed = 0) {
  VerificationReport r;
  r.theorem = "pfaffinant-immanant-bridge";
  r.n = n;
  for (int m = 1; m <= n; ++m) r.absorb(verify_pfaffinant_immanant_bridge(m, seed));
  return r;
}

inline VerificationReport check_pfafprime_span(int n) {
  VerificationReport r;
  r.theorem = "pfafprime-span";
  r.n = n;
  for (auto& p : check_pfafprime_in_span(n)) r.add(p.diagram.key(), p.coefficients.has_value(), "outside P_n");
  return r;
}

inline VerificationReport check_min_difference_q(int bound, int k) {
  VerificationReport r;
  r.theorem = "min-difference-q";
  r.n = bound;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (auto& l : strict_partitions(a))
        for (auto& m : strict_partitions(b))
          r.add(partition_to_string(l) + " ; " + partition_to_string(m), verify_min_difference_q(l, m, k));
  return r;
}

// ---------------------------------------------------------------------------
// The chain of cell transfers and one-row translations carrying (λ, μ) to
// (sort_1, sort_2).

struct ChainStep {
  Partition rho, nu;
  bool translated = false;
};

inline Partition padded(const Partition& p, std::size_t len) {
  Partition q = p;
  q.resize(std::max(len, q.size()), 0);
  return q;
}

inline std::vector<ChainStep> reduction_chain(const Partition& lambda, const Partition& mu) {
  auto [pi, theta] = sort_split(lambda, mu);
  std::size_t len = lambda.size() + mu.size() + 1;
  std::vector<ChainStep> out{{trim(lambda), trim(mu), false}};
  Partition rho = trim(lambda), nu = trim(mu);
  for (std::size_t guard = 0; guard < 4 * len + 4; ++guard) {
    Partition r = padded(rho, len), v = padded(nu, len), p = padded(pi, len), t = padded(theta, len);
    std::size_t i = 0;
    while (i < len && r[i] == p[i] && v[i] == t[i]) ++i;
    if (i == len) return out;
    if (r[i] != p[i]) {
      Partition a = coordinatewise(rho, nu, true), b = coordinatewise(rho, nu, false);
      rho = a;
      nu = b;
      out.push_back({rho, nu, false});
    } else {
      // ν↓ = (B, ν)/(B) with B large; ∧ keeps the first row of ρ, ∨ is moved back up.
      Partition down{std::numeric_limits<int>::max()};
      for (int x : nu) down.push_back(x);
      Partition lo = coordinatewise(rho, down, false);
      Partition hi = coordinatewise(rho, down, true);
      lo[0] = padded(rho, 1)[0];
      if (lo[0] == 0) lo.clear();
      hi.erase(hi.begin());
      rho = trim(lo);
      nu = trim(hi);
      out.push_back({rho, nu, true});
    }
    if (!is_strict(rho) || !is_strict(nu)) throw std::logic_error("reduction chain left the strict partitions");
  }
  throw std::logic_error("reduction chain did not terminate");
}

// Chains end at the sort pair, keep the multiset of parts, and the one-row
// translation does not change Q (checked on the shapes the chain visits).
inline VerificationReport check_reduction_chain(int bound, int k) {
  VerificationReport r;
  r.theorem = "reduction-chain";
  r.n = bound;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (auto& l : strict_partitions(a))
        for (auto& m : strict_partitions(b)) {
          std::string label = partition_to_string(l) + " ; " + partition_to_string(m);
          std::vector<ChainStep> chain;
          try {
            chain = reduction_chain(l, m);
          } catch (const std::logic_error& e) {
            r.add(label, false, e.what());
            continue;
          }
          auto [p, t] = sort_split(l, m);
          bool ends = chain.back().rho == p && chain.back().nu == t;
          Partition all0 = l;
          all0.insert(all0.end(), m.begin(), m.end());
          std::sort(all0.begin(), all0.end());
          bool parts = true;
          for (auto& s : chain) {
            Partition u = s.rho;
            u.insert(u.end(), s.nu.begin(), s.nu.end());
            std::sort(u.begin(), u.end());
            parts = parts && u == all0;
          }
          r.add(label, ends && parts, ends ? "parts not preserved" : "chain ends elsewhere");
        }
  // translation invariance Q_{(B,ν)/(B)} = Q_ν for the small shapes
  for (int a = 0; a <= std::min(bound, 6); ++a)
    for (auto& v : strict_partitions(a)) {
      int big = (v.empty() ? 0 : v[0]) + 1;
      Partition outer{big};
      outer.insert(outer.end(), v.begin(), v.end());
      r.add("translate " + partition_to_string(v),
            IdentityCheck::compare(schur_q(SkewShape::make(outer, {big}), k), schur_q(v, k)));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Registry.

struct TheoremEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
  std::function<VerificationReport(const RunConfig&)> run;
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = {
      {"diagram-counts", {"prop-2.3"}, "|T_n| = C(2n,n), |T^e_n| = C(2n-1,n)",
       [](const RunConfig& c) { return check_diagram_counts(c.n); }},
      {"uncrossing-example", {"ex-2.5"}, "f_D({(1,4),(2,3)}) on two embeddings",
       [](const RunConfig& c) { return check_uncrossing_example(c.seed); }},
      {"diagram-pfaffinants-n2", {"ex-2.7"}, "the six diagram pfaffinants for n = 2",
       [](const RunConfig& c) { return check_diagram_pfaffinants_n2(c.seed); }},
      {"tl-pfaffinants-n2", {"ex-2.11"}, "the three TL-pfaffinants for n = 2",
       [](const RunConfig& c) { return check_tl_pfaffinants_n2(c.seed); }},
      {"embedding-independence", {"thm-2.4"}, "f_D and g_D agree across embeddings",
       [](const RunConfig& c) { return check_embedding_independence(c.n, c.seed); }},
      {"diagram-decomposition", {"thm-2.6"}, "pf_{I,Ī} = sum of Pfaf'_D over I-compatible D",
       [](const RunConfig& c) { return check_diagram_decomposition(c.n, c.samples, c.seed); }},
      {"tl-decomposition", {"thm-2.12"}, "pf_{I,Ī} = sum of Pfaf_D over Dmax(I)",
       [](const RunConfig& c) { return check_tl_decomposition(c.n, c.samples, c.seed); }},
      {"tl-basis", {"prop-2.16", "thm-2.17", "thm-3.8"}, "unitriangular transition matrix, TL-pfaffinant basis",
       [](const RunConfig& c) { return check_tl_basis(c.n); }},
      {"pfafprime-span", {}, "whether each Pfaf'_D lies in P_n",
       [](const RunConfig& c) { return check_pfafprime_span(c.n); }},
      {"network-equality", {"cor-3.2", "thm-3.6"}, "Stembridge's identity and Pfaf_D(A(N)) = hatPfaf_D(N)",
       [](const RunConfig& c) { return check_networks(c.n, std::max(c.samples, 10), c.seed, c.jobs); }},
      {"network-type", {"lem-3.7"}, "type of the full subnetwork of N(D) is D",
       [](const RunConfig& c) { return check_network_type(c.n, c.jobs); }},
      {"boolean-cone", {"ex-3.13"}, "cone generators on the boolean lattice B_3",
       [](const RunConfig&) { return check_boolean_cone(); }},
      {"min-difference-network", {"prop-3.14"}, "pf_{min(I,Ī)} - pf_{I,Ī} is network positive",
       [](const RunConfig& c) { return check_min_difference_network(c.n); }},
      {"immanant-decomposition", {"thm-4.1"}, "minor products as sums of TL-immanants",
       [](const RunConfig& c) { return check_imm_decomposition(c.n); }},
      {"pfaffinant-immanant-bridge", {"thm-4.3"}, "Pfaf_D on block arrays through TL-immanants",
       [](const RunConfig& c) { return check_bridge(c.n, c.seed); }},
      {"pf-squared", {"thm-4.4"}, "pf(A)^2 = det(A) and its complementary form",
       [](const RunConfig& c) { return check_pf_squared(c.n); }},
      {"immanant-examples", {}, "Imm_P and Imm_Q for n = 2",
       [](const RunConfig&) { return check_immanant_examples(); }},
      {"quadratic-table", {}, "TL-immanants of a 4x4 skew array through products of L, M, N",
       [](const RunConfig&) { return check_quadratic_table(); }},
      {"non-span-witness", {}, "the n = 3 immanant outside the span of pfaffinant products",
       [](const RunConfig& c) { return check_non_span_witness(c.seed); }},
      {"q-jacobi-trudi", {"thm-5.2"}, "pf(A_{λ/μ}) = Q_{λ/μ}",
       [](const RunConfig& c) { return verify_jozefiak_pragacz(c.max_size, c.k); }},
      {"monomial-positivity", {"thm-5.4"}, "Pfaf'_D(A_{λ/μ}) is monomial positive",
       [](const RunConfig& c) { return verify_monomial_positivity(std::min(c.n, 3), c.max_size, c.k, false, c.seed); }},
      {"min-difference-q", {"prop-5.6"}, "min-partition difference on A_π equals the cell-transfer difference",
       [](const RunConfig& c) { return check_min_difference_q(c.max_size, c.k); }},
      {"reduction-chain", {"prop-5.8"}, "cell transfers and translations reach (sort_1, sort_2)",
       [](const RunConfig& c) { return check_reduction_chain(c.bound, c.k); }},
  };
  return reg;
}

inline const TheoremEntry* find_theorem(const std::string& id) {
  for (auto& e : theorem_registry()) {
    if (e.id == id) return &e;
    for (auto& a : e.aliases)
      if (a == id) return &e;
  }
  return nullptr;
}

}  // namespace pfaflab
