#pragma once

// Per-n tables of f_D(pi) for all matchings pi and all symmetric diagrams D,
// with an optional on-disk JSON cache (one file per (n, pi, seed)).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfaflab/diagrams.hpp"
#include "pfaflab/parallel.hpp"
#include "pfaflab/uncross.hpp"

namespace pfaflab {

class FCache {
 public:
  FCache() = default;
  explicit FCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path file_for(int n, const Matching& pi, std::uint64_t seed) const {
    std::string name = "f_n" + std::to_string(n) + "_s" + std::to_string(seed) + "_";
    for (auto& [i, j] : pi.edges) name += std::to_string(i) + "-" + std::to_string(j) + "_";
    name.back() = '.';
    return dir_ / (name + "json");
  }

  static nlohmann::json to_json(int n, const Matching& pi, std::uint64_t seed, const DiagramCoefficients& f) {
    nlohmann::json j;
    j["n"] = n;
    j["pi"] = nlohmann::json::array();
    for (auto& [a, b] : pi.edges) j["pi"].push_back({a, b});
    j["seed"] = seed;
    j["f"] = nlohmann::json::object();
    for (auto& [d, v] : f) j["f"][d.key()] = v;
    return j;
  }

  std::optional<DiagramCoefficients> load(int n, const Matching& pi, std::uint64_t seed) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_for(n, pi, seed));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
      in >> j;
      if (j.at("n").get<int>() != n || j.at("seed").get<std::uint64_t>() != seed) return std::nullopt;
      std::vector<Edge> es;
      for (auto& e : j.at("pi")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      std::sort(es.begin(), es.end());
      if (es != pi.edges) return std::nullopt;
      DiagramCoefficients f;
      for (auto& d : enumerate_sym_tl(n)) f[d] = 0;
      for (auto& [k, v] : j.at("f").items()) f[SymTLDiagram::from_key(n, k)] = v.get<long long>();
      return f;
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable cache entries are recomputed
    }
  }

  void store(int n, const Matching& pi, std::uint64_t seed, const DiagramCoefficients& f) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    auto path = file_for(n, pi, seed);
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << to_json(n, pi, seed, f).dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
  }

 private:
  std::filesystem::path dir_;
};

struct FTable {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<Matching> matchings;
  std::vector<SymTLDiagram> diagrams;
  std::map<SymTLDiagram, std::size_t> diagram_index;
  std::vector<std::vector<long long>> f;  // f[matching][diagram]

  long long value(std::size_t m, const SymTLDiagram& d) const { return f[m][diagram_index.at(d)]; }
  std::size_t cache_hits = 0;
};

inline FTable compute_f_table(int n, std::uint64_t seed = 0, int jobs = 1, const FCache& cache = {},
                              int class_bound = kDefaultClassBound) {
  FTable t;
  t.n = n;
  t.seed = seed;
  t.matchings = enumerate_matchings(n);
  t.diagrams = enumerate_sym_tl(n);
  for (std::size_t k = 0; k < t.diagrams.size(); ++k) t.diagram_index[t.diagrams[k]] = k;
  t.f.assign(t.matchings.size(), std::vector<long long>(t.diagrams.size(), 0));
  std::mutex m;
  parallel_for(t.matchings.size(), jobs, [&](std::size_t k) {
    const Matching& pi = t.matchings[k];
    auto cached = cache.load(n, pi, seed);
    DiagramCoefficients f;
    if (cached) {
      f = *cached;
    } else {
      f = f_coefficient(pi, n, seed, class_bound);
    }
    std::lock_guard<std::mutex> g(m);
    if (cached) ++t.cache_hits;
    else cache.store(n, pi, seed, f);
    for (auto& [d, v] : f) t.f[k][t.diagram_index.at(d)] = v;
  });
  return t;
}

// Process-wide memo of f tables, keyed by (n, seed). The cache directory is
// consulted only on first use of a key.
class FTableRegistry {
 public:
  static FTableRegistry& instance() {
    static FTableRegistry r;
    return r;
  }
  void configure(FCache cache, int jobs) {
    std::lock_guard<std::mutex> g(m_);
    cache_ = std::move(cache);
    jobs_ = jobs;
  }
  const FTable& get(int n, std::uint64_t seed = 0) {
    std::lock_guard<std::mutex> g(m_);
    auto key = std::make_pair(n, seed);
    auto it = tables_.find(key);
    if (it == tables_.end())
      it = tables_.emplace(key, std::make_unique<FTable>(compute_f_table(n, seed, jobs_, cache_))).first;
    return *it->second;
  }

 private:
  std::mutex m_;
  FCache cache_;
  int jobs_ = 1;
  std::map<std::pair<int, std::uint64_t>, std::unique_ptr<FTable>> tables_;
};

inline const FTable& f_table(int n, std::uint64_t seed = 0) { return FTableRegistry::instance().get(n, seed); }

}  // namespace pfaflab
