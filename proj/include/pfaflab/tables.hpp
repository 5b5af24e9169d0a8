#pragma once

// CSV renderings of the small worked tables.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pfaflab/theorems.hpp"

namespace pfaflab {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
  return s + "\n";
}

inline std::string table_uncrossing(std::uint64_t seed = 0) {
  Matching pi{{{1, 4}, {2, 3}}};
  auto [s0, s1] = distinct_embedding_seeds(pi, 2, seed);
  auto fa = f_coefficient(pi, 2, s0), fb = f_coefficient(pi, 2, s1);
  std::string out = csv_row({"diagram", "embedding_a", "embedding_b"});
  for (auto& [key, v] : printed::uncrossing_1423()) {
    (void)v;
    auto d = SymTLDiagram::from_key(2, key);
    out += csv_row({key, std::to_string(fa.at(d)), std::to_string(fb.at(d))});
  }
  return out;
}

inline std::string table_diagram_pfaffinants(std::uint64_t seed = 0) {
  PfaffinantEvaluator ev(SkewArray::symbolic(4), seed);
  std::string out = csv_row({"diagram", "pfaffinant"});
  for (auto& [key, v] : printed::diagram_pfaffinants_n2()) {
    (void)v;
    out += csv_row({key, ev.diagram_pfaffinant(SymTLDiagram::from_key(2, key)).to_string()});
  }
  return out;
}

inline std::string table_tl_pfaffinants(std::uint64_t seed = 0) {
  PfaffinantEvaluator ev(SkewArray::symbolic(4), seed);
  std::string out = csv_row({"diagram", "tl_pfaffinant"});
  for (const char* key : {"V[]", "V[(1,2)(3,4)]", "V[(1,4)(2,3)]"})
    out += csv_row({key, ev.tl_pfaffinant(SymTLDiagram::from_key(2, key)).to_string()});
  return out;
}

inline std::string table_transition(int n) {
  auto t = transition_matrix(n);
  std::vector<std::string> head{"partition"};
  for (auto& d : t.cols) head.push_back(d.key());
  std::string out = csv_row(head);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> row{subset_to_string(t.rows[r]) + "|" + subset_to_string(complement(t.rows[r], 2 * n))};
    for (auto& v : t.m[r]) row.push_back(rational_to_string(v));
    out += csv_row(row);
  }
  return out;
}

inline std::string table_quadratic() {
  auto q = compare_quadratic_table();
  std::vector<std::string> names = {"L", "M", "N"};
  std::string out = csv_row({"immanant", "computed", "printed"});
  for (std::size_t i = 0; i < q.rows.size(); ++i)
    out += csv_row({q.rows[i].d.key(), expansion_to_string(q.rows[i].expansion, names),
                    expansion_to_string(q.printed[i], names)});
  return out;
}

struct TableEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::function<std::string(std::uint64_t)> render;
};

inline const std::vector<TableEntry>& table_registry() {
  static const std::vector<TableEntry> reg = {
      {"uncrossing", {"ex-2.5"}, [](std::uint64_t s) { return table_uncrossing(s); }},
      {"diagram-pfaffinants", {"ex-2.7"}, [](std::uint64_t s) { return table_diagram_pfaffinants(s); }},
      {"tl-pfaffinants", {"ex-2.11"}, [](std::uint64_t s) { return table_tl_pfaffinants(s); }},
      {"transition", {"prop-2.16"}, [](std::uint64_t) { return table_transition(2); }},
      {"quadratic", {}, [](std::uint64_t) { return table_quadratic(); }},
  };
  return reg;
}

inline const TableEntry* find_table(const std::string& id) {
  for (auto& e : table_registry()) {
    if (e.id == id) return &e;
    for (auto& a : e.aliases)
      if (a == id) return &e;
  }
  return nullptr;
}

}  // namespace pfaflab
