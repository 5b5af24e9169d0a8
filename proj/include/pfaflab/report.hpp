#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pfaflab/poly.hpp"

namespace pfaflab {

// Outcome of one exact identity check.
struct IdentityCheck {
  bool ok = true;
  std::string detail;  // first differing monomial on failure

  static IdentityCheck compare(const Polynomial& lhs, const Polynomial& rhs) {
    IdentityCheck c;
    if (lhs == rhs) return c;
    Polynomial diff = lhs - rhs;
    c.ok = false;
    const auto& t = diff.terms().front();
    c.detail = "lhs - rhs has " + std::to_string(diff.size()) + " terms, first " +
               rational_to_string(t.second) + "*" + t.first.to_string();
    return c;
  }
};

struct VerificationReport {
  std::string theorem;
  int n = 0;
  long cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void add(const std::string& label, const IdentityCheck& c) {
    ++cases;
    if (!c.ok) failures.push_back(label + ": " + c.detail);
  }
  void add(const std::string& label, bool ok, const std::string& why = {}) {
    ++cases;
    if (!ok) failures.push_back(why.empty() ? label : label + ": " + why);
  }
  void absorb(const VerificationReport& r) {
    cases += r.cases;
    failures.insert(failures.end(), r.failures.begin(), r.failures.end());
  }

  nlohmann::json to_json() const {
    return {{"theorem", theorem}, {"n", n}, {"cases", cases}, {"failures", failures}};
  }
};

}  // namespace pfaflab
