#pragma once

// Exact multivariate polynomials with rational coefficients.
//
// Variables are either skew matrix entries a[i,j] (i < j) or plain
// indeterminates x[k]. Terms are kept sorted in descending graded-lex order,
// so equality is structural and to_string() is canonical.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pfaflab {

using Rational = mpq_class;
using Integer = mpz_class;

// gmpxx has no long long constructor; long is 64-bit on the supported targets.
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Variable {
 public:
  enum class Kind : std::uint8_t { MatrixEntry = 0, Indeterminate = 1 };

  Variable() = default;

  static Variable entry(int i, int j) {
    if (i < 1 || j <= i || j >= (1 << 15))
      throw std::invalid_argument("matrix entry needs 1 <= i < j");
    return Variable((std::uint32_t(i) << 15) | std::uint32_t(j));
  }
  static Variable indeterminate(int k) {
    if (k < 1 || k >= (1 << 30))
      throw std::invalid_argument("indeterminate index must be positive");
    return Variable((1u << 31) | std::uint32_t(k));
  }
  static Variable from_code(std::uint32_t c) { return Variable(c); }

  Kind kind() const { return (code_ >> 31) ? Kind::Indeterminate : Kind::MatrixEntry; }
  int first() const {
    return kind() == Kind::Indeterminate ? int(code_ & 0x7fffffffu) : int((code_ >> 15) & 0x7fffu);
  }
  int second() const { return kind() == Kind::Indeterminate ? 0 : int(code_ & 0x7fffu); }
  std::uint32_t code() const { return code_; }

  std::string to_string() const {
    if (kind() == Kind::Indeterminate) return "x[" + std::to_string(first()) + "]";
    return "a[" + std::to_string(first()) + "," + std::to_string(second()) + "]";
  }

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  explicit Variable(std::uint32_t c) : code_(c) {}
  std::uint32_t code_ = 0;
};

inline Variable a(int i, int j) { return Variable::entry(i, j); }
inline Variable x(int k) { return Variable::indeterminate(k); }

// Sparse exponent vector, sorted by variable code.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable code, exponent)

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t e = 1) {
    if (e) f_.emplace_back(v.code(), e);
  }
  static Monomial from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end());
    Monomial m;
    for (auto& [c, e] : fs) {
      if (!e) continue;
      if (!m.f_.empty() && m.f_.back().first == c)
        m.f_.back().second += e;
      else
        m.f_.emplace_back(c, e);
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto& p : f_) d += p.second;
    return d;
  }
  std::uint32_t exponent(Variable v) const {
    for (auto& p : f_)
      if (p.first == v.code()) return p.second;
    return 0;
  }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    Monomial m;
    m.f_.reserve(l.f_.size() + r.f_.size());
    auto i = l.f_.begin(), j = r.f_.begin();
    while (i != l.f_.end() && j != r.f_.end()) {
      if (i->first < j->first) m.f_.push_back(*i++);
      else if (j->first < i->first) m.f_.push_back(*j++);
      else { m.f_.emplace_back(i->first, i->second + j->second); ++i; ++j; }
    }
    m.f_.insert(m.f_.end(), i, l.f_.end());
    m.f_.insert(m.f_.end(), j, r.f_.end());
    return m;
  }

  // Descending graded-lex: true if l comes before r when printing.
  static bool grlex_greater(const Monomial& l, const Monomial& r) {
    auto dl = l.degree(), dr = r.degree();
    if (dl != dr) return dl > dr;
    std::size_t n = std::min(l.f_.size(), r.f_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (l.f_[k].first != r.f_[k].first) return l.f_[k].first < r.f_[k].first;
      if (l.f_[k].second != r.f_[k].second) return l.f_[k].second > r.f_[k].second;
    }
    return l.f_.size() < r.f_.size();
  }

  std::string to_string() const {
    if (f_.empty()) return "1";
    std::string s;
    for (auto& [c, e] : f_) {
      if (!s.empty()) s += '*';
      s += Variable::from_code(c).to_string();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto& [c, e] : f_) {
      h ^= (std::size_t(c) << 8) ^ e;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::vector<Factor> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};
struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const { return Monomial::grlex_greater(l, r); }
};

inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long c) { if (c) t_.emplace_back(Monomial(), Rational(c)); }  // NOLINT
  Polynomial(const Rational& c) { if (c != 0) t_.emplace_back(Monomial(), c); }  // NOLINT
  Polynomial(Variable v) { t_.emplace_back(Monomial(v), Rational(1)); }  // NOLINT
  Polynomial(const Monomial& m, const Rational& c = 1) { if (c != 0) t_.emplace_back(m, c); }

  static Polynomial from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& l, const Term& r) {
      return Monomial::grlex_greater(l.first, r.first);
    });
    Polynomial p;
    for (auto& t : ts) {
      if (!p.t_.empty() && p.t_.back().first == t.first)
        p.t_.back().second += t.second;
      else
        p.t_.push_back(std::move(t));
      if (p.t_.back().second == 0) p.t_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rational constant_value() const {
    if (t_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return t_[0].second;
  }
  int degree() const { return t_.empty() ? -1 : int(t_.front().first.degree()); }
  Rational coefficient(const Monomial& m) const {
    for (auto& t : t_)
      if (t.first == m) return t.second;
    return 0;
  }
  bool is_homogeneous() const {
    for (auto& t : t_)
      if (t.first.degree() != t_.front().first.degree()) return false;
    return true;
  }
  bool has_nonnegative_coefficients() const {
    for (auto& t : t_)
      if (t.second < 0) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.t_) t.second = -t.second;
    return p;
  }

  friend Polynomial operator+(const Polynomial& l, const Polynomial& r) { return merge(l, r, false); }
  friend Polynomial operator-(const Polynomial& l, const Polynomial& r) { return merge(l, r, true); }
  Polynomial& operator+=(const Polynomial& r) { return *this = merge(*this, r, false); }
  Polynomial& operator-=(const Polynomial& r) { return *this = merge(*this, r, true); }

  friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    if (l.is_constant()) return r.scaled(l.t_[0].second);
    if (r.is_constant()) return l.scaled(r.t_[0].second);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(l.size() * r.size());
    for (auto& [ml, cl] : l.t_)
      for (auto& [mr, cr] : r.t_) acc[ml * mr] += cl * cr;
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) ts.emplace_back(m, c);
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
      return Monomial::grlex_greater(a.first, b.first);
    });
    Polynomial p;
    p.t_ = std::move(ts);
    return p;
  }
  Polynomial& operator*=(const Polynomial& r) { return *this = *this * r; }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.t_) t.second *= c;
    return p;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  // Ring homomorphism sending each variable through `image`.
  Polynomial substitute(const std::function<Polynomial(Variable)>& image) const {
    std::map<std::uint32_t, Polynomial> cache;
    Polynomial out;
    for (auto& [m, c] : t_) {
      Polynomial term(c);
      for (auto& [code, e] : m.factors()) {
        auto it = cache.find(code);
        if (it == cache.end()) it = cache.emplace(code, image(Variable::from_code(code))).first;
        term *= it->second.pow(e);
      }
      out += term;
    }
    return out;
  }

  Rational evaluate(const std::function<Rational(Variable)>& value) const {
    Rational s = 0;
    for (auto& [m, c] : t_) {
      Rational p = c;
      for (auto& [code, e] : m.factors()) {
        Rational v = value(Variable::from_code(code));
        for (std::uint32_t k = 0; k < e; ++k) p *= v;
      }
      s += p;
    }
    return s;
  }

  std::vector<Variable> variables() const {
    std::vector<Variable> vs;
    for (auto& t : t_)
      for (auto& f : t.first.factors()) vs.push_back(Variable::from_code(f.first));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        s += rational_to_string(mag);
      } else {
        if (mag != 1) s += rational_to_string(mag) + "*";
        s += m.to_string();
      }
    }
    return s;
  }

  friend bool operator==(const Polynomial& l, const Polynomial& r) {
    if (l.t_.size() != r.t_.size()) return false;
    for (std::size_t i = 0; i < l.t_.size(); ++i)
      if (!(l.t_[i].first == r.t_[i].first) || l.t_[i].second != r.t_[i].second) return false;
    return true;
  }

 private:
  static Polynomial merge(const Polynomial& l, const Polynomial& r, bool subtract) {
    Polynomial p;
    p.t_.reserve(l.size() + r.size());
    auto i = l.t_.begin(), j = r.t_.begin();
    while (i != l.t_.end() || j != r.t_.end()) {
      if (j == r.t_.end() || (i != l.t_.end() && Monomial::grlex_greater(i->first, j->first))) {
        p.t_.push_back(*i++);
      } else if (i == l.t_.end() || Monomial::grlex_greater(j->first, i->first)) {
        p.t_.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
        ++j;
      } else {
        Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
        if (c != 0) p.t_.emplace_back(i->first, c);
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> t_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// Parser for the rendering produced by to_string() (and a little more:
// spaces anywhere, explicit '*' between a coefficient and a variable optional,
// bare integers or fractions).
namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial");
    Polynomial p;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial t = term();
      p += sign < 0 ? -t : t;
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  long integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(b, pos_ - b)));
  }

  Polynomial factor() {
    skip();
    char c = peek();
    Polynomial base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(b, pos_ - b));
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
        num += "/" + std::string(s_.substr(d, pos_ - d));
      }
      Rational q;
      if (q.set_str(num, 10) != 0) fail("bad number");
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      base = Polynomial(q);
    } else if (c == 'a' || c == 'x') {
      ++pos_;
      skip();
      if (peek() != '[') fail("expected '['");
      ++pos_;
      long i = integer();
      skip();
      if (c == 'a') {
        if (peek() != ',') fail("expected ','");
        ++pos_;
        long j = integer();
        skip();
        if (peek() != ']') fail("expected ']'");
        ++pos_;
        if (i < 1 || j <= i) fail("matrix entry needs 1 <= i < j");
        base = Polynomial(Variable::entry(int(i), int(j)));
      } else {
        if (peek() != ']') fail("expected ']'");
        ++pos_;
        if (i < 1) fail("indeterminate index must be positive");
        base = Polynomial(Variable::indeterminate(int(i)));
      }
    } else if (c == '(') {
      ++pos_;
      std::size_t depth = 1, b = pos_;
      while (pos_ < s_.size() && depth) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parenthesis");
      base = PolyParser(s_.substr(b, pos_ - b - 1)).parse();
    } else {
      fail("unexpected character");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      long e = integer();
      base = base.pow(unsigned(e));
    }
    return base;
  }

  Polynomial term() {
    Polynomial t = factor();
    while (true) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
        t *= factor();
      } else if (c == 'a' || c == 'x' || c == '(') {
        t *= factor();
      } else {
        break;
      }
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view s) { return detail::PolyParser(s).parse(); }

inline Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  Rational q;
  if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational: " + std::string(s));
  q.canonicalize();
  return q;
}

}  // namespace pfaflab
