#include <gtest/gtest.h>

#include "pfaflab/linalg.hpp"
#include "pfaflab/poly.hpp"

using namespace pfaflab;

TEST(Polynomial, DifferenceOfSquares) {
  Polynomial p(a(1, 2)), q(a(1, 3));
  EXPECT_EQ((p + q) * (p - q), p * p - q * q);
  EXPECT_EQ(((p + q) * (p - q)).to_string(), "a[1,2]^2 - a[1,3]^2");
}

TEST(Polynomial, ZeroAndConstants) {
  Polynomial z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  Polynomial p(a(1, 2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(Polynomial(3L) * Polynomial(Rational(1, 3)), Polynomial(1L));
}

TEST(Polynomial, ParseRoundTrip) {
  for (const char* s : {"a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3]", "4*x[1]^2*x[2] + 4*x[1]*x[2]^2",
                        "-1/2*x[3] + 7", "0"}) {
    auto p = parse_polynomial(s);
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << s;
  }
  EXPECT_THROW(parse_polynomial("a[1,2"), ParseError);
}

TEST(Polynomial, BigCoefficientsStayExact) {
  Polynomial p = Polynomial(x(1)) + Polynomial(1L);
  Polynomial q = p.pow(40);
  // coefficient of x^20 is C(40,20)
  EXPECT_EQ(q.coefficient(Monomial(x(1), 20)), Rational(mpz_class("137846528820")));
  EXPECT_EQ(q.evaluate([](Variable) { return Rational(1); }), Rational(mpz_class(1) << 40));
}

TEST(Polynomial, Substitute) {
  Polynomial p = Polynomial(a(1, 2)) * Polynomial(a(3, 4));
  auto s = p.substitute([](Variable v) { return v.first() == 1 ? Polynomial(2L) : Polynomial(x(1)); });
  EXPECT_EQ(s, Polynomial(x(1)).scaled(2));
}

TEST(LinearAlgebra, RankOfDependentSet) {
  Polynomial p(a(1, 2)), q(a(1, 3));
  EXPECT_EQ(polynomial_rank({p, q, p + q}), 2u);
  EXPECT_EQ(polynomial_rank({}), 0u);
}

TEST(LinearAlgebra, ExpressInSpan) {
  Polynomial p(a(1, 2)), q(a(1, 3)), r(a(1, 4));
  auto c = express_in_span(p.scaled(2) - q, {p, q});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], 2);
  EXPECT_EQ((*c)[1], -1);
  EXPECT_FALSE(express_in_span(r, {p, q}).has_value());
}
