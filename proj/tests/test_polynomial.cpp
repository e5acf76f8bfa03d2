#include "doctest.h"
#include "reflectarr/errors.hpp"
#include "reflectarr/polynomial.hpp"

using namespace reflectarr;

namespace {

MultiPoly P(const std::string& s, unsigned n = 3, unsigned conductor = 1) {
  return MultiPoly::parse(s, n, CyclotomicField(conductor));
}

}  // namespace

TEST_CASE("monomial orders") {
  const Monomial a{2, 0, 1}, b{1, 2, 0}, c{0, 0, 4};
  const auto grevlex = MonomialOrder::grevlex();
  CHECK(grevlex.greater(b, a));  // same degree; a has more x2
  CHECK(grevlex.greater(c, a));  // higher degree
  const auto lex = MonomialOrder::lex();
  CHECK(lex.greater(a, b));
  CHECK(lex.greater(b, c));
  const auto block = MonomialOrder::block(1);
  CHECK(block.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  CHECK(MonomialOrder::parse("block:2") == MonomialOrder::block(2));
  CHECK(MonomialOrder::parse(grevlex.name()) == grevlex);
  CHECK_THROWS_AS(MonomialOrder::parse("deglex"), ParseError);
}

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 0, 1}, b{1, 0, 1};
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a / b == Monomial{1, 0, 0});
  CHECK(lcm(a, Monomial{0, 3}) == Monomial{2, 3, 1});
  CHECK(a.degree() == 3);
  CHECK(a.degree_in(1, 3) == 1);
}

TEST_CASE("parsing and printing round trip") {
  const auto p = P("3*x0^2*x1 - x1 + 1/2");
  CHECK(p.to_string() == "3*x0^2*x1 - x1 + 1/2");
  CHECK(P(p.to_string()) == p);
  CHECK(P("(x0 + x1)^2") == P("x0^2 + 2*x0*x1 + x1^2"));
  CHECK(P("x0*(x1 - x2) + x0*x2") == P("x0*x1"));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x3"), ParseError);
  CHECK_THROWS_AS(P("x0 +"), ParseError);
  CHECK_THROWS_AS(P("x0^"), ParseError);
}

TEST_CASE("cyclotomic coefficients in polynomials") {
  const CyclotomicField F(3);
  const auto p = MultiPoly::parse("x0 - z*x1", 2, F);
  const auto q = MultiPoly::parse("x0 - z^2*x1", 2, F);
  const auto r = MultiPoly::parse("x0 - x1", 2, F);
  // x0^3 - x1^3 = (x0 - x1)(x0 - z x1)(x0 - z^2 x1)
  CHECK(p * q * r == MultiPoly::parse("x0^3 - x1^3", 2, F));
  CHECK(MultiPoly::parse(p.to_string(), 2, F) == p);
}

TEST_CASE("A2 defining polynomial has 6 terms") {
  const auto F = P("(x0 - x1)*(x0 - x2)*(x1 - x2)");
  CHECK(F.size() == 6);
  CHECK(F.degree() == 3);
  CHECK(F.is_homogeneous());
}

TEST_CASE("derivatives") {
  const auto p = P("x0^3*x1 + 2*x1^2 - x2");
  CHECK(p.derivative(0) == P("3*x0^2*x1"));
  CHECK(p.derivative(1) == P("x0^3 + 4*x1"));
  CHECK(p.derivative(2) == P("-1"));
  CHECK(P("5").derivative(1).is_zero());
}

TEST_CASE("shifting between rings") {
  const auto p = P("x0*x1 + x1^2", 2);
  const auto s = p.shifted(5, 2);
  CHECK(s == P("x2*x3 + x3^2", 5));
  CHECK_FALSE(s.involves_leading_vars(2));
  CHECK(s.drop_leading_vars(2) == P("x0*x1 + x1^2", 3));
}

TEST_CASE("powers and scalar handling") {
  const auto p = P("x0 - x1");
  CHECK(p.pow(3) == P("x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3"));
  CHECK(p.pow(0) == P("1"));
  CHECK(P("2*x0 + 4*x1").monic() == P("x0 + 2*x1"));
  CHECK(P("x0^2 + x2").min_degree() == 1);
}

TEST_CASE("linear substitution inverts") {
  const CyclotomicField F(1);
  auto num = [&](long v) { return CyclotomicNumber(F, Rational(v)); };
  const CycMatrix T = {{num(1), num(1), num(0)}, {num(0), num(1), num(0)}, {num(2), num(0), num(1)}};
  const auto p = P("x0^2 - x1*x2");
  // x0 -> x0 + x1, x1 -> x1, x2 -> 2 x0 + x2
  CHECK(linear_substitution(p, T) == P("(x0 + x1)^2 - x1*(2*x0 + x2)"));
  const CycMatrix singular = {{num(1), num(1), num(0)}, {num(1), num(1), num(0)}, {num(0), num(0), num(1)}};
  CHECK_THROWS(linear_substitution(p, singular));
}
