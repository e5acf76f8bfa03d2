#include "doctest.h"
#include "reflectarr/errors.hpp"
#include "reflectarr/exact_arith.hpp"

using namespace reflectarr;

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Schoolbook division by a monic divisor; returns quotient, requires zero remainder.
IntPoly long_divide(IntPoly num, const IntPoly& den) {
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + den.size() - 1];
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  for (const auto& c : num) REQUIRE(c == 0);
  return q;
}

IntPoly ints(std::initializer_list<long> v) {
  IntPoly out;
  for (long c : v) out.push_back(BigInt(c));
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials against hand division") {
  // t^12 - 1 divided by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 written out by hand.
  IntPoly t12 = ints({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  IntPoly d = poly_mul(poly_mul(ints({-1, 1}), ints({1, 1})), ints({1, 1, 1}));
  d = poly_mul(poly_mul(d, ints({1, 0, 1})), ints({1, -1, 1}));
  CHECK(long_divide(t12, d) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("cube roots of unity") {
  const CyclotomicField F(3);
  CHECK(F.degree() == 2);
  const auto z = CyclotomicNumber::root_of_unity(F);
  const CyclotomicNumber one(F, Rational(1));
  CHECK((one + z) * (one + z * z) == one);
  CHECK(z.pow(3) == one);
  CHECK(one + z + z * z == CyclotomicNumber(F));
  CHECK(z.inverse() == z * z);
  CHECK_FALSE(z.is_rational());
}

TEST_CASE("field of conductor 2 is rational") {
  const CyclotomicField F(2);
  CHECK(F.degree() == 1);
  const auto z = CyclotomicNumber::root_of_unity(F);
  CHECK(z.is_rational());
  CHECK(z.rational() == Rational(-1));
}

TEST_CASE("fourth roots and inversion") {
  const CyclotomicField F(4);
  const auto i = CyclotomicNumber::root_of_unity(F);
  const CyclotomicNumber one(F, Rational(1));
  CHECK(i * i == -one);
  const auto a = one + i * CyclotomicNumber(F, Rational(2));
  CHECK(a * a.inverse() == one);
  CHECK((a / a) == one);
  CHECK_THROWS_AS(CyclotomicNumber(F).inverse(), DivisionByZero);
}

TEST_CASE("parsing and printing in z") {
  const CyclotomicField F(3);
  const auto a = CyclotomicNumber::parse(F, "1/2*z^2 - 3");
  const auto z = CyclotomicNumber::root_of_unity(F);
  CHECK(a == z * z * CyclotomicNumber(F, Rational(1, 2)) - CyclotomicNumber(F, Rational(3)));
  CHECK(CyclotomicNumber::parse(F, a.to_string()) == a);
  CHECK(CyclotomicNumber::parse(F, "z^3") == CyclotomicNumber(F, Rational(1)));
}

TEST_CASE("primitive 5th root: minimal relation") {
  const CyclotomicField F(5);
  const auto z = CyclotomicNumber::root_of_unity(F);
  CyclotomicNumber s(F);
  for (int k = 0; k < 5; ++k) s = s + z.pow(k);
  CHECK(s.is_zero());
  CHECK(z.pow(-1) == z.pow(4));
}
