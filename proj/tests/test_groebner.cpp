#include <algorithm>

#include "doctest.h"
#include "reflectarr/errors.hpp"
#include "reflectarr/groebner.hpp"

#include "oracles/sympy_golden.inc"

using namespace reflectarr;

namespace {

const CyclotomicField Q(1);

MultiPoly P(const std::string& s, unsigned n = 3) { return MultiPoly::parse(s, n, Q); }

Ideal I_of(std::vector<std::string> gens, unsigned n = 3) {
  std::vector<MultiPoly> g;
  for (const auto& s : gens) g.push_back(P(s, n));
  return Ideal(n, Q, std::move(g));
}

std::vector<std::string> monic_strings(const std::vector<MultiPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.monic().with_order(MonomialOrder::grevlex()).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> parsed_monic(const std::vector<const char*>& v, unsigned n) {
  std::vector<MultiPoly> ps;
  for (const char* s : v) ps.push_back(P(s, n));
  return monic_strings(ps);
}

}  // namespace

TEST_CASE("reduced bases match sympy") {
  for (const auto& c : kGoldenGb) {
    CAPTURE(c.name);
    std::vector<std::string> gens(c.gens.begin(), c.gens.end());
    const Ideal I = I_of(gens, c.nvars);
    CHECK(monic_strings(I.groebner().elements()) == parsed_monic(c.basis, c.nvars));
  }
}

TEST_CASE("intersections match sympy elimination") {
  for (const auto& c : kGoldenIntersection) {
    CAPTURE(c.name);
    const Ideal I = I_of({c.I.begin(), c.I.end()}, c.nvars);
    const Ideal J = I_of({c.J.begin(), c.J.end()}, c.nvars);
    const Ideal K = intersect_pair(I, J);
    CHECK(monic_strings(K.groebner().elements()) == parsed_monic(c.basis, c.nvars));
  }
}

TEST_CASE("normal forms and membership") {
  const Ideal I = I_of({"x0^2 - x1", "x0*x1 - x2"});
  CHECK(I.contains(P("x0^3 - x0*x1")));
  CHECK(I.contains(P("x1^2 - x0*x2")));
  CHECK_FALSE(I.contains(P("x0")));
  const auto& G = I.groebner();
  CHECK(normal_form(P("x0^2"), G) == P("x1"));
  CHECK(I.contains(P("0")));
}

TEST_CASE("unit ideal and zero ideal") {
  const Ideal U = I_of({"x0 + 1", "x0"});
  CHECK(U.groebner().is_unit());
  CHECK(U.contains(P("x1^5 + 3")));
  const Ideal Z(3, Q, {});
  CHECK(Z.is_zero());
  CHECK(Z.contains(P("0")));
  CHECK_FALSE(Z.contains(P("x0")));
}

TEST_CASE("truncated bases resume to the full basis") {
  const Ideal I = I_of({"x0^3 - x1*x2^2", "x1^3 - x0^2*x2", "x0*x1 - x2^2"});
  const GroebnerBasis low = I.truncated_groebner(3);
  CHECK_FALSE(low.complete());
  CHECK(I.contains(P("x2^5 - x0*x2^4")));
  const Ideal fresh = I_of({"x0^3 - x1*x2^2", "x1^3 - x0^2*x2", "x0*x1 - x2^2"});
  CHECK(monic_strings(I.groebner().elements()) == monic_strings(fresh.groebner().elements()));
}

TEST_CASE("ideal equality and containment") {
  const Ideal I = I_of({"x0*x1", "x0*x2", "x1*x2"});
  const Ideal J = ideal_intersection({I_of({"x0", "x1"}), I_of({"x0", "x2"}), I_of({"x1", "x2"})});
  CHECK(ideal_equal(I, J));
  CHECK(ideal_contained(ideal_power(I, 2), I));
  CHECK_FALSE(ideal_contained(I, ideal_power(I, 2)));
  CHECK(ideal_equal(ideal_product(I_of({"x0"}), I_of({"x1", "x2"})), I_of({"x0*x1", "x0*x2"})));
  CHECK(ideal_equal(ideal_sum(I_of({"x0"}), I_of({"x1"})), I_of({"x1", "x0"})));
  CHECK(ideal_power(I_of({"x0", "x1"}), 3).gens().size() == 4);
}

TEST_CASE("radical membership") {
  const Ideal I = I_of({"x0^3", "x1^2*x2"});
  CHECK(radical_member(P("x0"), I));
  CHECK(radical_member(P("x1*x2"), I));
  CHECK_FALSE(radical_member(P("x1"), I));
  CHECK(radical_equal(I_of({"x0^2", "x1^3"}), I_of({"x0", "x1"})));
}

TEST_CASE("Hilbert series of monomial ideals") {
  // R/(x0^2) in 3 variables: (1 + t)/(1 - t)^2
  const auto h = hilbert_multiplicity(I_of({"x0^2"}));
  CHECK(h.dimension == 2);
  CHECK(h.multiplicity == 2);
  CHECK(hilbert_multiplicity(I_of({"x0*x1", "x0*x2", "x1*x2"})).multiplicity == 3);
  CHECK(hilbert_multiplicity(I_of({"x0*x1", "x0*x2", "x1*x2"})).dimension == 1);
  const auto mult = hilbert_multiplicity(ideal_power(I_of({"x0", "x1"}), 3));
  CHECK(mult.dimension == 1);
  CHECK(mult.multiplicity == 6);
  const std::vector<Monomial> gens{Monomial{1, 1, 0}, Monomial{0, 2, 0}};
  CHECK(hilbert_numerator(gens) == std::vector<BigInt>{1, 0, -2, 1});
}

TEST_CASE("three generic points have multiplicity 3") {
  const Ideal J = ideal_intersection({I_of({"x0", "x1"}), I_of({"x1", "x2"}), I_of({"x0 - x1", "x2 - x0"})});
  CHECK(hilbert_multiplicity(J).multiplicity == 3);
}

TEST_CASE("minimal generators, alpha and linear syzygies") {
  const Ideal I = I_of({"x0*x1", "x0*x1 + x0*x2", "x0*x2", "x0^2*x1"});
  CHECK(minimal_generator_count(I) == 2);
  CHECK(alpha(I) == 2);
  CHECK(alpha(I_of({"x0^3 + x1^3", "x2^4"})) == 3);
  const auto syz = linear_syzygies({P("x0*x1"), P("x0*x2"), P("x1*x2")});
  CHECK(syz.size() == 2);
  for (const auto& s : syz) {
    const MultiPoly z = s[0] * P("x0*x1") + s[1] * P("x0*x2") + s[2] * P("x1*x2");
    CHECK(z.is_zero());
  }
  CHECK(linear_syzygies({P("x0^2"), P("x1^2")}).empty());
}

TEST_CASE("serialization and hashes") {
  const Ideal I = I_of({"x0^2 - x1", "1/2*x2"});
  const std::string text = I.serialize();
  const Ideal back = Ideal::deserialize(text);
  CHECK(back.serialize() == text);
  CHECK(back.hash() == I.hash());
  CHECK(I.hash().size() == 16);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK_THROWS_AS(Ideal::deserialize("ideal nvars=3 conductor=1 order=grevlex\nx0 +\n"), ParseError);
  try {
    Ideal::deserialize("ideal nvars=3 conductor=1 order=grevlex\nx0\nx9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("budget overrun is reported and recoverable") {
  const Ideal I = I_of({"x0^5 - x1*x2^4 + x0*x1", "x1^5 - x0^3*x2^2 + x2", "x2^5 - x0*x1^4 + x0^2"});
  CHECK_THROWS_AS(I.groebner(MonomialOrder::grevlex(), 10), BudgetExceeded);
  {
    BudgetScope scope(10);
    const Ideal K = I_of({"x0^5 - x1*x2^4 + x0*x1", "x1^5 - x0^3*x2^2 + x2", "x2^5 - x0*x1^4 + x0^2"});
    CHECK_THROWS_AS(K.groebner(), BudgetExceeded);
  }
  CHECK(default_budget() > 10);
  CHECK(I.groebner().complete());
}
