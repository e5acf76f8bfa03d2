#include "doctest.h"
#include "reflectarr/errors.hpp"
#include "reflectarr/singular_locus.hpp"

using namespace reflectarr;

namespace {

const CyclotomicField Q(1);

MultiPoly P(const std::string& s, unsigned n = 3) { return MultiPoly::parse(s, n, Q); }

CycVector vec(std::initializer_list<long> v) {
  CycVector out;
  for (long c : v) out.push_back(CyclotomicNumber(Q, Rational(c)));
  return out;
}

Ideal I_of(std::initializer_list<const char*> gens, unsigned n = 3) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(P(s, n));
  return Ideal(n, Q, std::move(g));
}

Ideal minors_ideal(const PolyMatrix& m) {
  const auto minors = maximal_minors(m);
  return Ideal(minors);
}

}  // namespace

TEST_CASE("two coordinate hyperplanes meet in one flat") {
  Arrangement A(3, Q);
  A.add(vec({1, 0, 0}), 2);
  A.add(vec({0, 1, 0}), 2);
  const SingularLocus L = singular_ideal_definitional(A);
  CHECK_FALSE(L.empty_locus);
  CHECK(L.flat_count == 1);
  CHECK(ideal_equal(L.ideal, I_of({"x0", "x1"})));
}

TEST_CASE("one hyperplane has empty singular locus") {
  Arrangement A(3, Q);
  A.add(vec({1, -1, 0}), 2);
  const SingularLocus L = singular_ideal_definitional(A);
  CHECK(L.empty_locus);
  CHECK(L.flat_count == 0);
  CHECK(L.ideal.groebner().is_unit());
}

TEST_CASE("A2 on three letters: a single prime") {
  const SingularLocus L = singular_ideal_definitional(build_arrangement(GroupSpec::parse("A2")));
  CHECK(L.flat_count == 1);
  CHECK(ideal_equal(L.ideal, I_of({"x0 - x1", "x1 - x2"})));
  CHECK(hilbert_multiplicity(L.ideal).multiplicity == 1);
}

TEST_CASE("coordinate triangle") {
  Arrangement A(3, Q);
  for (unsigned i = 0; i < 3; ++i) {
    CycVector v = vec({0, 0, 0});
    v[i] = CyclotomicNumber(Q, Rational(1));
    A.add(v, 2);
  }
  const SingularLocus L = singular_ideal_definitional(A);
  CHECK(L.flat_count == 3);
  CHECK(ideal_equal(L.ideal, I_of({"x0*x1", "x0*x2", "x1*x2"})));
  CHECK(hilbert_multiplicity(L.ideal).multiplicity == hilbert_burch_multiplicity({1, 1}));
}

TEST_CASE("Hilbert-Burch multiplicities") {
  CHECK(hilbert_burch_multiplicity({1, 1}) == 3);
  CHECK(hilbert_burch_multiplicity({1, 2}) == 7);
  CHECK(hilbert_burch_multiplicity({3, 5}) == 49);
  CHECK(hilbert_burch_multiplicity({5, 11}) == 201);
  CHECK(hilbert_burch_multiplicity({1, 1, 1}) == 6);
  CHECK_THROWS_AS(hilbert_burch_multiplicity({}), PreconditionError);
  CHECK_THROWS_AS(hilbert_burch_multiplicity({0, 2}), PreconditionError);
}

TEST_CASE("definitional multiplicity equals the flat count and the closed form") {
  for (const char* g : {"A3", "A4", "G(2,2,3)", "G(3,3,3)", "G(2,1,3)", "G(3,1,3)", "G(2,2,4)", "G(3,1,4)"}) {
    CAPTURE(g);
    const GroupSpec s = GroupSpec::parse(g);
    const SingularLocus L = singular_ideal_definitional(build_arrangement(s));
    CHECK(static_cast<std::int64_t>(L.flat_count) == codim2_flat_formula(s));
    CHECK(hilbert_multiplicity(L.ideal).multiplicity == codim2_flat_formula(s));
  }
}

TEST_CASE("explicit generators") {
  const GroupSpec a3 = GroupSpec::parse("A3");
  const Ideal E = explicit_generators(a3);
  CHECK(E.gens().size() == 4);
  CHECK(minimal_generator_count(E) == 3);
  CHECK(ideal_equal(E, singular_ideal_definitional(build_arrangement(a3)).ideal));
  for (const auto& g : E.gens()) CHECK(g.is_homogeneous());
  CHECK_THROWS_AS(explicit_generators(GroupSpec::parse("A2")), PreconditionError);
  CHECK_THROWS_AS(explicit_generators(GroupSpec::parse("A2xA2")), PreconditionError);
}

TEST_CASE("Jacobian matrix of power sums") {
  const GroupSpec s = GroupSpec::parse("A2");
  const InvariantSet inv = basic_invariants(s);
  REQUIRE(inv.polys.size() == 3);
  CHECK(inv.polys[0] == P("x0 + x1 + x2"));
  const PolyMatrix J = jacobian_matrix(inv, 2);
  CHECK(J.rows() == 3);
  CHECK(J.cols() == 2);
  CHECK(J.at(1, 1) == P("2*x1"));
  CHECK(ideal_equal(minors_ideal(J), I_of({"x0 - x1", "x1 - x2"})));
}

TEST_CASE("derivation matrix of G(m,1,n)") {
  const GroupSpec s = GroupSpec::parse("G(2,1,3)");
  const PolyMatrix D = derivation_matrix(s, 2);
  const CyclotomicField& F = D.at(0, 0).field();
  CHECK(D.at(0, 0) == MultiPoly::parse("x0", 3, F));
  CHECK(D.at(2, 1) == MultiPoly::parse("x2^3", 3, F));
  CHECK(ideal_equal(minors_ideal(D), singular_ideal_definitional(build_arrangement(s)).ideal));
  CHECK_THROWS(derivation_matrix(GroupSpec::parse("G(3,3,3)"), 2));
}

TEST_CASE("maximal minors of the derivation matrix have the Euler-type linear syzygy") {
  for (const char* g : {"G(2,1,3)", "G(3,1,3)"}) {
    CAPTURE(g);
    const GroupSpec s = GroupSpec::parse(g);
    const auto minors = maximal_minors(derivation_matrix(s, 2));
    const auto syz = linear_syzygies(minors);
    REQUIRE_FALSE(syz.empty());
    MultiPoly z = MultiPoly(3, minors[0].field());
    for (std::size_t k = 0; k < minors.size(); ++k) z = z + syz[0][k] * minors[k];
    CHECK(z.is_zero());
  }
}

TEST_CASE("singular ideal of a product") {
  const GroupSpec s = GroupSpec::parse("A2xA2");
  const auto factors = product_factors(s);
  REQUIRE(factors.size() == 2);
  const Ideal J = product_singular_ideal(factors);
  const SingularLocus L = singular_ideal_definitional(build_arrangement(s));
  CHECK(ideal_equal(J, L.ideal));
  CHECK(L.flat_count == 11);
  CHECK(ideal_equal(product_singular_ideal(factors[0].J, factors[0].F, factors[1].J, factors[1].F), J));
}

TEST_CASE("every construction agrees on small groups") {
  for (const char* g : {"A3", "G(3,3,3)", "G(2,1,3)", "G(3,1,3)"}) {
    CAPTURE(g);
    const EqJReport rep = verify_theorem_eqJ(GroupSpec::parse(g));
    CHECK(rep.verdict() == "pass");
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.verdict == "pass");
    }
    for (const auto& c : determinant_identity_checks(GroupSpec::parse(g))) {
      CAPTURE(c.name);
      CHECK(c.verdict == "pass");
    }
  }
  const EqJReport tiny = verify_theorem_eqJ(GroupSpec::parse("A4"), 3);
  CHECK(tiny.verdict() == "budget-exceeded");
  CHECK(tiny.to_json(false).dump() == verify_theorem_eqJ(GroupSpec::parse("A4"), 3).to_json(false).dump());
}

TEST_CASE("Jacobian determinant target") {
  const Arrangement A = build_arrangement(GroupSpec::parse("G(3,1,2)"));
  const MultiPoly t = jacobian_determinant_target(A);
  CHECK(t.degree() == 3 + 2 * 2);
}

TEST_CASE("exceptional table values") {
  const SporadicCheck g24 = sporadic_table_check(*find_sporadic("G24"));
  CHECK(g24.e_M == 49);
  CHECK(g24.jacobian_route());
  const SporadicCheck g25 = sporadic_table_check(*find_sporadic("G25"));
  CHECK(g25.e_Q == 21);
  CHECK(g25.derivation_route());
  CHECK_FALSE(g25.jacobian_route());
  CHECK(g25.to_json()["e_M"] == g25.e_M);
}

TEST_CASE("Fermat generators have no linear syzygy") {
  for (const char* g : {"G(3,3,3)", "G(4,4,3)"}) {
    CAPTURE(g);
    const Ideal E = explicit_generators(GroupSpec::parse(g));
    CHECK(E.gens().size() == 3);
    CHECK(linear_syzygies(E.gens()).empty());
  }
  const Ideal B = explicit_generators(GroupSpec::parse("G(2,1,3)"));
  CHECK_FALSE(linear_syzygies(B.gens()).empty());
}
