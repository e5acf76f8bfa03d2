#include "doctest.h"
#include "reflectarr/linalg.hpp"
#include "reflectarr/poly_matrix.hpp"

using namespace reflectarr;

namespace {

const CyclotomicField Q(1);

CyclotomicNumber num(long v) { return CyclotomicNumber(Q, Rational(v)); }

MultiPoly P(const std::string& s, unsigned n = 3) { return MultiPoly::parse(s, n, Q); }

}  // namespace

TEST_CASE("row reduction and rank") {
  const CycMatrix m = {{num(1), num(2), num(3)}, {num(2), num(4), num(6)}, {num(1), num(0), num(1)}};
  const RowEchelon e = row_reduce(m, Q, 3);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<unsigned>{0, 1});
  CHECK(matrix_rank(m, Q, 3) == 2);
  const auto coords = row_space_coordinates(e, {num(3), num(4), num(7)});
  REQUIRE(coords);
  CHECK_FALSE(row_space_coordinates(e, {num(0), num(0), num(1)}));
}

TEST_CASE("nullspace and inverse") {
  const CycMatrix m = {{num(1), num(1), num(0)}, {num(0), num(1), num(1)}};
  const CycMatrix ns = nullspace(m, Q, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == ns[0][2]);
  CHECK(ns[0][1] == -ns[0][0]);
  const CycMatrix a = {{num(2), num(1)}, {num(7), num(4)}};
  const auto inv = matrix_inverse(a, Q);
  REQUIRE(inv);
  CHECK(matrix_multiply(a, *inv, Q) == identity_matrix(2, Q));
  CHECK_FALSE(matrix_inverse({{num(1), num(2)}, {num(2), num(4)}}, Q));
}

TEST_CASE("Vandermonde determinant") {
  std::vector<std::vector<MultiPoly>> rows;
  for (int i = 0; i < 4; ++i) {
    const auto x = MultiPoly::variable(4, Q, i);
    rows.push_back({x.pow(0), x, x.pow(2), x.pow(3)});
  }
  const PolyMatrix V(rows);
  MultiPoly expected = MultiPoly::constant(4, Q, Rational(1));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) expected = expected * (MultiPoly::variable(4, Q, j) - MultiPoly::variable(4, Q, i));
  CHECK(determinant_expansion(V) == expected);
  CHECK(determinant_bareiss(V) == expected);
}

TEST_CASE("Bareiss agrees with expansion on a 6x6 matrix") {
  std::vector<std::vector<MultiPoly>> rows;
  for (int i = 0; i < 6; ++i) {
    std::vector<MultiPoly> r;
    for (int j = 0; j < 6; ++j) {
      const long a = (i * 7 + j * 3) % 5 - 2, b = (i + 2 * j) % 3 - 1;
      r.push_back(P(std::to_string(a) + "*x0 + " + std::to_string(b) + "*x1 + " + (i == j ? "x2" : "0")));
    }
    rows.push_back(r);
  }
  const PolyMatrix m(rows);
  CHECK(determinant_bareiss(m) == determinant_expansion(m));
}

TEST_CASE("maximal minors of a 3x2 matrix") {
  const PolyMatrix m({{P("1"), P("x0")}, {P("1"), P("x1")}, {P("1"), P("x2")}});
  const auto minors = maximal_minors(m);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == P("x2 - x1"));
  CHECK(minors[1] == P("-(x2 - x0)"));
  CHECK(minors[2] == P("x1 - x0"));
  // Alternating signs make the minors a syzygy of the columns.
  MultiPoly s = P("0");
  for (int k = 0; k < 3; ++k) s = s + minors[k] * m.at(k, 1);
  CHECK(s.is_zero());
  CHECK_THROWS(maximal_minors(PolyMatrix({{P("1")}, {P("1")}, {P("1")}})));
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("x0^2 - x1^2"), P("x0 - x1")) == P("x0 + x1"));
  CHECK_THROWS(exact_divide(P("x0^2 + x1"), P("x0 - x1")));
}
