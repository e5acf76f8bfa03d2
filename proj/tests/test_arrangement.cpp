#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "reflectarr/arrangement.hpp"
#include "reflectarr/errors.hpp"
#include "reflectarr/suite.hpp"

using namespace reflectarr;

namespace {

long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Pairwise enumeration: every codim-2 flat is spanned by two of its hyperplanes,
// so the distinct incidence sets of all pairs are exactly the flats.
std::size_t brute_force_codim2(const Arrangement& A) {
  std::set<std::vector<unsigned>> seen;
  const auto& H = A.hyperplanes();
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j) {
      std::vector<unsigned> inc;
      for (std::size_t k = 0; k < H.size(); ++k) {
        const CycMatrix m = {H[i].coeffs, H[j].coeffs, H[k].coeffs};
        if (matrix_rank(m, A.field(), A.nvars()) == 2) inc.push_back(static_cast<unsigned>(k));
      }
      seen.insert(inc);
    }
  return seen.size();
}

long symmetric_codim2(long letters) {
  return choose(letters, 3) + choose(letters, 2) * choose(letters - 2, 2) / 2;
}

long monomial_codim2(long m, long n, bool full) {
  long c = m * m * choose(n, 3) + m * m * 3 * choose(n, 4) + choose(n, 2);
  if (full) c += n * m * choose(n - 1, 2);
  return c;
}

}  // namespace

TEST_CASE("hyperplane counts") {
  CHECK(build_arrangement(GroupSpec::parse("A3")).size() == 6);
  CHECK(build_arrangement(GroupSpec::parse("G(3,3,3)")).size() == 9);
  CHECK(build_arrangement(GroupSpec::parse("G(3,1,3)")).size() == 12);
  CHECK(build_arrangement(GroupSpec::parse("G(4,1,4)")).size() == 28);
  CHECK(build_arrangement(GroupSpec::parse("A2xG(2,1,2)")).size() == 7);
  CHECK(build_arrangement(GroupSpec::parse("G(2,1,3)")).hyperplanes().back().reflection_order == 2);
  const Arrangement c = build_arrangement(GroupSpec::parse("G(3,1,2)"));
  unsigned order3 = 0;
  for (const auto& h : c.hyperplanes()) order3 += h.reflection_order == 3;
  CHECK(order3 == 2);
}

TEST_CASE("codimension 2 flats: lattice, closed form and pairwise enumeration agree") {
  for (long letters = 3; letters <= 6; ++letters) {
    const Arrangement A = build_arrangement(GroupSpec::symmetric(static_cast<unsigned>(letters)));
    CAPTURE(letters);
    CHECK(static_cast<long>(flats_of_codim(A, 2).size()) == symmetric_codim2(letters));
    CHECK(brute_force_codim2(A) == flats_of_codim(A, 2).size());
  }
  for (unsigned m = 2; m <= 4; ++m)
    for (unsigned n = 3; n <= 4; ++n)
      for (bool full : {false, true}) {
        const GroupSpec s = full ? GroupSpec::full_monomial(m, n) : GroupSpec::monomial(m, n);
        const Arrangement A = build_arrangement(s);
        CAPTURE(s.to_string());
        CHECK(static_cast<long>(flats_of_codim(A, 2).size()) == monomial_codim2(m, n, full));
        CHECK(brute_force_codim2(A) == flats_of_codim(A, 2).size());
      }
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("A2xA2")), 2).size() == 11);
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("A2xA2")), 3).size() == 6);
}

TEST_CASE("codimension 3 flats of small groups") {
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("A3")), 3).size() == 1);
  // A4: 5 choose 4 quadruples plus 10 (triple, pair) splits.
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("A4")), 3).size() == 15);
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("G(3,3,4)")), 3).size() == 49);
  CHECK(flats_of_codim(build_arrangement(GroupSpec::parse("A2")), 3).empty());
}

TEST_CASE("center and rank") {
  const Arrangement A = build_arrangement(GroupSpec::parse("A3"));
  CHECK(A.rank() == 3);
  CHECK(center_flat(A).codim == 3);
  CHECK(center_flat(A).incident.size() == 6);
  CHECK(build_arrangement(GroupSpec::parse("G(2,1,3)")).rank() == 3);
}

TEST_CASE("fixer classification") {
  const GroupSpec a3 = GroupSpec::parse("A3");
  const Arrangement A = build_arrangement(a3);
  std::multiset<std::string> types;
  for (const auto& X : flats_of_codim(A, 2)) types.insert(classify_fixer(a3, A, X).to_string());
  CHECK(types.count("A2") == 4);
  CHECK(types.count("A1xA1") == 3);

  const GroupSpec g334 = GroupSpec::parse("G(3,3,4)");
  const Arrangement B = build_arrangement(g334);
  CycMatrix coords(3, CycVector(4, CyclotomicNumber(B.field())));
  for (unsigned i = 0; i < 3; ++i) coords[i][i] = CyclotomicNumber(B.field(), Rational(1));
  const Flat X = make_flat(B, coords);
  CHECK(X.codim == 3);
  CHECK(X.incident.size() == 9);
  CHECK(classify_fixer(g334, B, X).to_string() == "G(3,3,3)");

  std::multiset<std::string> b3;
  const GroupSpec s = GroupSpec::parse("G(2,1,3)");
  for (const auto& Y : flats_of_codim(build_arrangement(s), 2)) b3.insert(classify_fixer(s, Y).canonical().to_string());
  CHECK(b3.count("A2") == 4);
  CHECK(b3.count("G(2,1,2)") == 3);
  CHECK(b3.count("A1xG(2,1,1)") == 6);
}

TEST_CASE("localization and essentialization") {
  const Arrangement A = build_arrangement(GroupSpec::parse("A3"));
  for (const auto& X : flats_of_codim(A, 2)) {
    const Arrangement AX = localize(A, X);
    CHECK(AX.size() == X.incident.size());
    const Arrangement E = essentialize(AX, X);
    CHECK(E.nvars() == 2);
    CHECK(E.rank() == 2);
    CHECK(E.size() == AX.size());
  }
}

TEST_CASE("group notation") {
  CHECK(GroupSpec::parse("A3").nvars() == 4);
  CHECK(GroupSpec::parse("A3").rank() == 3);
  CHECK(GroupSpec::parse("G(1,1,4)") == GroupSpec::parse("A3"));
  CHECK(GroupSpec::parse("G(3,3,3)").conductor() == 3);
  CHECK(GroupSpec::parse("G(4,1,3)xA2").conductor() == 4);
  CHECK(GroupSpec::parse("A2xG(2,1,2)xA1").canonical().to_string() == GroupSpec::parse("G(2,1,2)xA1xA2").canonical().to_string());
  CHECK(GroupSpec::parse("G24", true).kind() == GroupSpec::Kind::Sporadic);
  CHECK_FALSE(GroupSpec::parse("G24", true).constructible());
  for (const char* bad : {"", "A", "G(3,3)", "G(0,1,3)", "G(3,2,3)", "G24", "A3x", "B3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupSpec::parse(bad), ParseError);
  }
}

TEST_CASE("arrangement serialization round trip") {
  for (const char* g : {"A3", "G(3,3,4)", "G(4,1,3)", "A2xG(3,1,2)"}) {
    CAPTURE(g);
    const Arrangement A = build_arrangement(GroupSpec::parse(g));
    const Arrangement B = Arrangement::deserialize(A.serialize());
    CHECK(A == B);
    CHECK(B.serialize() == A.serialize());
  }
  const Arrangement d = Arrangement::deserialize("arrangement nvars=3 conductor=1\nx0 - x1\n# note\n2*x1 + 2*x2 ; 3\n");
  REQUIRE(d.size() == 2);
  CHECK(d.hyperplanes()[0].reflection_order == 2);
  CHECK(d.hyperplanes()[1].reflection_order == 3);
  CHECK(d.form(1) == MultiPoly::parse("x1 + x2", 3, CyclotomicField(1)));
  CHECK_THROWS_AS(Arrangement::deserialize("arrangement nvars=3 conductor=1\nx0 - x1 ; two\n"), ParseError);
  CHECK_THROWS_AS(Arrangement::deserialize("arrangement nvars=0 conductor=1\n"), ParseError);
  CHECK_THROWS_AS(Arrangement::deserialize("nonsense\n"), ParseError);
}

TEST_CASE("defining polynomial of A2") {
  const Arrangement A = build_arrangement(GroupSpec::parse("A2"));
  const MultiPoly F = defining_polynomial(A);
  CHECK(F.degree() == 3);
  CHECK(F.size() == 6);
}

TEST_CASE("built-in exceptional table matches the data file") {
  std::ifstream in(REFLECTARR_DATA_DIR "/sporadic_table.csv");
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto file = parse_sporadic_csv(buf.str());
  const auto& builtin = sporadic_records();
  REQUIRE(file.size() == builtin.size());
  for (std::size_t k = 0; k < file.size(); ++k) {
    CAPTURE(file[k].name);
    CHECK(file[k].name == builtin[k].name);
    CHECK(file[k].exponents == builtin[k].exponents);
    CHECK(file[k].coexponents == builtin[k].coexponents);
    CHECK(file[k].codim2_flat_count == builtin[k].codim2_flat_count);
    CHECK(file[k].exponents.size() == file[k].coexponents.size());
  }
  CHECK(sporadic_data_csv(builtin) == buf.str());
  CHECK(find_sporadic("G31") != nullptr);
  CHECK(find_sporadic("G22") == nullptr);
}
