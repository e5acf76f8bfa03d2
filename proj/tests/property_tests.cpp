#include "doctest.h"
#include "properties.hpp"

using namespace reflectarr::props;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kCases = 120;

void expect_clean(const PropertyOutcome& p) {
  CAPTURE(p.first_violation);
  CHECK(p.cases >= kCases);
  CHECK(p.violations == 0);
}

}  // namespace

TEST_CASE("field axioms") { expect_clean(field_axioms(kSeed, kCases)); }
TEST_CASE("Groebner bases are canonical") { expect_clean(groebner_canonicity(kSeed + 1, kCases)); }
TEST_CASE("intersection agrees with membership in both ideals") { expect_clean(intersection_membership(kSeed + 2, kCases)); }
TEST_CASE("ordinary powers inside symbolic powers") { expect_clean(ordinary_in_symbolic(kSeed + 3, kCases)); }
TEST_CASE("two symbolic membership oracles agree") { expect_clean(symbolic_membership_oracles(kSeed + 4, kCases)); }
TEST_CASE("doubled symbolic powers inside ordinary powers") { expect_clean(doubled_symbolic_in_ordinary(kSeed + 5, kCases)); }
TEST_CASE("rank-2 localizations") { expect_clean(rank2_localization(kSeed + 6, kCases)); }
