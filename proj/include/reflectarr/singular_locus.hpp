#pragma once

// Constructions of the singular-locus ideal J(A): the intersection of the
// codimension-2 flat primes, closed-form generators, and maximal minors of
// Jacobian and derivation coefficient matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "reflectarr/arrangement.hpp"
#include "reflectarr/groebner.hpp"
#include "reflectarr/poly_matrix.hpp"
#include "reflectarr/report.hpp"

namespace reflectarr {

struct SingularLocus {
  Ideal ideal;
  /// No codimension-2 flat exists; `ideal` is then the unit ideal.
  bool empty_locus = false;
  std::size_t flat_count = 0;
};

/// Intersection of the primes of all codimension-2 flats, in enumeration order.
SingularLocus singular_ideal_definitional(const Arrangement& A,
                                          std::optional<std::uint64_t> budget = std::nullopt);

/// One closed-form generator per omitted index s. Irreducible families of rank >= 3.
Ideal explicit_generators(const GroupSpec& spec);

struct InvariantSet {
  GroupSpec spec;
  std::vector<MultiPoly> polys;  // weakly increasing degree
};

InvariantSet basic_invariants(const GroupSpec& spec);
/// nvars x how_many matrix of partials of the first `how_many` invariants.
PolyMatrix jacobian_matrix(const InvariantSet& inv, unsigned how_many);
/// FullMonomial only: column j has entries x_i^{jm+1}.
PolyMatrix derivation_matrix(const GroupSpec& spec, unsigned how_many);

/// sum_i C(s+e_i, 2) - (n+1) C(s, 2) with s = sum_i e_i.
std::int64_t hilbert_burch_multiplicity(const std::vector<int>& degrees);

/// Closed-form number of codimension-2 flats of an irreducible family.
std::int64_t codim2_flat_formula(const GroupSpec& spec);

struct ProductFactor {
  Ideal J;      // J(A_i) embedded in the common ring (unit when A_i is smooth)
  MultiPoly F;  // defining polynomial of A_i in the common ring
};

/// sum_i (prod_{j != i} F_j) J_i.
Ideal product_singular_ideal(const std::vector<ProductFactor>& factors);
Ideal product_singular_ideal(const Ideal& J1, const MultiPoly& F1, const Ideal& J2,
                             const MultiPoly& F2);
/// Factor data of a product spec, each factor's J computed from its own flats.
std::vector<ProductFactor> product_factors(const GroupSpec& spec);

/// Product of l_H^{e_H - 1} over the hyperplanes.
MultiPoly jacobian_determinant_target(const Arrangement& A);

struct EqJReport {
  GroupSpec spec;
  std::vector<CheckResult> checks;
  std::string verdict() const { return combine_verdicts(checks); }
  nlohmann::json to_json(bool with_timings = true) const;
};

/// Compares every construction of J for an irreducible family of rank >= 3.
EqJReport verify_theorem_eqJ(const GroupSpec& spec,
                             std::optional<std::uint64_t> budget = std::nullopt);

/// det Jac(all invariants) against prod l_H^{e_H-1}, and for FullMonomial
/// det of the square derivation matrix against F_A.
std::vector<CheckResult> determinant_identity_checks(const GroupSpec& spec);

struct SporadicCheck {
  SporadicRecord record;
  std::int64_t e_M = 0;  // from the rank-1 lowest exponents
  std::int64_t e_Q = 0;  // from the rank-1 lowest coexponents
  bool jacobian_route() const { return e_M == record.codim2_flat_count; }
  bool derivation_route() const { return e_Q == record.codim2_flat_count; }
  nlohmann::json to_json() const;
};

SporadicCheck sporadic_table_check(const SporadicRecord& rec);

}  // namespace reflectarr
