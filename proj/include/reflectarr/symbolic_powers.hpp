#pragma once

// Symbolic powers of J(A) and decisions of J^(m) in J^r: direct computation
// with self-certifying witnesses, the localization reduction over codimension
// 2 and 3 flats, and the product clauses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflectarr/arrangement.hpp"
#include "reflectarr/groebner.hpp"
#include "reflectarr/report.hpp"

namespace reflectarr {

enum class Verdict { Holds, Fails, BudgetExceeded, Abstain };
std::string to_string(Verdict v);

enum class Strategy { Direct, Reduce };
std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct ContainmentQuery {
  std::optional<GroupSpec> spec;
  std::optional<Arrangement> arrangement;  // used when no spec is given
  unsigned m = 3;                          // symbolic exponent
  unsigned r = 2;                          // ordinary exponent
  Strategy strategy = Strategy::Direct;
  std::optional<std::uint64_t> budget;
};

struct TraceEntry {
  std::string flat;   // incident hyperplane indices
  unsigned codim = 0;
  std::string fixer;  // canonical fixer notation, empty when unclassified
  Verdict verdict = Verdict::Holds;
  std::string note;
};

struct ContainmentReport {
  std::string subject;  // spec notation or "arrangement"
  unsigned m = 0;
  unsigned r = 0;
  Strategy strategy = Strategy::Direct;
  Verdict verdict = Verdict::Holds;
  /// Element of J^(m) outside J^r, in the ring of the checked arrangement.
  std::optional<MultiPoly> witness;
  std::string witness_source;
  std::vector<TraceEntry> trace;
  std::map<std::string, std::string> hashes;
  std::string detail;
  double seconds = 0;

  nlohmann::json to_json(bool with_timings = true) const;
};

/// Intersection of P_X^m over the codimension-2 flats X.
Ideal symbolic_power(const Arrangement& A, unsigned m, std::optional<std::uint64_t> budget = std::nullopt);

/// Order of vanishing at least m along every codimension-2 flat, decided by
/// moving each flat's forms to the first two coordinates.
bool in_symbolic_power(const MultiPoly& f, const Arrangement& A, unsigned m);

/// Arrangement restricted to a complement of its center (itself when essential).
Arrangement essential_part(const Arrangement& A);

ContainmentReport check_containment(const ContainmentQuery& q);
ContainmentReport check_containment(const Arrangement& A, unsigned m, unsigned r,
                                    std::optional<std::uint64_t> budget = std::nullopt);

/// (m, r) = (3, 2) on a constructible spec of rank >= 4 via its codimension 2
/// and 3 flats; sub-verdicts are memoized per canonical fixer.
ContainmentReport reduce_via_localization(const ContainmentQuery& q);
/// Drops all memoized fixer verdicts.
void clear_fixer_memo();

/// Applies the product clauses to known factor verdicts; abstains outside them.
ContainmentReport product_containment(const std::vector<Verdict>& factor_verdicts, unsigned m, unsigned r);
/// Same, deciding each factor arrangement directly first.
ContainmentReport product_containment(const std::vector<Arrangement>& factors, unsigned m, unsigned r,
                                      std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace reflectarr
