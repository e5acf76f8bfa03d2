#pragma once

// Buchberger engine: reduced Groebner bases, normal forms, ideal operations,
// elimination-based intersection, radical membership and Hilbert series.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflectarr/polynomial.hpp"

namespace reflectarr {

/// Reduction-step ceiling used when a caller passes none. Read once from
/// REFLECTARR_BUDGET, else a fixed default.
std::uint64_t default_budget();

/// Replaces default_budget() on the current thread for the scope's lifetime.
class BudgetScope {
 public:
  explicit BudgetScope(std::uint64_t steps);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  std::optional<std::uint64_t> previous_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements, int degree_bound);

  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  /// -1 for a complete basis; otherwise valid for homogeneous elements up to this degree.
  int degree_bound() const { return degree_bound_; }
  bool complete() const { return degree_bound_ < 0; }
  bool is_unit() const;

  /// Remainder of full reduction (in this basis' order).
  MultiPoly reduce(const MultiPoly& f) const;

 private:
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
  int degree_bound_;
};

struct GroebnerStats {
  std::uint64_t reduction_steps = 0;
  std::uint64_t pairs_processed = 0;
};

class Ideal {
 public:
  /// Generators must share nvars and field; an empty list is the zero ideal.
  Ideal(unsigned nvars, CyclotomicField field, std::vector<MultiPoly> gens);
  explicit Ideal(std::vector<MultiPoly> gens);
  static Ideal unit(unsigned nvars, const CyclotomicField& field);

  unsigned nvars() const { return nvars_; }
  const CyclotomicField& field() const { return field_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }
  bool is_homogeneous() const;
  bool is_zero() const;

  /// Reduced basis for `order`; computed once and cached.
  const GroebnerBasis& groebner(MonomialOrder order = MonomialOrder::grevlex(),
                                std::optional<std::uint64_t> budget = std::nullopt) const;
  /// Grevlex basis valid through `degree` (homogeneous ideals only). Resumes
  /// the cached computation rather than restarting it.
  GroebnerBasis truncated_groebner(int degree, std::optional<std::uint64_t> budget = std::nullopt) const;
  /// Membership; homogeneous ideals use a degree-truncated basis.
  bool contains(const MultiPoly& f, std::optional<std::uint64_t> budget = std::nullopt) const;
  /// Installs a basis known to be reduced for `order`.
  void seed_groebner(const GroebnerBasis& gb) const;
  GroebnerStats stats() const;

  /// Ring header followed by one generator per line.
  std::string serialize() const;
  static Ideal deserialize(const std::string& text);
  /// FNV-1a 64-bit hash of serialize(), as 16 hex digits.
  std::string hash() const;

 private:
  struct Cache;
  unsigned nvars_;
  CyclotomicField field_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

std::string fnv1a_hex(const std::string& text);

GroebnerBasis groebner_basis(const Ideal& I, MonomialOrder order = MonomialOrder::grevlex());
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G);
bool ideal_equal(const Ideal& I, const Ideal& J);
/// I is contained in J.
bool ideal_contained(const Ideal& I, const Ideal& J);

Ideal ideal_power(const Ideal& I, unsigned r);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_scaled(const Ideal& I, const MultiPoly& f);

/// Intersection of two ideals by eliminating t from t*I + (1-t)*J.
Ideal intersect_pair(const Ideal& I, const Ideal& J, std::optional<std::uint64_t> budget = std::nullopt);
/// Left fold of intersect_pair in list order.
Ideal ideal_intersection(const std::vector<Ideal>& ideals,
                         std::optional<std::uint64_t> budget = std::nullopt);

/// f lies in the radical of I, decided by 1 in I + (1 - y f).
bool radical_member(const MultiPoly& f, const Ideal& I,
                    std::optional<std::uint64_t> budget = std::nullopt);
/// Every generator of I lies in the radical of J and vice versa.
bool radical_equal(const Ideal& I, const Ideal& J);

struct HilbertData {
  unsigned dimension = 0;
  std::vector<BigInt> numerator;  // h(t), lowest degree first
  BigInt multiplicity;            // h(1)
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/(monomials).
std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens);
HilbertData hilbert_multiplicity(const Ideal& I);

/// Size of a minimal homogeneous generating set.
std::size_t minimal_generator_count(const Ideal& I);
/// Least degree of a nonzero element.
int alpha(const Ideal& I);

/// Basis of the syzygies (a_1..a_k) with every a_i a linear form.
std::vector<std::vector<MultiPoly>> linear_syzygies(const std::vector<MultiPoly>& gens);

}  // namespace reflectarr
