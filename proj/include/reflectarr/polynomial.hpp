#pragma once

// Sparse multivariate polynomials over Q(zeta_m).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reflectarr/exact_arith.hpp"

namespace reflectarr {

/// Upper bound on ring size; auxiliary elimination variables count against it.
inline constexpr unsigned kMaxVars = 12;

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);
  static Monomial variable(unsigned index, unsigned power = 1);

  unsigned operator[](unsigned i) const { return exps_[i]; }
  void set(unsigned i, unsigned e);
  unsigned degree() const { return degree_; }
  /// Total degree restricted to variables [first, last).
  unsigned degree_in(unsigned first, unsigned last) const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Highest index with a nonzero exponent plus one (0 for the unit monomial).
  unsigned support_end() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; the divisor must divide.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, BlockElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Eliminates the first `k` variables: grevlex on the block, then grevlex on the rest.
  static MonomialOrder block(unsigned k) { return MonomialOrder(Kind::BlockElimination, k); }
  static MonomialOrder parse(std::string_view name);

  Kind kind() const { return kind_; }
  unsigned block_size() const { return block_; }
  bool is_graded() const { return kind_ == Kind::GradedReverseLex; }

  /// Three-way comparison: negative when a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, unsigned block) : kind_(k), block_(block) {}
  Kind kind_;
  unsigned block_;
};

struct Term {
  Monomial mono;
  Coeffs coeff;
};

class MultiPoly {
 public:
  MultiPoly(unsigned nvars, CyclotomicField field,
            MonomialOrder order = MonomialOrder::grevlex());

  static MultiPoly constant(unsigned nvars, const CyclotomicField& field, const Rational& c);
  static MultiPoly constant(unsigned nvars, const CyclotomicNumber& c);
  static MultiPoly variable(unsigned nvars, const CyclotomicField& field, unsigned index);
  static MultiPoly monomial(unsigned nvars, const CyclotomicNumber& c, const Monomial& m);
  /// sum_i coeffs[i] * x_i
  static MultiPoly linear_form(std::span<const CyclotomicNumber> coeffs);
  /// Terms in any order; like terms are combined and zeros dropped.
  static MultiPoly from_terms(unsigned nvars, const CyclotomicField& field, MonomialOrder order,
                              std::vector<Term> terms);
  /// Terms already strictly descending in `order` with nonzero coefficients.
  static MultiPoly from_sorted_terms(unsigned nvars, const CyclotomicField& field,
                                     MonomialOrder order, std::vector<Term> terms);

  unsigned nvars() const { return nvars_; }
  const CyclotomicField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree of a term; -1 for zero.
  int min_degree() const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coeffs& leading_coeffs() const { return terms_.front().coeff; }
  CyclotomicNumber leading_coeff() const;
  CyclotomicNumber coefficient_of(const Monomial& m) const;

  MultiPoly with_order(MonomialOrder order) const;
  /// Divided by its leading coefficient (zero stays zero).
  MultiPoly monic() const;
  MultiPoly scaled(const CyclotomicNumber& c) const;
  MultiPoly scaled(const Coeffs& c) const;
  MultiPoly times_term(const Monomial& m, const Coeffs& c) const;
  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(unsigned var) const;

  /// Embeds into a ring with `new_nvars` variables, sending x_i to x_{i+offset}.
  MultiPoly shifted(unsigned new_nvars, unsigned offset) const;
  /// Inverse of `shifted`: the first `k` variables must not occur.
  MultiPoly drop_leading_vars(unsigned k) const;
  bool involves_leading_vars(unsigned k) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  /// Same ring and same set of terms (the order may differ).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: descending terms, coefficients expanded in z.
  std::string to_string() const;
  static MultiPoly parse(std::string_view text, unsigned nvars, const CyclotomicField& field,
                         MonomialOrder order = MonomialOrder::grevlex());

 private:
  void require_compatible(const MultiPoly& other) const;

  unsigned nvars_;
  CyclotomicField field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

MultiPoly partial_derivative(const MultiPoly& p, unsigned var);
MultiPoly power(const MultiPoly& p, unsigned k);

/// Dense matrices over one cyclotomic field.
using CycVector = std::vector<CyclotomicNumber>;
using CycMatrix = std::vector<CycVector>;

/// p(T x): each x_i is replaced by sum_j T[i][j] x_j. T must be invertible.
MultiPoly linear_substitution(const MultiPoly& p, const CycMatrix& T);

}  // namespace reflectarr
