#pragma once

// Exact coefficient arithmetic: GMP rationals and the cyclotomic fields Q(zeta_m).

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reflectarr {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial with integer coefficients, lowest degree first.
using IntPoly = std::vector<BigInt>;

/// The m-th cyclotomic polynomial, obtained by exact division of t^m - 1 by
/// the cyclotomic polynomials of all proper divisors of m.
IntPoly cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Coefficient vector of a field element: residue of degree < phi(m).
using Coeffs = std::vector<Rational>;

/// Q(zeta_m) presented as Q[t]/(Phi_m). Cheap to copy; equality is by conductor.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor = 1);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_->size()) - 1; }
  const IntPoly& modulus() const { return *modulus_; }

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
    return a.conductor_ == b.conductor_;
  }

  // Raw residue arithmetic used by the polynomial kernels. Operands must have
  // length degree(); results are canonical.
  Coeffs zero() const { return Coeffs(degree()); }
  Coeffs one() const;
  Coeffs from_rational(const Rational& q) const;
  Coeffs root_power(long k) const;  // zeta^k, any integer k
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs neg(const Coeffs& a) const;
  Coeffs inv(const Coeffs& a) const;  // throws DivisionByZero
  void add_mul(Coeffs& acc, const Coeffs& a, const Coeffs& b) const;  // acc += a*b
  static bool is_zero(const Coeffs& a);
  static bool is_one(const Coeffs& a);
  /// Reduce an arbitrary-length coefficient vector (poly in t) modulo Phi_m.
  Coeffs reduce(std::vector<Rational> t_poly) const;

 private:
  unsigned conductor_;
  std::shared_ptr<const IntPoly> modulus_;
};

/// An element of Q(zeta_m) with its field attached.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(CyclotomicField field = CyclotomicField(1));
  CyclotomicNumber(CyclotomicField field, const Rational& value);
  CyclotomicNumber(CyclotomicField field, Coeffs coeffs);  // coeffs reduced on entry

  static CyclotomicNumber root_of_unity(const CyclotomicField& field, long k = 1);

  const CyclotomicField& field() const { return field_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return CyclotomicField::is_zero(coeffs_); }
  bool is_one() const { return CyclotomicField::is_one(coeffs_); }
  /// True when the value lies in Q; then `rational()` returns it.
  bool is_rational() const;
  Rational rational() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long k) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Text in the symbol `z`, e.g. `1/2*z^2 - 3`.
  std::string to_string() const;
  static CyclotomicNumber parse(const CyclotomicField& field, std::string_view text);

 private:
  CyclotomicField field_;
  Coeffs coeffs_;
};

CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_inv(const CyclotomicNumber& a);

/// Lexicographic comparison of coefficient vectors; a total order used for
/// canonical sorting only (it has no algebraic meaning).
std::strong_ordering canonical_compare(const Coeffs& a, const Coeffs& b);

/// Textual form of a raw residue in symbol `z`.
std::string coeffs_to_string(const Coeffs& c);

}  // namespace reflectarr
