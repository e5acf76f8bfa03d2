#include "reflectarr/exact_arith.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "reflectarr/errors.hpp"

namespace reflectarr {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

namespace {

// Exact quotient of integer polynomials; the divisor must be monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {BigInt(0)};
  IntPoly quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    BigInt c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return quot;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Rational polynomial helpers for the extended Euclidean algorithm.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a by b, b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  IntPoly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  IntPoly den{BigInt(1)};
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  return divide_monic(std::move(num), den);
}

unsigned euler_phi(unsigned m) {
  unsigned count = 0;
  for (unsigned k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : conductor_(conductor),
      modulus_(std::make_shared<const IntPoly>(cyclotomic_polynomial(conductor))) {}

Coeffs CyclotomicField::one() const {
  Coeffs c = zero();
  c[0] = 1;
  return c;
}

Coeffs CyclotomicField::from_rational(const Rational& q) const {
  Coeffs c = zero();
  c[0] = q;
  return c;
}

Coeffs CyclotomicField::root_power(long k) const {
  long m = conductor_;
  long e = ((k % m) + m) % m;
  std::vector<Rational> t(static_cast<std::size_t>(e) + 1, Rational(0));
  t[static_cast<std::size_t>(e)] = 1;
  return reduce(std::move(t));
}

Coeffs CyclotomicField::reduce(std::vector<Rational> t) const {
  const IntPoly& phi = *modulus_;
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = t.size(); k-- > d;) {
    if (t[k] == 0) continue;
    Rational c = t[k];
    for (std::size_t i = 0; i <= d; ++i) t[k - d + i] -= c * phi[i];
  }
  t.resize(d, Rational(0));
  return t;
}

Coeffs CyclotomicField::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coeffs CyclotomicField::sub(const Coeffs& a, const Coeffs& b) const {
  Coeffs out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Coeffs CyclotomicField::neg(const Coeffs& a) const {
  Coeffs out(a);
  for (auto& c : out) c = -c;
  return out;
}

Coeffs CyclotomicField::mul(const Coeffs& a, const Coeffs& b) const {
  const std::size_t d = a.size();
  if (d == 1) return {Rational(a[0] * b[0])};
  std::vector<Rational> t(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b[j] != 0) t[i + j] += a[i] * b[j];
  }
  return reduce(std::move(t));
}

void CyclotomicField::add_mul(Coeffs& acc, const Coeffs& a, const Coeffs& b) const {
  if (acc.size() == 1) {
    acc[0] += a[0] * b[0];
    return;
  }
  Coeffs p = mul(a, b);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
}

Coeffs CyclotomicField::inv(const Coeffs& a) const {
  if (is_zero(a)) throw DivisionByZero();
  if (a.size() == 1) return {Rational(1 / a[0])};
  // Extended Euclid: find s with s*a = 1 mod Phi.
  QPoly r0(modulus_->begin(), modulus_->end());
  QPoly r1(a.begin(), a.end());
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("cyclotomic modulus is not irreducible");
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return reduce(std::move(s1));
}

bool CyclotomicField::is_zero(const Coeffs& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool CyclotomicField::is_one(const Coeffs& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

CyclotomicNumber::CyclotomicNumber(CyclotomicField field)
    : field_(std::move(field)), coeffs_(field_.zero()) {}

CyclotomicNumber::CyclotomicNumber(CyclotomicField field, const Rational& value)
    : field_(std::move(field)), coeffs_(field_.from_rational(value)) {}

CyclotomicNumber::CyclotomicNumber(CyclotomicField field, Coeffs coeffs)
    : field_(std::move(field)), coeffs_(field_.reduce(std::move(coeffs))) {}

CyclotomicNumber CyclotomicNumber::root_of_unity(const CyclotomicField& field, long k) {
  return CyclotomicNumber(field, field.root_power(k));
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
  return coeffs_[0];
}

namespace {
void require_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("mixed cyclotomic conductors " +
                                std::to_string(a.field().conductor()) + " and " +
                                std::to_string(b.field().conductor()));
}
}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
  return CyclotomicNumber(field_, field_.neg(coeffs_));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same_field(a, b);
  return CyclotomicNumber(a.field_, a.field_.add(a.coeffs_, b.coeffs_));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same_field(a, b);
  return CyclotomicNumber(a.field_, a.field_.sub(a.coeffs_, b.coeffs_));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  require_same_field(a, b);
  return CyclotomicNumber(a.field_, a.field_.mul(a.coeffs_, b.coeffs_));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a * b.inverse();
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  return CyclotomicNumber(field_, field_.inv(coeffs_));
}

CyclotomicNumber CyclotomicNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicNumber result(field_, Rational(1));
  CyclotomicNumber base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
CyclotomicNumber cyc_inv(const CyclotomicNumber& a) { return a.inverse(); }

std::strong_ordering canonical_compare(const Coeffs& a, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string coeffs_to_string(const Coeffs& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational v = c[k];
    bool negative = v < 0;
    if (negative) v = -v;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << v.get_str();
    } else {
      if (v != 1) out << v.get_str() << '*';
      out << 'z';
      if (k > 1) out << '^' << k;
    }
  }
  if (first) return "0";
  return out.str();
}

std::string CyclotomicNumber::to_string() const { return coeffs_to_string(coeffs_); }

namespace {

// Recursive-descent parser for expressions in z over Q.
class ZParser {
 public:
  ZParser(const CyclotomicField& f, std::string_view s) : field_(f), s_(s) {}

  Coeffs parse() {
    Coeffs v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("cyclotomic number '" + std::string(s_) + "': " + why);
  }
  Coeffs expr() {
    Coeffs acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    acc = term();
    if (negate) acc = field_.neg(acc);
    for (;;) {
      if (eat('+')) acc = field_.add(acc, term());
      else if (eat('-')) acc = field_.sub(acc, term());
      else return acc;
    }
  }
  Coeffs term() {
    Coeffs acc = power();
    while (eat('*')) acc = field_.mul(acc, power());
    return acc;
  }
  Coeffs power() {
    Coeffs base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long k = std::stol(std::string(s_.substr(start, pos_ - start)));
      CyclotomicNumber b(field_, base);
      return b.pow(k).coeffs();
    }
    return base;
  }
  Coeffs atom() {
    skip();
    if (eat('(')) {
      Coeffs v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('z')) return field_.root_power(1);
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected number or z");
    return field_.from_rational(parse_rational(s_.substr(start, pos_ - start)));
  }

  const CyclotomicField& field_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclotomicNumber CyclotomicNumber::parse(const CyclotomicField& field, std::string_view text) {
  return CyclotomicNumber(field, ZParser(field, text).parse());
}

}  // namespace reflectarr
