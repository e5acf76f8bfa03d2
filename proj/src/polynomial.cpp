#include "reflectarr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "reflectarr/errors.hpp"

namespace reflectarr {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables in monomial");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<unsigned>(i), exps[i]);
}

Monomial Monomial::variable(unsigned index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(unsigned i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree_in(unsigned first, unsigned last) const {
  unsigned d = 0;
  for (unsigned i = first; i < last && i < kMaxVars; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

unsigned Monomial::support_end() const {
  for (unsigned i = kMaxVars; i-- > 0;)
    if (exps_[i]) return i + 1;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial division not exact");
    out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  unsigned d = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += out.exps_[i];
  }
  out.degree_ = d;
  return out;
}

// ---------------------------------------------------------------- orders

namespace {

// Graded reverse lexicographic comparison on variables [first, last).
int grevlex_range(const Monomial& a, const Monomial& b, unsigned first, unsigned last) {
  unsigned da = a.degree_in(first, last);
  unsigned db = b.degree_in(first, last);
  if (da != db) return da < db ? -1 : 1;
  for (unsigned i = last; i-- > first;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  if (name.starts_with("block:")) {
    std::string k(name.substr(6));
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("bad block order '" + std::string(name) + "'");
    return block(static_cast<unsigned>(std::stoul(k)));
  }
  throw ParseError("unknown monomial order '" + std::string(name) + "'");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GradedReverseLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (unsigned i = kMaxVars; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case Kind::Lex:
      for (unsigned i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::BlockElimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::GradedReverseLex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::BlockElimination: return "block:" + std::to_string(block_);
  }
  return "?";
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(unsigned nvars, CyclotomicField field, MonomialOrder order)
    : nvars_(nvars), field_(std::move(field)), order_(order) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables: " + std::to_string(nvars));
}

MultiPoly MultiPoly::constant(unsigned nvars, const CyclotomicField& field, const Rational& c) {
  return constant(nvars, CyclotomicNumber(field, c));
}

MultiPoly MultiPoly::constant(unsigned nvars, const CyclotomicNumber& c) {
  return monomial(nvars, c, Monomial());
}

MultiPoly MultiPoly::variable(unsigned nvars, const CyclotomicField& field, unsigned index) {
  if (index >= nvars) throw std::out_of_range("variable index");
  return monomial(nvars, CyclotomicNumber(field, Rational(1)), Monomial::variable(index));
}

MultiPoly MultiPoly::monomial(unsigned nvars, const CyclotomicNumber& c, const Monomial& m) {
  MultiPoly p(nvars, c.field());
  if (m.support_end() > nvars) throw std::out_of_range("monomial outside ring");
  if (!c.is_zero()) p.terms_.push_back({m, c.coeffs()});
  return p;
}

MultiPoly MultiPoly::linear_form(std::span<const CyclotomicNumber> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("linear_form: no coefficients");
  const unsigned n = static_cast<unsigned>(coeffs.size());
  std::vector<Term> terms;
  for (unsigned i = 0; i < n; ++i)
    if (!coeffs[i].is_zero()) terms.push_back({Monomial::variable(i), coeffs[i].coeffs()});
  return from_terms(n, coeffs[0].field(), MonomialOrder::grevlex(), std::move(terms));
}

MultiPoly MultiPoly::from_terms(unsigned nvars, const CyclotomicField& field, MonomialOrder order,
                                std::vector<Term> terms) {
  MultiPoly p(nvars, field, order);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.mono.support_end() > nvars) throw std::out_of_range("monomial outside ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      auto& c = p.terms_.back().coeff;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += t.coeff[i];
    } else {
      if (!p.terms_.empty() && CyclotomicField::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && CyclotomicField::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

MultiPoly MultiPoly::from_sorted_terms(unsigned nvars, const CyclotomicField& field,
                                       MonomialOrder order, std::vector<Term> terms) {
  MultiPoly p(nvars, field, order);
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int MultiPoly::min_degree() const {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool MultiPoly::is_homogeneous() const { return degree() == min_degree(); }

CyclotomicNumber MultiPoly::leading_coeff() const {
  if (terms_.empty()) return CyclotomicNumber(field_);
  return CyclotomicNumber(field_, terms_.front().coeff);
}

CyclotomicNumber MultiPoly::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return CyclotomicNumber(field_, t.coeff);
  return CyclotomicNumber(field_);
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  MultiPoly p(nvars_, field_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || CyclotomicField::is_one(terms_.front().coeff)) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

MultiPoly MultiPoly::scaled(const CyclotomicNumber& c) const {
  if (!(c.field() == field_)) throw std::invalid_argument("scalar from a different field");
  return scaled(c.coeffs());
}

MultiPoly MultiPoly::scaled(const Coeffs& c) const {
  MultiPoly p(nvars_, field_, order_);
  if (CyclotomicField::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
  return p;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Coeffs& c) const {
  MultiPoly p(nvars_, field_, order_);
  if (CyclotomicField::is_zero(c)) return p;
  if (m.support_end() > nvars_) throw std::out_of_range("monomial outside ring");
  p.terms_.reserve(terms_.size());
  const bool unit = CyclotomicField::is_one(c);
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, unit ? t.coeff : field_.mul(t.coeff, c)});
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, field_, Rational(1)).with_order(order_);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
  if (var >= nvars_) throw std::out_of_range("derivative variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Term d{t.mono, t.coeff};
    d.mono.set(var, e - 1);
    for (auto& c : d.coeff) c *= e;
    out.push_back(std::move(d));
  }
  // Lowering one exponent can reorder terms under non-lex orders.
  return from_terms(nvars_, field_, order_, std::move(out));
}

MultiPoly MultiPoly::shifted(unsigned new_nvars, unsigned offset) const {
  if (nvars_ + offset > new_nvars) throw std::invalid_argument("shifted: target ring too small");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (unsigned i = 0; i < nvars_; ++i) m.set(i + offset, t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return from_terms(new_nvars, field_, order_, std::move(out));
}

MultiPoly MultiPoly::drop_leading_vars(unsigned k) const {
  if (k > nvars_) throw std::invalid_argument("drop_leading_vars: k exceeds nvars");
  if (involves_leading_vars(k)) throw std::invalid_argument("drop_leading_vars: variables occur");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (unsigned i = k; i < nvars_; ++i) m.set(i - k, t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return from_terms(nvars_ - k, field_, MonomialOrder::grevlex(), std::move(out));
}

bool MultiPoly::involves_leading_vars(unsigned k) const {
  for (const auto& t : terms_)
    if (t.mono.degree_in(0, k) > 0) return true;
  return false;
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("mismatched variable counts " + std::to_string(nvars_) + " and " +
                                std::to_string(other.nvars_));
  if (!(field_ == other.field_)) throw std::invalid_argument("mismatched coefficient fields");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_)
    for (auto& c : t.coeff) c = -c;
  return p;
}

namespace {

MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  MultiPoly reordered = b.order() == a.order() ? MultiPoly(b.nvars(), b.field()) : b.with_order(a.order());
  const MultiPoly& rhs = b.order() == a.order() ? b : reordered;
  const MonomialOrder& ord = a.order();
  auto ta = a.terms();
  auto tb = rhs.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  auto push_b = [&](const Term& t) {
    Term n = t;
    if (subtract)
      for (auto& c : n.coeff) c = -c;
    out.push_back(std::move(n));
  };
  while (i < ta.size() && j < tb.size()) {
    int c = ord.compare(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      push_b(tb[j++]);
    } else {
      Term n = ta[i];
      for (std::size_t k = 0; k < n.coeff.size(); ++k) {
        if (subtract)
          n.coeff[k] -= tb[j].coeff[k];
        else
          n.coeff[k] += tb[j].coeff[k];
      }
      if (!CyclotomicField::is_zero(n.coeff)) out.push_back(std::move(n));
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) push_b(tb[j]);
  return MultiPoly::from_sorted_terms(a.nvars(), a.field(), ord, std::move(out));
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  return merge(a, b, false);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  return merge(a, b, true);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_, a.field_, a.order_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
  return MultiPoly::from_terms(a.nvars_, a.field_, a.order_, std::move(prod));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size())
    return false;
  MultiPoly reordered = b.order_ == a.order_ ? MultiPoly(b.nvars_, b.field_) : b.with_order(a.order_);
  const MultiPoly& r = b.order_ == a.order_ ? b : reordered;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == r.terms_[i].mono) || a.terms_[i].coeff != r.terms_[i].coeff)
      return false;
  return true;
}

// ---------------------------------------------------------------- text

namespace {

std::string monomial_text(const Monomial& m, unsigned nvars) {
  std::string s;
  for (unsigned i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

bool single_rational(const Coeffs& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = monomial_text(t.mono, nvars_);
    if (single_rational(t.coeff)) {
      Rational v = t.coeff[0];
      bool negative = v < 0;
      if (negative) v = -v;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      if (mono.empty())
        out << v.get_str();
      else if (v == 1)
        out << mono;
      else
        out << v.get_str() << '*' << mono;
    } else {
      if (!first) out << " + ";
      out << '(' << coeffs_to_string(t.coeff) << ')';
      if (!mono.empty()) out << '*' << mono;
    }
    first = false;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, unsigned nvars, const CyclotomicField& f, MonomialOrder order)
      : s_(s), nvars_(nvars), field_(f), order_(order) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
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
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  MultiPoly constant(const Rational& q) {
    return MultiPoly::constant(nvars_, field_, q).with_order(order_);
  }

  MultiPoly expr() {
    MultiPoly acc(nvars_, field_, order_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    MultiPoly t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      std::string e = digits();
      if (e.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == 'z') {
      ++pos_;
      return MultiPoly::constant(nvars_, CyclotomicNumber::root_of_unity(field_, 1)).with_order(order_);
    }
    if (c == 'x') {
      ++pos_;
      std::string idx = digits();
      if (idx.empty()) fail("expected variable index");
      unsigned i = static_cast<unsigned>(std::stoul(idx));
      if (i >= nvars_) fail("variable x" + idx + " outside ring of " + std::to_string(nvars_));
      return MultiPoly::variable(nvars_, field_, i).with_order(order_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (std::stoul(den) == 0 && den.find_first_not_of('0') == std::string::npos)
          throw DivisionByZero();
        num += "/" + den;
      }
      return constant(parse_rational(num));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  unsigned nvars_;
  CyclotomicField field_;
  MonomialOrder order_;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, unsigned nvars, const CyclotomicField& field,
                           MonomialOrder order) {
  return PolyParser(text, nvars, field, order).run();
}

MultiPoly partial_derivative(const MultiPoly& p, unsigned var) { return p.derivative(var); }
MultiPoly power(const MultiPoly& p, unsigned k) { return p.pow(k); }

MultiPoly linear_substitution(const MultiPoly& p, const CycMatrix& T) {
  const unsigned n = p.nvars();
  if (T.size() != n) throw std::invalid_argument("linear_substitution: matrix size mismatch");
  for (const auto& row : T)
    if (row.size() != n) throw std::invalid_argument("linear_substitution: matrix not square");
  // Invertibility by fraction-free elimination on a copy.
  {
    CycMatrix m = T;
    for (unsigned c = 0; c < n; ++c) {
      unsigned r = c;
      while (r < n && m[r][c].is_zero()) ++r;
      if (r == n) throw std::invalid_argument("linear_substitution: singular matrix");
      std::swap(m[r], m[c]);
      CyclotomicNumber inv = m[c][c].inverse();
      for (unsigned i = c + 1; i < n; ++i) {
        if (m[i][c].is_zero()) continue;
        CyclotomicNumber f = m[i][c] * inv;
        for (unsigned j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
      }
    }
  }
  std::vector<MultiPoly> image;
  image.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    image.push_back(MultiPoly::linear_form(T[i]).with_order(p.order()));
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power_of = [&](unsigned i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(n, p.field(), Rational(1)).with_order(p.order()));
    while (cache.size() <= e) cache.push_back(cache.back() * image[i]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    MultiPoly prod = MultiPoly::constant(n, CyclotomicNumber(p.field(), t.coeff)).with_order(p.order());
    for (unsigned i = 0; i < n; ++i)
      if (t.mono[i]) prod = prod * power_of(i, t.mono[i]);
    for (const auto& s : prod.terms()) acc.push_back(s);
  }
  return MultiPoly::from_terms(n, p.field(), p.order(), std::move(acc));
}

}  // namespace reflectarr
