#include "reflectarr/poly_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace reflectarr {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const MultiPoly& zero)
    : rows_(rows), cols_(cols), entries_(rows * cols, zero) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("PolyMatrix: empty shape");
}

PolyMatrix::PolyMatrix(std::vector<std::vector<MultiPoly>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("PolyMatrix: empty shape");
  entries_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged rows");
    for (auto& e : r) entries_.push_back(std::move(e));
  }
}

std::optional<int> PolyMatrix::column_degree(std::size_t c) const {
  std::optional<int> d;
  for (std::size_t r = 0; r < rows_; ++r) {
    const MultiPoly& e = at(r, c);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous()) return std::nullopt;
    if (d && *d != e.degree()) return std::nullopt;
    d = e.degree();
  }
  return d;
}

PolyMatrix PolyMatrix::without_row(std::size_t skip) const {
  std::vector<std::vector<MultiPoly>> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r == skip) continue;
    out.emplace_back(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  }
  return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::without_col(std::size_t skip) const {
  std::vector<std::vector<MultiPoly>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (c != skip) out[r].push_back(at(r, c));
  return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::first_cols(std::size_t k) const {
  if (k == 0 || k > cols_) throw std::invalid_argument("first_cols: bad column count");
  std::vector<std::vector<MultiPoly>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < k; ++c) out[r].push_back(at(r, c));
  return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
  PolyMatrix m = *this;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(a, c), m.at(b, c));
  return m;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << at(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
}

MultiPoly expand(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  MultiPoly acc = m.at(0, 0) - m.at(0, 0);
  PolyMatrix rest = m.without_row(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    MultiPoly sub = m.at(0, c) * expand(rest.without_col(c));
    acc = (c % 2 == 0) ? acc + sub : acc - sub;
  }
  return acc;
}

}  // namespace

MultiPoly determinant_expansion(const PolyMatrix& m) {
  require_square(m);
  return expand(m);
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  MultiPoly rem = a.with_order(b.order());
  const Coeffs lead_inv = b.field().inv(b.leading_coeffs());
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!b.leading_monomial().divides(lm)) throw std::domain_error("exact_divide: not divisible");
    Monomial qm = lm / b.leading_monomial();
    Coeffs qc = b.field().mul(rem.leading_coeffs(), lead_inv);
    q.push_back({qm, qc});
    rem = rem - b.times_term(qm, qc);
  }
  return MultiPoly::from_terms(a.nvars(), a.field(), a.order(), std::move(q));
}

MultiPoly determinant_bareiss(const PolyMatrix& input) {
  require_square(input);
  const std::size_t n = input.rows();
  PolyMatrix m = input;
  MultiPoly zero = m.at(0, 0) - m.at(0, 0);
  MultiPoly one = MultiPoly::constant(zero.nvars(), zero.field(), Rational(1)).with_order(zero.order());
  MultiPoly prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return zero;
      m = m.with_rows_swapped(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = exact_divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  MultiPoly det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

MultiPoly determinant(const PolyMatrix& m) {
  return m.rows() <= 5 ? determinant_expansion(m) : determinant_bareiss(m);
}

std::vector<MultiPoly> maximal_minors(const PolyMatrix& m) {
  std::vector<MultiPoly> out;
  if (m.rows() == m.cols() + 1) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      MultiPoly d = determinant(m.without_row(k));
      out.push_back(k % 2 == 0 ? d : -d);
    }
  } else if (m.cols() == m.rows() + 1) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      MultiPoly d = determinant(m.without_col(k));
      out.push_back(k % 2 == 0 ? d : -d);
    }
  } else {
    throw std::invalid_argument("maximal_minors: shape must be (n+1) x n or n x (n+1)");
  }
  return out;
}

}  // namespace reflectarr
