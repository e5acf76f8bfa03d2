#include "reflectarr/linalg.hpp"

#include <stdexcept>

namespace reflectarr {

RowEchelon row_reduce(CycMatrix m, const CyclotomicField&, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    CyclotomicNumber inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CyclotomicNumber f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
    }
    out.pivots.push_back(static_cast<unsigned>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t matrix_rank(const CycMatrix& m, const CyclotomicField& field, std::size_t cols) {
  return row_reduce(m, field, cols).rank();
}

std::optional<CycVector> row_space_coordinates(const RowEchelon& e, const CycVector& v) {
  if (e.rows.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return CycVector{};
  }
  CycVector coords;
  CycVector rest = v;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    CyclotomicNumber c = rest[e.pivots[k]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (!e.rows[k][j].is_zero()) rest[j] = rest[j] - c * e.rows[k][j];
  }
  for (const auto& x : rest)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

CycMatrix identity_matrix(std::size_t n, const CyclotomicField& field) {
  CycMatrix id(n, CycVector(n, CyclotomicNumber(field)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = CyclotomicNumber(field, Rational(1));
  return id;
}

std::optional<CycMatrix> matrix_inverse(const CycMatrix& m, const CyclotomicField& field) {
  const std::size_t n = m.size();
  CycMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix_inverse: not square");
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j)
      aug[i].push_back(CyclotomicNumber(field, Rational(i == j ? 1 : 0)));
  }
  RowEchelon e = row_reduce(std::move(aug), field, 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  CycMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

CycMatrix matrix_multiply(const CycMatrix& a, const CycMatrix& b, const CyclotomicField& field) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k ? b[0].size() : 0;
  CycMatrix out(n, CycVector(p, CyclotomicNumber(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  return out;
}

CycMatrix nullspace(const CycMatrix& m, const CyclotomicField& field, std::size_t cols) {
  RowEchelon e = row_reduce(m, field, cols);
  std::vector<bool> is_pivot(cols, false);
  for (unsigned p : e.pivots) is_pivot[p] = true;
  CycMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CycVector v(cols, CyclotomicNumber(field));
    v[free] = CyclotomicNumber(field, Rational(1));
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

CycVector normalize_leading_one(CycVector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    CyclotomicNumber inv = v[i].inverse();
    for (std::size_t j = i; j < v.size(); ++j) v[j] = v[j] * inv;
    return v;
  }
  throw std::invalid_argument("normalize_leading_one: zero vector");
}

}  // namespace reflectarr
