#pragma once

// Matrices with polynomial entries: determinants and maximal minors.

#include <optional>
#include <vector>

#include "reflectarr/polynomial.hpp"

namespace reflectarr {

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const MultiPoly& zero);
  explicit PolyMatrix(std::vector<std::vector<MultiPoly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  /// Degree of every entry of column c when the column is homogeneous of one
  /// degree (zero entries ignored); nullopt otherwise.
  std::optional<int> column_degree(std::size_t c) const;

  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_col(std::size_t c) const;
  PolyMatrix first_cols(std::size_t k) const;
  PolyMatrix with_rows_swapped(std::size_t a, std::size_t b) const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Laplace expansion along the first row; intended for size at most 5.
MultiPoly determinant_expansion(const PolyMatrix& m);
/// Fraction-free Bareiss elimination with exact polynomial division.
MultiPoly determinant_bareiss(const PolyMatrix& m);
/// Expansion up to 5x5, Bareiss above.
MultiPoly determinant(const PolyMatrix& m);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Maximal minors of an (n+1) x n or n x (n+1) matrix. Entry k omits row
/// (or column) k and carries the sign (-1)^k.
std::vector<MultiPoly> maximal_minors(const PolyMatrix& m);

}  // namespace reflectarr
