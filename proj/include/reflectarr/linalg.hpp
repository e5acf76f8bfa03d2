#pragma once

// Exact dense linear algebra over a cyclotomic field.

#include <optional>
#include <vector>

#include "reflectarr/polynomial.hpp"

namespace reflectarr {

/// Reduced row echelon form: pivot entries are 1, pivot columns are zero
/// elsewhere, zero rows removed. `pivots[k]` is the pivot column of row k.
struct RowEchelon {
  CycMatrix rows;
  std::vector<unsigned> pivots;
  std::size_t rank() const { return rows.size(); }
};

RowEchelon row_reduce(CycMatrix m, const CyclotomicField& field, std::size_t cols);
std::size_t matrix_rank(const CycMatrix& m, const CyclotomicField& field, std::size_t cols);

/// Coordinates of v in the echelon basis, or nullopt when v is not in the row span.
std::optional<CycVector> row_space_coordinates(const RowEchelon& e, const CycVector& v);

std::optional<CycMatrix> matrix_inverse(const CycMatrix& m, const CyclotomicField& field);
CycMatrix identity_matrix(std::size_t n, const CyclotomicField& field);
CycMatrix matrix_multiply(const CycMatrix& a, const CycMatrix& b, const CyclotomicField& field);

/// Basis of {x : m x = 0}.
CycMatrix nullspace(const CycMatrix& m, const CyclotomicField& field, std::size_t cols);

/// Scales a nonzero vector so that its first nonzero entry is 1.
CycVector normalize_leading_one(CycVector v);

}  // namespace reflectarr
