#pragma once

#include <cstddef>
#include <vector>

#include "embed3/matrix.hpp"

namespace embed3::algebra {

struct RrefResult {
  std::size_t rank = 0;
  ExactMatrix rref;           // reduced row echelon form (canonical)
  std::vector<Id> pivot_cols; // labels of pivot columns, left to right
};

// Gaussian-Jordan elimination with deterministic pivoting: leftmost column
// first, lowest remaining row index.  The result (being the canonical RREF)
// does not depend on the elimination schedule, which is what lets the
// parallel kernel and the serial reference below be compared bit for bit.
//
// rank_and_rref uses an OpenMP row-elimination kernel when compiled with
// OpenMP and the matrix is large enough to pay for it; rank_and_rref_serial
// is an independently written textbook loop kept as the reference
// implementation for testing and benchmarking.
RrefResult rank_and_rref(const ExactMatrix& m);
RrefResult rank_and_rref_serial(const ExactMatrix& m);

std::size_t rank_of(const ExactMatrix& m);

// Rows form a basis of { x : m * x = 0 }.  Basis vectors are produced from
// the free columns of the RREF in column order; each row is labelled by its
// free column's label, columns inherit m's column labels.
ExactMatrix null_space_basis(const ExactMatrix& m);

// Rows span { y : y is orthogonal to every row of m } under the standard
// bilinear form.  Equal to null_space_basis(m) read row-wise; exposed under
// its own name because callers use it for cocycle/cycle space duality.
ExactMatrix orthogonal_complement(const ExactMatrix& m);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

// True when the row spaces coincide (labels on columns must agree).
bool row_spaces_equal(const ExactMatrix& a, const ExactMatrix& b);

// True when every row of a lies in the row space of b.
bool rows_in_row_space(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace embed3::algebra
