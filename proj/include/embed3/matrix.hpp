#pragma once

#include <cstddef>
#include <vector>

#include "embed3/field.hpp"
#include "embed3/ids.hpp"

namespace embed3::algebra {

// Dense exact matrix with duplicate-free row and column labels.  Entries are
// canonical field elements (see field.hpp).  Row-major storage.
struct ExactMatrix {
  FieldTag field = FieldTag::gf(2);
  std::size_t rows = 0, cols = 0;
  std::vector<Id> row_labels, col_labels;
  std::vector<Rat> data;

  ExactMatrix() = default;
  ExactMatrix(FieldTag f, std::vector<Id> rlab, std::vector<Id> clab);

  Rat& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  void set(std::size_t r, std::size_t c, const Rat& value) {
    at(r, c) = f_norm(field, value);
  }

  static ExactMatrix identity(FieldTag f, std::vector<Id> labels);

  // Convenience construction from integer literals (normalized into field).
  static ExactMatrix from_rows(FieldTag f, std::vector<Id> rlab,
                               std::vector<Id> clab,
                               const std::vector<std::vector<long long>>& a);

  std::size_t col_index(const Id& label) const;  // throws if absent
  std::size_t row_index(const Id& label) const;

  ExactMatrix columns(const std::vector<Id>& labels) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field == b.field && a.rows == b.rows && a.cols == b.cols &&
           a.row_labels == b.row_labels && a.col_labels == b.col_labels &&
           a.data == b.data;
  }
};

}  // namespace embed3::algebra
