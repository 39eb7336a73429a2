#include "embed3/matrix.hpp"

#include <set>

#include "embed3/errors.hpp"

namespace embed3::algebra {

namespace {
void check_labels(const std::vector<Id>& labels, const char* what) {
  std::set<Id> seen;
  for (const Id& id : labels)
    if (!seen.insert(id).second)
      throw Error(std::string("duplicate ") + what + " label: " +
                  id.to_string());
}
}  // namespace

ExactMatrix::ExactMatrix(FieldTag f, std::vector<Id> rlab, std::vector<Id> clab)
    : field(f),
      rows(rlab.size()),
      cols(clab.size()),
      row_labels(std::move(rlab)),
      col_labels(std::move(clab)),
      data(rows * cols, Rat(0)) {
  check_labels(row_labels, "row");
  check_labels(col_labels, "column");
}

ExactMatrix ExactMatrix::identity(FieldTag f, std::vector<Id> labels) {
  ExactMatrix m(f, labels, labels);
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, i) = Rat(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    FieldTag f, std::vector<Id> rlab, std::vector<Id> clab,
    const std::vector<std::vector<long long>>& a) {
  ExactMatrix m(f, std::move(rlab), std::move(clab));
  if (a.size() != m.rows) throw Error("from_rows: row count mismatch");
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (a[r].size() != m.cols) throw Error("from_rows: column count mismatch");
    for (std::size_t c = 0; c < m.cols; ++c)
      m.at(r, c) = f_norm(f, Rat(a[r][c]));
  }
  return m;
}

std::size_t ExactMatrix::col_index(const Id& label) const {
  for (std::size_t c = 0; c < cols; ++c)
    if (col_labels[c] == label) return c;
  throw Error("no column labelled " + label.to_string());
}

std::size_t ExactMatrix::row_index(const Id& label) const {
  for (std::size_t r = 0; r < rows; ++r)
    if (row_labels[r] == label) return r;
  throw Error("no row labelled " + label.to_string());
}

ExactMatrix ExactMatrix::columns(const std::vector<Id>& labels) const {
  ExactMatrix out(field, row_labels, labels);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    std::size_t src = col_index(labels[c]);
    for (std::size_t r = 0; r < rows; ++r) out.at(r, c) = at(r, src);
  }
  return out;
}

}  // namespace embed3::algebra
