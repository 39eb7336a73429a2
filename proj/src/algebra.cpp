#include "embed3/algebra.hpp"

#include <utility>

#include "embed3/errors.hpp"

namespace embed3::algebra {

namespace {

// ---------------------------------------------------------------------------
// Field kernels.  The elimination loops are written once, templated over a
// small operations object.  Prime fields run on int64 residues (p < 2^31, so
// products stay inside int64); the rationals run on exact big rationals.

struct gfp_ops {
  long long p;
  using value = long long;
  static bool is_zero(value a) { return a == 0; }
  value add(value a, value b) const {
    value s = a + b;
    return s >= p ? s - p : s;
  }
  value sub(value a, value b) const {
    value s = a - b;
    return s < 0 ? s + p : s;
  }
  value mul(value a, value b) const { return (a * b) % p; }
  value inv(value a) const {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
};

struct rat_ops {
  using value = Rat;
  static bool is_zero(const value& a) { return a.is_zero(); }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  value inv(const value& a) const { return Rat(1) / a; }
};

template <class Ops>
struct dense {
  std::size_t rows = 0, cols = 0;
  std::vector<typename Ops::value> a;
  typename Ops::value& at(std::size_t r, std::size_t c) {
    return a[r * cols + c];
  }
};

// Gauss-Jordan pass, eliminating above and below each pivot as it is found.
// The per-row updates for a fixed pivot are independent, so the row loop can
// fan out; results are identical to any serial schedule because arithmetic
// is exact.
template <class Ops>
void rref_inplace(const Ops& ops, dense<Ops>& m,
                  std::vector<std::size_t>& pivots, bool parallel) {
  const long long rows = static_cast<long long>(m.rows);
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    std::size_t sel = m.rows;
    for (std::size_t r = pr; r < m.rows; ++r)
      if (!Ops::is_zero(m.at(r, pc))) {
        sel = r;
        break;
      }
    if (sel == m.rows) continue;
    if (sel != pr)
      for (std::size_t c = pc; c < m.cols; ++c)
        std::swap(m.at(sel, c), m.at(pr, c));
    const auto piv_inv = ops.inv(m.at(pr, pc));
    for (std::size_t c = pc; c < m.cols; ++c)
      m.at(pr, c) = ops.mul(m.at(pr, c), piv_inv);
#ifdef EMBED3_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows >= 64)
#endif
    for (long long r = 0; r < rows; ++r) {
      if (static_cast<std::size_t>(r) == pr) continue;
      const auto factor = m.at(r, pc);
      if (Ops::is_zero(factor)) continue;
      for (std::size_t c = pc; c < m.cols; ++c)
        m.at(r, c) = ops.sub(m.at(r, c), ops.mul(factor, m.at(pr, c)));
    }
    pivots.push_back(pc);
    ++pr;
  }
  (void)parallel;
  (void)rows;
}

dense<gfp_ops> to_gfp(const ExactMatrix& m) {
  dense<gfp_ops> d;
  d.rows = m.rows;
  d.cols = m.cols;
  d.a.resize(m.rows * m.cols);
  for (std::size_t i = 0; i < d.a.size(); ++i)
    d.a[i] = numerator(m.data[i]).convert_to<long long>();
  return d;
}

dense<rat_ops> to_rat(const ExactMatrix& m) {
  dense<rat_ops> d;
  d.rows = m.rows;
  d.cols = m.cols;
  d.a = m.data;
  return d;
}

RrefResult pack_result(const ExactMatrix& m, std::vector<Rat> entries,
                       const std::vector<std::size_t>& pivots) {
  RrefResult res;
  res.rank = pivots.size();
  res.rref = m;
  res.rref.data = std::move(entries);
  for (std::size_t pc : pivots) res.pivot_cols.push_back(m.col_labels[pc]);
  return res;
}

RrefResult run_rref(const ExactMatrix& m, bool parallel) {
  std::vector<std::size_t> pivots;
  if (m.field.is_prime_field()) {
    dense<gfp_ops> d = to_gfp(m);
    rref_inplace(gfp_ops{m.field.p}, d, pivots, parallel);
    std::vector<Rat> out(d.a.size());
    for (std::size_t i = 0; i < d.a.size(); ++i) out[i] = Rat(d.a[i]);
    return pack_result(m, std::move(out), pivots);
  }
  dense<rat_ops> d = to_rat(m);
  rref_inplace(rat_ops{}, d, pivots, parallel);
  return pack_result(m, std::move(d.a), pivots);
}

}  // namespace

RrefResult rank_and_rref(const ExactMatrix& m) { return run_rref(m, true); }

// Reference implementation: forward elimination to echelon form, then an
// explicit back-substitution sweep.  Kept deliberately plain (no kernel
// sharing, no OpenMP) so the fast path has something independent to be
// checked against.
RrefResult rank_and_rref_serial(const ExactMatrix& m) {
  const FieldTag k = m.field;
  ExactMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < w.cols && pr < w.rows; ++pc) {
    std::size_t sel = w.rows;
    for (std::size_t r = pr; r < w.rows; ++r)
      if (!f_is_zero(w.at(r, pc))) {
        sel = r;
        break;
      }
    if (sel == w.rows) continue;
    for (std::size_t c = 0; c < w.cols; ++c) std::swap(w.at(sel, c), w.at(pr, c));
    Rat inv = f_inv(k, w.at(pr, pc));
    for (std::size_t c = 0; c < w.cols; ++c)
      w.at(pr, c) = f_mul(k, w.at(pr, c), inv);
    for (std::size_t r = pr + 1; r < w.rows; ++r) {
      Rat factor = w.at(r, pc);
      if (f_is_zero(factor)) continue;
      for (std::size_t c = 0; c < w.cols; ++c)
        w.at(r, c) = f_sub(k, w.at(r, c), f_mul(k, factor, w.at(pr, c)));
    }
    pivots.push_back(pc);
    ++pr;
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    std::size_t pc = pivots[i];
    for (std::size_t r = 0; r < i; ++r) {
      Rat factor = w.at(r, pc);
      if (f_is_zero(factor)) continue;
      for (std::size_t c = 0; c < w.cols; ++c)
        w.at(r, c) = f_sub(k, w.at(r, c), f_mul(k, factor, w.at(i, c)));
    }
  }
  RrefResult res;
  res.rank = pivots.size();
  res.rref = std::move(w);
  for (std::size_t pc : pivots) res.pivot_cols.push_back(m.col_labels[pc]);
  return res;
}

std::size_t rank_of(const ExactMatrix& m) { return rank_and_rref(m).rank; }

ExactMatrix null_space_basis(const ExactMatrix& m) {
  RrefResult rr = rank_and_rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  std::vector<std::size_t> pivot_col_index;  // pivot row i -> column index
  {
    std::size_t next = 0;
    for (const Id& lab : rr.pivot_cols) {
      std::size_t c = next;
      while (!(m.col_labels[c] == lab)) ++c;
      is_pivot[c] = true;
      pivot_col_index.push_back(c);
      next = c + 1;
    }
  }
  std::vector<Id> free_labels;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) {
      free_labels.push_back(m.col_labels[c]);
      free_cols.push_back(c);
    }
  ExactMatrix basis(m.field, free_labels, m.col_labels);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    basis.at(i, free_cols[i]) = Rat(1);
    for (std::size_t r = 0; r < rr.rank; ++r)
      basis.at(i, pivot_col_index[r]) =
          f_neg(m.field, rr.rref.at(r, free_cols[i]));
  }
  return basis;
}

ExactMatrix orthogonal_complement(const ExactMatrix& m) {
  return null_space_basis(m);
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field == b.field)) throw Error("multiply: field mismatch");
  if (a.cols != b.rows) throw Error("multiply: shape mismatch");
  ExactMatrix out(a.field, a.row_labels, b.col_labels);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rat& f = a.at(r, k);
      if (f_is_zero(f)) continue;
      for (std::size_t c = 0; c < b.cols; ++c)
        out.at(r, c) =
            f_add(a.field, out.at(r, c), f_mul(a.field, f, b.at(k, c)));
    }
  return out;
}

bool rows_in_row_space(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field == b.field)) throw Error("row space: field mismatch");
  if (a.col_labels != b.col_labels) return false;
  ExactMatrix stacked(a.field, {}, a.col_labels);
  stacked.rows = a.rows + b.rows;
  stacked.row_labels.clear();
  for (std::size_t r = 0; r < b.rows; ++r)
    stacked.row_labels.push_back(Id::of_string("b" + std::to_string(r)));
  for (std::size_t r = 0; r < a.rows; ++r)
    stacked.row_labels.push_back(Id::of_string("a" + std::to_string(r)));
  stacked.data = b.data;
  stacked.data.insert(stacked.data.end(), a.data.begin(), a.data.end());
  return rank_of(stacked) == rank_of(b);
}

bool row_spaces_equal(const ExactMatrix& a, const ExactMatrix& b) {
  return rows_in_row_space(a, b) && rows_in_row_space(b, a);
}

}  // namespace embed3::algebra
