#include "chowkit/lattice/normal_form.hpp"

#include <algorithm>
#include <optional>

namespace chowkit::lattice {

namespace {

// Row index >= from with the smallest nonzero |a(i, col)|.
std::optional<std::size_t> smallest_in_column(const Matrix& a, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (a(i, col) == 0) continue;
    if (!best || abs(a(i, col)) < abs(a(*best, col))) best = i;
  }
  return best;
}

void row_op(Matrix& h, Matrix& u, std::size_t dst, std::size_t src, const Integer& k) {
  h.add_row_multiple(dst, src, k);
  u.add_row_multiple(dst, src, k);
}

}  // namespace

HermiteForm hnf(const Matrix& a) {
  Matrix h = a;
  Matrix u = Matrix::identity(a.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool found = false;
    while (auto p = smallest_in_column(h, col, row)) {
      found = true;
      h.swap_rows(row, *p);
      u.swap_rows(row, *p);
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        row_op(h, u, i, row, -floor_div(h(i, col), h(row, col)));
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      if (q != 0) row_op(h, u, i, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

SnfDecomposition snf(const Matrix& a) {
  Matrix d = a;
  Matrix u = Matrix::identity(a.rows());
  Matrix v = Matrix::identity(a.cols());
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

}  // namespace chowkit::lattice
