#pragma once

// Slow, independent reference computations for the lattice engine.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "chowkit/lattice/lattice.hpp"

namespace oracle {

using chowkit::Integer;
using chowkit::lattice::Matrix;
using chowkit::lattice::Vector;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Laplace expansion along the first row.
inline Integer cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    Integer term = a(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Nonzero invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
// D_k = gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const Matrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        g = chowkit::gcd(g, cofactor_determinant(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Exhaustive search over |c_i| <= bound, split in two halves.
inline std::optional<Vector> brute_force_member(const Matrix& basis, const Vector& v, long bound) {
  const std::size_t n = basis.cols();
  const std::size_t half = n / 2;
  auto enumerate = [&](std::size_t from, std::size_t to) {
    std::vector<std::pair<Vector, Vector>> out;  // (combination, coefficients)
    Vector coef(to - from, Integer(-bound));
    for (;;) {
      Vector sum(basis.rows());
      for (std::size_t j = from; j < to; ++j)
        for (std::size_t r = 0; r < basis.rows(); ++r) sum[r] += basis(r, j) * coef[j - from];
      out.emplace_back(sum, coef);
      std::size_t k = 0;
      while (k < coef.size() && coef[k] == bound) coef[k++] = -bound;
      if (k == coef.size()) break;
      coef[k] += 1;
    }
    return out;
  };
  auto left = enumerate(0, half);
  auto right = enumerate(half, n);
  std::set<Vector> right_sums;
  for (const auto& [s, c] : right) right_sums.insert(s);
  for (const auto& [s, c] : left) {
    Vector need(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) need[r] = v[r] - s[r];
    if (!right_sums.count(need)) continue;
    for (const auto& [s2, c2] : right)
      if (s2 == need) {
        Vector all = c;
        all.insert(all.end(), c2.begin(), c2.end());
        return all;
      }
  }
  return std::nullopt;
}

// Membership through the dense row-style HNF of the transposed basis.
inline bool hnf_member(const Matrix& basis, const Vector& v) {
  Matrix h = chowkit::lattice::hnf(basis.transpose()).h;
  Vector w = v;
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    while (col < h.cols() && h(r, col) == 0) ++col;
    if (col == h.cols()) break;
    if (w[col] % h(r, col) != 0) return false;
    Integer q = w[col] / h(r, col);
    for (std::size_t c = 0; c < h.cols(); ++c) w[c] -= q * h(r, c);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

// Least k <= limit with k v in the lattice, or nullopt.
inline std::optional<Integer> brute_force_order(const Matrix& basis, const Vector& v, const Integer& limit) {
  for (Integer k = 1; k <= limit; ++k) {
    Vector w = v;
    for (auto& x : w) x *= k;
    if (hnf_member(basis, w)) return k;
  }
  return std::nullopt;
}

inline bool is_hermite(const Matrix& h) {
  std::size_t last = 0;
  bool zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t col = 0;
    while (col < h.cols() && h(r, col) == 0) ++col;
    if (col == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (r > 0 && col <= last) return false;
    if (h(r, col) <= 0) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, col) < 0 || h(i, col) >= h(r, col)) return false;
    last = col;
  }
  return true;
}

inline bool is_smith(const Matrix& d) {
  Integer prev = 0;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c) {
        if (d(r, c) != 0) return false;
        continue;
      }
      if (d(r, c) < 0) return false;
      if (d(r, c) == 0) {
        zero_seen = true;
      } else {
        if (zero_seen) return false;
        if (prev != 0 && d(r, c) % prev != 0) return false;
        prev = d(r, c);
      }
    }
  return true;
}

}  // namespace oracle
