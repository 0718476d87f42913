#include "chowkit/lattice/lattice_basis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "chowkit/error.hpp"
#include "chowkit/lattice/normal_form.hpp"

namespace chowkit::lattice {

namespace {

// a + k * b over sorted sparse vectors.
SparseVector axpy(const SparseVector& a, const Integer& k, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, k * b[j].second);
      ++j;
    } else {
      Integer x = a[i].second + k * b[j].second;
      if (x != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

// a * x + b * y
SparseVector combination(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y) {
  SparseVector scaled;
  scaled.reserve(x.size());
  if (a != 0)
    for (const auto& [r, v] : x) scaled.emplace_back(r, a * v);
  return b == 0 ? scaled : axpy(scaled, b, y);
}

}  // namespace

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

LatticeBasis::LatticeBasis(std::size_t ambient_dimension, std::vector<SparseVector> generators)
    : ambient_(ambient_dimension), generator_count_(generators.size()), columns_(std::move(generators)) {
  if (columns_.size() > std::numeric_limits<std::uint32_t>::max()) throw DimensionError("too many generators");
  for (auto& c : columns_) {
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector merged;
    for (auto& e : c) {
      if (e.first >= ambient_) throw DimensionError("generator entry outside the ambient dimension");
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    c = std::move(merged);
  }
  reduce();
}

LatticeBasis::LatticeBasis(const Matrix& generators) : ambient_(generators.rows()), generator_count_(generators.cols()) {
  columns_.resize(generators.cols());
  for (std::size_t c = 0; c < generators.cols(); ++c)
    for (std::size_t r = 0; r < generators.rows(); ++r)
      if (generators(r, c) != 0) columns_[c].emplace_back(r, generators(r, c));
  reduce();
}

void LatticeBasis::reduce() {
  active_.assign(columns_.size(), false);
  row_columns_.assign(ambient_, {});
  row_eliminated_.assign(ambient_, false);
  seen_.assign(columns_.size(), 0);
  for (std::uint32_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].empty()) continue;
    active_[c] = true;
    for (const auto& e : columns_[c]) row_columns_[e.first].push_back(c);
  }
  for (;;) {
    eliminate_units();
    if (!echelon_core()) break;
    pivots_.clear();
  }
  finish();
  // The working index is only needed during reduction.
  row_columns_ = {};
  seen_ = {};
}

const Integer* LatticeBasis::entry(std::uint32_t column, std::size_t row) const {
  const auto& col = columns_[column];
  auto it = std::lower_bound(col.begin(), col.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it == col.end() || it->first != row) return nullptr;
  return &it->second;
}

std::vector<std::uint32_t> LatticeBasis::columns_at(std::size_t row) {
  ++stamp_;
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> kept;
  for (std::uint32_t c : row_columns_[row]) {
    if (!active_[c] || seen_[c] == stamp_ || entry(c, row) == nullptr) continue;
    seen_[c] = stamp_;
    out.push_back(c);
  }
  row_columns_[row] = out;
  return out;
}

void LatticeBasis::index_new_rows(std::uint32_t column, const SparseVector& before) {
  std::size_t i = 0;
  for (const auto& e : columns_[column]) {
    while (i < before.size() && before[i].first < e.first) ++i;
    if (i == before.size() || before[i].first != e.first) row_columns_[e.first].push_back(column);
  }
}

void LatticeBasis::add_multiple(std::uint32_t target, const Integer& k, std::uint32_t source) {
  SparseVector before = std::move(columns_[target]);
  columns_[target] = axpy(before, k, columns_[source]);
  index_new_rows(target, before);
  log_.push_back({Op::Kind::kAddMultiple, target, source, k, 0, 0, 0});
  if (columns_[target].empty()) active_[target] = false;
}

void LatticeBasis::combine(std::uint32_t i, std::uint32_t j, const Integer& a, const Integer& b, const Integer& c,
                           const Integer& d) {
  SparseVector old_i = std::move(columns_[i]);
  SparseVector old_j = std::move(columns_[j]);
  columns_[i] = combination(a, old_i, b, old_j);
  columns_[j] = combination(c, old_i, d, old_j);
  index_new_rows(i, old_i);
  index_new_rows(j, old_j);
  log_.push_back({Op::Kind::kCombine, i, j, a, b, c, d});
  if (columns_[i].empty()) active_[i] = false;
  if (columns_[j].empty()) active_[j] = false;
}

bool LatticeBasis::eliminate_units() {
  using Entry = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::uint32_t c = 0; c < columns_.size(); ++c)
    if (active_[c]) queue.emplace(columns_[c].size(), c);

  bool progress = false;
  while (!queue.empty()) {
    auto [length, p] = queue.top();
    queue.pop();
    if (!active_[p] || columns_[p].size() != length) continue;

    // Markowitz-style choice: the unit entry whose row is the sparsest.
    std::size_t row = ambient_;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& [r, x] : columns_[p]) {
      if (abs(x) != 1) continue;
      if (row_columns_[r].size() < best) {
        best = row_columns_[r].size();
        row = r;
      }
    }
    if (row == ambient_) continue;

    const int sign = *entry(p, row) > 0 ? 1 : -1;
    for (std::uint32_t c : columns_at(row)) {
      if (c == p) continue;
      Integer k = -(*entry(c, row)) * sign;
      add_multiple(c, k, p);
      if (active_[c]) queue.emplace(columns_[c].size(), c);
    }
    active_[p] = false;
    row_eliminated_[row] = true;
    row_columns_[row].clear();
    unit_steps_.push_back({row, p, sign});
    progress = true;
  }
  return progress;
}

// Returns true if a unit pivot appeared, in which case the caller re-runs
// unit elimination and discards this echelon pass.
bool LatticeBasis::echelon_core() {
  std::vector<bool> is_pivot(columns_.size(), false);
  bool unit = false;
  for (std::size_t row = 0; row < ambient_; ++row) {
    if (row_eliminated_[row]) continue;
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t c : columns_at(row))
      if (!is_pivot[c]) candidates.push_back(c);
    if (candidates.empty()) continue;

    std::uint32_t base = candidates.front();
    for (std::uint32_t c : candidates) {
      const Integer& x = *entry(c, row);
      const Integer& y = *entry(base, row);
      if (abs(x) < abs(y) || (abs(x) == abs(y) && columns_[c].size() < columns_[base].size())) base = c;
    }
    for (std::uint32_t c : candidates) {
      if (c == base) continue;
      Integer x = *entry(c, row);
      Integer y = *entry(base, row);
      if (x % y == 0) {
        add_multiple(c, -(x / y), base);
      } else {
        Integer g, s, t;
        extended_gcd(y, x, g, s, t);
        combine(base, c, s, t, x / g, -(y / g));
      }
    }
    if (*entry(base, row) < 0) {
      for (auto& e : columns_[base]) e.second = -e.second;
      log_.push_back({Op::Kind::kNegate, base, base, 0, 0, 0, 0});
    }
    is_pivot[base] = true;
    pivots_.push_back({row, base});
    if (*entry(base, row) == 1) unit = true;
  }
  return unit;
}

void LatticeBasis::finish() {
  core_position_.assign(ambient_, -1);
  for (const auto& p : pivots_)
    for (const auto& e : columns_[p.column]) core_position_[e.first] = 0;
  for (std::size_t r = 0; r < ambient_; ++r)
    if (core_position_[r] == 0) {
      core_position_[r] = static_cast<long>(core_rows_.size());
      core_rows_.push_back(r);
    }

  Matrix core(core_rows_.size(), pivots_.size());
  for (std::size_t j = 0; j < pivots_.size(); ++j)
    for (const auto& [r, x] : columns_[pivots_[j].column]) core(static_cast<std::size_t>(core_position_[r]), j) = x;
  SnfDecomposition s = snf(core);
  core_u_ = std::move(s.u);
  for (std::size_t j = 0; j < pivots_.size(); ++j) core_diagonal_.push_back(s.d(j, j));

  std::size_t remaining = 0;
  for (std::size_t r = 0; r < ambient_; ++r)
    if (!row_eliminated_[r]) ++remaining;
  group_ = AbelianGroup::from_diagonal(remaining - pivots_.size(), core_diagonal_);
}

void LatticeBasis::check_dimension(const Vector& v) const {
  if (v.size() != ambient_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " in a lattice of ambient dimension " +
                         std::to_string(ambient_));
  }
}

void LatticeBasis::strip_units(Vector& v, Vector* coefficients) const {
  for (const auto& step : unit_steps_) {
    if (v[step.row] == 0) continue;
    Integer q = v[step.row] * step.sign;
    for (const auto& [r, x] : columns_[step.column]) v[r] -= q * x;
    if (coefficients) (*coefficients)[step.column] += q;
  }
}

std::optional<Vector> LatticeBasis::member(const Vector& v) const {
  check_dimension(v);
  Vector w = v;
  Vector gamma(columns_.size());
  strip_units(w, &gamma);
  for (const auto& p : pivots_) {
    if (w[p.row] == 0) continue;
    const Integer& y = *entry(p.column, p.row);
    if (w[p.row] % y != 0) return std::nullopt;
    Integer q = w[p.row] / y;
    for (const auto& [r, x] : columns_[p.column]) w[r] -= q * x;
    gamma[p.column] += q;
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;

  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    switch (it->kind) {
      case Op::Kind::kAddMultiple:
        if (gamma[it->i] != 0) gamma[it->j] += it->a * gamma[it->i];
        break;
      case Op::Kind::kCombine: {
        Integer gi = it->a * gamma[it->i] + it->c * gamma[it->j];
        Integer gj = it->b * gamma[it->i] + it->d * gamma[it->j];
        gamma[it->i] = std::move(gi);
        gamma[it->j] = std::move(gj);
        break;
      }
      case Op::Kind::kNegate:
        gamma[it->i] = -gamma[it->i];
        break;
    }
  }
  return gamma;
}

Order LatticeBasis::order(const Vector& v) const {
  check_dimension(v);
  Vector w = v;
  strip_units(w, nullptr);
  Vector local(core_rows_.size());
  for (std::size_t r = 0; r < ambient_; ++r) {
    if (w[r] == 0) continue;
    if (core_position_[r] < 0) return Order::infinite();
    local[static_cast<std::size_t>(core_position_[r])] = w[r];
  }
  Vector y = core_u_ * local;
  Integer k = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    if (i >= core_diagonal_.size() || core_diagonal_[i] == 0) return Order::infinite();
    k = lcm(k, core_diagonal_[i] / gcd(core_diagonal_[i], y[i]));
  }
  return Order::finite(k);
}

bool LatticeBasis::spans_with(const std::vector<Vector>& extra) const {
  std::vector<long> position(ambient_, -1);
  std::size_t remaining = 0;
  for (std::size_t r = 0; r < ambient_; ++r)
    if (!row_eliminated_[r]) position[r] = static_cast<long>(remaining++);

  std::vector<SparseVector> columns;
  for (const auto& p : pivots_) {
    SparseVector c;
    for (const auto& [r, x] : columns_[p.column]) c.emplace_back(static_cast<std::size_t>(position[r]), x);
    columns.push_back(std::move(c));
  }
  for (const auto& e : extra) {
    check_dimension(e);
    Vector w = e;
    strip_units(w, nullptr);
    SparseVector c;
    for (std::size_t r = 0; r < ambient_; ++r)
      if (w[r] != 0) c.emplace_back(static_cast<std::size_t>(position[r]), w[r]);
    columns.push_back(std::move(c));
  }
  return LatticeBasis(remaining, std::move(columns)).cokernel().is_trivial();
}

}  // namespace chowkit::lattice
