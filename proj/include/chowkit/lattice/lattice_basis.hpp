#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chowkit/lattice/abelian_group.hpp"
#include "chowkit/lattice/matrix.hpp"

namespace chowkit::lattice {

// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

SparseVector to_sparse(const Vector& v);

// The column lattice of a generator set, reduced once and queried many times.
//
// Columns with a +-1 entry are used to eliminate their row outright; what is
// left is put in column echelon form with gcd steps and finished with a dense
// Smith form. Every column operation is logged, so a combination of reduced
// columns can be replayed back onto the original generators.
class LatticeBasis {
 public:
  LatticeBasis(std::size_t ambient_dimension, std::vector<SparseVector> generators);
  explicit LatticeBasis(const Matrix& generators);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t generator_count() const { return generator_count_; }

  const AbelianGroup& cokernel() const { return group_; }

  // Coefficients c over the original generators with sum c_i g_i = v.
  std::optional<Vector> member(const Vector& v) const;

  // Least k >= 1 with k v in the lattice.
  Order order(const Vector& v) const;

  // Whether the lattice plus the extra vectors is all of Z^ambient.
  bool spans_with(const std::vector<Vector>& extra) const;

 private:
  struct Op {
    enum class Kind : std::uint8_t { kAddMultiple, kCombine, kNegate };
    Kind kind;
    std::uint32_t i;
    std::uint32_t j;
    // kAddMultiple: col_i += a * col_j
    // kCombine: (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
    Integer a, b, c, d;
  };
  struct UnitStep {
    std::size_t row;
    std::uint32_t column;
    int sign;
  };
  struct Pivot {
    std::size_t row;
    std::uint32_t column;
  };

  void reduce();
  bool eliminate_units();
  bool echelon_core();
  void finish();

  void add_multiple(std::uint32_t target, const Integer& k, std::uint32_t source);
  void combine(std::uint32_t i, std::uint32_t j, const Integer& a, const Integer& b, const Integer& c,
               const Integer& d);
  void index_new_rows(std::uint32_t column, const SparseVector& before);
  const Integer* entry(std::uint32_t column, std::size_t row) const;
  std::vector<std::uint32_t> columns_at(std::size_t row);

  // Applies the unit steps to v in place; returns coefficients picked up if requested.
  void strip_units(Vector& v, Vector* coefficients) const;
  void check_dimension(const Vector& v) const;

  std::size_t ambient_ = 0;
  std::size_t generator_count_ = 0;
  std::vector<SparseVector> columns_;
  std::vector<bool> active_;
  std::vector<std::vector<std::uint32_t>> row_columns_;
  std::vector<bool> row_eliminated_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;

  std::vector<Op> log_;
  std::vector<UnitStep> unit_steps_;
  std::vector<Pivot> pivots_;

  // Dense Smith data on the rows the echelon pivots touch.
  std::vector<std::size_t> core_rows_;
  std::vector<long> core_position_;
  Matrix core_u_;
  std::vector<Integer> core_diagonal_;
  AbelianGroup group_;
};

}  // namespace chowkit::lattice
