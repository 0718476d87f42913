#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chowkit/integer.hpp"

namespace chowkit::lattice {

// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws std::invalid_argument unless the factors already form a canonical chain.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  // Accepts any diagonal (zeros count as free, units are dropped) and canonicalizes.
  static AbelianGroup from_diagonal(std::size_t extra_free, const std::vector<Integer>& diagonal);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_cyclic() const;
  // Product of the invariant factors.
  Integer torsion_order() const;

  // "0", "ℤ", "ℤ^2 ⊕ ℤ/10", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

// Additive order: a positive integer or infinite.
class Order {
 public:
  static Order infinite() { return Order(); }
  static Order finite(Integer k);

  bool is_finite() const { return finite_; }
  // Throws std::logic_error when infinite.
  const Integer& value() const;
  std::string to_string() const;

  friend bool operator==(const Order&, const Order&) = default;

 private:
  Order() = default;
  bool finite_ = false;
  Integer value_ = 0;
};

}  // namespace chowkit::lattice
