#include "chowkit/lattice/abelian_group.hpp"

#include <stdexcept>
#include <utility>

namespace chowkit::lattice {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factor below 2: " + chowkit::to_string(factors_[i]));
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::from_diagonal(std::size_t extra_free, const std::vector<Integer>& diagonal) {
  std::size_t free_rank = extra_free;
  std::vector<Integer> d;
  for (const auto& x : diagonal) {
    Integer a = abs(x);
    if (a == 0) {
      ++free_rank;
    } else if (a != 1) {
      d.push_back(a);
    }
  }
  // gcd/lcm exchange turns any diagonal into a divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::vector<Integer> factors;
  for (auto& x : d)
    if (x != 1) factors.push_back(std::move(x));
  return AbelianGroup(free_rank, std::move(factors));
}

bool AbelianGroup::is_cyclic() const {
  return free_rank_ + factors_.size() <= 1;
}

Integer AbelianGroup::torsion_order() const {
  Integer p = 1;
  for (const auto& x : factors_) p *= x;
  return p;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) {
    parts.emplace_back("ℤ");
  } else if (free_rank_ > 1) {
    parts.emplace_back("ℤ^" + std::to_string(free_rank_));
  }
  for (const auto& x : factors_) parts.emplace_back("ℤ/" + chowkit::to_string(x));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

Order Order::finite(Integer k) {
  if (k < 1) throw std::invalid_argument("finite order must be positive");
  Order o;
  o.finite_ = true;
  o.value_ = std::move(k);
  return o;
}

const Integer& Order::value() const {
  if (!finite_) throw std::logic_error("infinite order has no integer value");
  return value_;
}

std::string Order::to_string() const { return finite_ ? chowkit::to_string(value_) : "infinite"; }

}  // namespace chowkit::lattice
