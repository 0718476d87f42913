#pragma once

// Reference computations for graded pieces that share no code with the
// lattice engine beyond the Integer type.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "chowkit/algebra/presentation.hpp"

namespace oracle {

using chowkit::Integer;
using chowkit::algebra::Polynomial;
using chowkit::algebra::Presentation;

// Term-list product by a double loop with linear lookup.
inline std::vector<std::pair<std::vector<std::uint32_t>, Integer>> naive_product(const Polynomial& p,
                                                                                const Polynomial& q) {
  std::vector<std::pair<std::vector<std::uint32_t>, Integer>> out;
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      std::vector<std::uint32_t> e(a.monomial.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.monomial[i] + b.monomial[i];
      Integer c = a.coefficient * b.coefficient;
      bool found = false;
      for (auto& [m, x] : out)
        if (m == e) {
          x += c;
          found = true;
        }
      if (!found) out.emplace_back(e, c);
    }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

// All exponent vectors of weighted degree d, by exhaustive search of [0, d]^n.
inline std::vector<std::vector<std::uint32_t>> brute_monomials(const std::vector<std::size_t>& weights, std::size_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(weights.size(), 0);
  for (;;) {
    std::size_t deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * weights[i];
    if (deg == d) out.push_back(e);
    std::size_t k = 0;
    while (k < e.size() && e[k] == d) e[k++] = 0;
    if (k == e.size()) break;
    ++e[k];
  }
  return out;
}

struct RelationLattice {
  std::size_t dimension = 0;
  std::vector<std::vector<long>> columns;
};

inline RelationLattice brute_relation_lattice(const Presentation& pres, std::size_t d) {
  std::vector<std::size_t> weights;
  for (const auto& v : pres.signature().variables()) weights.push_back(v.weight);
  auto basis = brute_monomials(weights, d);
  RelationLattice out;
  out.dimension = basis.size();
  for (const auto& r : pres.relations()) {
    if (r.is_zero()) continue;
    std::size_t rd = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) rd += r.terms().front().monomial[i] * weights[i];
    if (rd > d) continue;
    for (const auto& m : brute_monomials(weights, d - rd)) {
      std::vector<long> col(basis.size(), 0);
      for (const auto& t : r.terms()) {
        std::vector<std::uint32_t> e(m.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] + t.monomial[i];
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (basis[j] == e) col[j] += t.coefficient.get_si();
      }
      out.columns.push_back(col);
    }
  }
  return out;
}

// Size of the subgroup of (Z/k)^n generated by the columns, by breadth-first
// closure over the elements themselves.
inline std::size_t subgroup_size(const RelationLattice& lat, long k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < lat.dimension; ++i) total *= static_cast<std::size_t>(k);
  std::vector<std::size_t> gens;
  for (const auto& c : lat.columns) {
    std::size_t code = 0;
    for (std::size_t i = lat.dimension; i-- > 0;) code = code * k + static_cast<std::size_t>(((c[i] % k) + k) % k);
    gens.push_back(code);
  }
  auto add = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < lat.dimension; ++i) {
      out += ((a % k + b % k) % k) * place;
      a /= k;
      b /= k;
      place *= k;
    }
    return out;
  };
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t g : gens) {
      std::size_t next = add(queue[head], g);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  return queue.size();
}

inline long ipow(long b, std::size_t e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

inline std::size_t log_count(std::size_t cosets, long p) {
  std::size_t e = 0;
  while (cosets > 1) {
    cosets /= static_cast<std::size_t>(p);
    ++e;
  }
  return e;
}

// log_p |G / p^e G|, counted as |(Z/p^e)^n| / |subgroup|.
inline std::optional<std::size_t> log_cosets(const RelationLattice& lat, long p, std::size_t e,
                                             std::size_t element_limit) {
  long k = ipow(p, e);
  double total = 1;
  for (std::size_t i = 0; i < lat.dimension; ++i) total *= static_cast<double>(k);
  if (total > static_cast<double>(element_limit)) return std::nullopt;
  return log_count(static_cast<std::size_t>(total) / subgroup_size(lat, k), p);
}

// Degree-d piece structure from counting cosets of G / p^e G. With
// |G/p^e G| = p^(e f) * prod_i p^min(e, v_p(d_i)), a prime q not dividing the
// torsion order gives the free rank f, and for each p | torsion the
// successive ratios give how many invariant factors have valuation >= e.
// `valuations` maps each prime of the torsion order to its exponent there.
inline std::optional<chowkit::lattice::AbelianGroup> coset_group(const RelationLattice& lat,
                                                                 const std::map<long, std::size_t>& valuations,
                                                                 long free_prime, std::size_t element_limit) {
  auto f = log_cosets(lat, free_prime, 1, element_limit);
  if (!f) return std::nullopt;
  std::map<long, std::vector<std::size_t>> at_least;
  for (const auto& [p, v] : valuations) {
    if (v == 1) {
      at_least[p] = {1};  // a single factor carries p
      continue;
    }
    std::size_t prev = 0;
    for (std::size_t e = 1; e <= v; ++e) {
      auto cur = log_cosets(lat, p, e, element_limit);
      if (!cur) return std::nullopt;
      if (*cur < prev + *f) return std::nullopt;
      at_least[p].push_back(*cur - prev - *f);
      prev = *cur;
    }
  }
  // The i-th largest factor collects p^e for each e with at_least[p][e-1] > i.
  std::size_t count = 0;
  for (const auto& [p, ge] : at_least) count = std::max(count, ge.front());
  std::vector<Integer> factors(count, Integer(1));
  for (const auto& [p, ge] : at_least)
    for (std::size_t e = 0; e < ge.size(); ++e)
      for (std::size_t i = 0; i < ge[e] && i < count; ++i) factors[count - 1 - i] *= p;
  std::erase_if(factors, [](const Integer& x) { return x == 1; });
  try {
    return chowkit::lattice::AbelianGroup(*f, factors);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace oracle
