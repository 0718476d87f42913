#pragma once

#include <random>
#include <string>

#include "chowkit/format/parse.hpp"

namespace oracle {

using chowkit::Integer;

inline std::string random_identifier(std::mt19937_64& rng) {
  static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const std::string rest = first + "0123456789_";
  std::uniform_int_distribution<std::size_t> len(0, 5);
  std::string s(1, first[rng() % first.size()]);
  for (std::size_t n = len(rng); n > 0; --n) s += rest[rng() % rest.size()];
  return s;
}

inline Integer random_coefficient(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return Integer(static_cast<long>(rng() % 7)) - 3;
    case 1:
      return Integer(static_cast<long>(rng() % 2001)) - 1000;
    case 2: {
      Integer x(std::to_string(rng()) + std::to_string(rng()), 10);  // beyond 64 bits
      return rng() % 2 ? x : Integer(-x);
    }
    default:
      return 1;
  }
}

inline chowkit::format::PresentationDocument random_document(std::mt19937_64& rng) {
  using namespace chowkit::algebra;
  std::vector<Variable> vars;
  std::size_t n = 1 + rng() % 4;
  while (vars.size() < n) {
    std::string name = random_identifier(rng);
    if (name == "vars" || name == "rel") continue;
    bool dup = false;
    for (const auto& v : vars) dup = dup || v.name == name;
    if (!dup) vars.push_back({name, 1 + rng() % 3});
  }
  auto sig = make_signature(vars);
  std::vector<Polynomial> rels;
  for (std::size_t r = rng() % 5; r > 0; --r) {
    std::size_t d = 1 + rng() % 4;
    auto basis = monomial_basis(*sig, d);
    if (basis.empty()) continue;
    std::vector<Polynomial::Term> terms;
    for (std::size_t t = 1 + rng() % 4; t > 0; --t) terms.push_back({basis[rng() % basis.size()], random_coefficient(rng)});
    Polynomial p = Polynomial::from_terms(sig, terms);
    if (!p.is_zero()) rels.push_back(p);
  }
  std::vector<std::pair<std::string, std::string>> meta;
  for (std::size_t m = rng() % 3; m > 0; --m) {
    std::string key = random_identifier(rng);
    if (key == "vars" || key == "rel") continue;
    meta.emplace_back(key, rng() % 2 ? "value " + std::to_string(rng() % 100) : "");
  }
  return {Presentation(sig, rels), meta};
}

}  // namespace oracle
