#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/algebra/signature.hpp"
#include "chowkit/integer.hpp"

namespace chowkit::algebra {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}
  static Monomial one(std::size_t variable_count) { return Monomial(std::vector<std::uint32_t>(variable_count, 0)); }
  static Monomial variable(std::size_t variable_count, std::size_t index);

  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;

  // Plain lexicographic order on exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

std::size_t degree(const Monomial& m, const Signature& sig);

// Descending weighted degree, then descending lexicographic.
bool canonical_before(const Monomial& a, const Monomial& b, const Signature& sig);

// "1", "x", "x^2*y"
std::string to_string(const Monomial& m, const Signature& sig);

// All monomials of weighted degree d in canonical order.
std::vector<Monomial> monomial_basis(const Signature& sig, std::size_t d);

class Homogeneity {
 public:
  enum class Kind { kDegree, kEveryDegree, kNone };

  static Homogeneity of(std::size_t d) { return Homogeneity(Kind::kDegree, d); }
  static Homogeneity every_degree() { return Homogeneity(Kind::kEveryDegree, 0); }
  static Homogeneity none() { return Homogeneity(Kind::kNone, 0); }

  Kind kind() const { return kind_; }
  bool is_homogeneous() const { return kind_ != Kind::kNone; }
  bool is_every_degree() const { return kind_ == Kind::kEveryDegree; }
  // Present only for Kind::kDegree.
  std::optional<std::size_t> degree() const;
  bool admits(std::size_t d) const { return kind_ == Kind::kEveryDegree || (kind_ == Kind::kDegree && degree_ == d); }

  friend bool operator==(const Homogeneity&, const Homogeneity&) = default;

 private:
  Homogeneity(Kind k, std::size_t d) : kind_(k), degree_(d) {}
  Kind kind_;
  std::size_t degree_;
};

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Integer coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(SignaturePtr sig);
  static Polynomial constant(SignaturePtr sig, const Integer& c);
  static Polynomial variable(SignaturePtr sig, std::size_t index);
  // Throws std::invalid_argument for an unknown name.
  static Polynomial variable(SignaturePtr sig, std::string_view name);
  static Polynomial monomial(SignaturePtr sig, Monomial m, const Integer& c = 1);
  // Merges repeated monomials and drops zeros.
  static Polynomial from_terms(SignaturePtr sig, std::vector<Term> terms);

  const SignaturePtr& signature_ptr() const { return sig_; }
  const Signature& signature() const { return *sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  Homogeneity homogeneity() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& k);
  Polynomial pow(unsigned e) const;
  Polynomial times_monomial(const Monomial& m) const;

  // Structural equality; signatures compared by value.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  SignaturePtr sig_;
  std::vector<Term> terms_;  // canonical order, nonzero coefficients
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Integer& k, Polynomial p);
Polynomial operator*(long k, Polynomial p);

Polynomial multiply(const Polynomial& p, const Polynomial& q);
Homogeneity homogeneous_degree(const Polynomial& p);

// Canonical text, e.g. "x^2 - 7*x*y + y^2"; the zero polynomial prints as "0".
std::string to_string(const Polynomial& p);

}  // namespace chowkit::algebra
