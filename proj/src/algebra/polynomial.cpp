#include "chowkit/algebra/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "chowkit/error.hpp"

namespace chowkit::algebra {

Monomial Monomial::variable(std::size_t variable_count, std::size_t index) {
  std::vector<std::uint32_t> e(variable_count, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw SignatureMismatch("monomials over different variable counts");
  std::vector<std::uint32_t> e(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > std::numeric_limits<std::uint32_t>::max() - other.exponents_[i])
      throw std::overflow_error("exponent overflow");
    e[i] = exponents_[i] + other.exponents_[i];
  }
  return Monomial(std::move(e));
}

std::size_t degree(const Monomial& m, const Signature& sig) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::size_t>(m[i]) * sig.weight(i);
  return d;
}

bool canonical_before(const Monomial& a, const Monomial& b, const Signature& sig) {
  std::size_t da = degree(a, sig), db = degree(b, sig);
  if (da != db) return da > db;
  return a > b;
}

std::string to_string(const Monomial& m, const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += sig[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill_basis(const Signature& sig, std::size_t var, std::size_t remaining, std::vector<std::uint32_t>& cur,
                std::vector<Monomial>& out) {
  if (var + 1 == sig.size()) {
    if (remaining % sig.weight(var) != 0) return;
    cur[var] = static_cast<std::uint32_t>(remaining / sig.weight(var));
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (std::size_t e = remaining / sig.weight(var) + 1; e-- > 0;) {
    cur[var] = static_cast<std::uint32_t>(e);
    fill_basis(sig, var + 1, remaining - e * sig.weight(var), cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Signature& sig, std::size_t d) {
  std::vector<Monomial> out;
  if (sig.size() == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(sig.size(), 0);
  fill_basis(sig, 0, d, cur, out);
  return out;
}

std::optional<std::size_t> Homogeneity::degree() const {
  if (kind_ == Kind::kDegree) return degree_;
  return std::nullopt;
}

Polynomial::Polynomial(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw std::invalid_argument("polynomial without a signature");
}

Polynomial Polynomial::constant(SignaturePtr sig, const Integer& c) {
  std::size_t n = sig->size();
  return monomial(std::move(sig), Monomial::one(n), c);
}

Polynomial Polynomial::variable(SignaturePtr sig, std::size_t index) {
  if (index >= sig->size()) throw std::out_of_range("variable index out of range");
  std::size_t n = sig->size();
  return monomial(std::move(sig), Monomial::variable(n, index));
}

Polynomial Polynomial::variable(SignaturePtr sig, std::string_view name) {
  auto i = sig->index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(sig), *i);
}

Polynomial Polynomial::monomial(SignaturePtr sig, Monomial m, const Integer& c) {
  if (m.size() != sig->size()) throw SignatureMismatch("monomial length does not match the signature");
  Polynomial p(std::move(sig));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(SignaturePtr sig, std::vector<Term> terms) {
  std::map<Monomial, Integer> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != sig->size()) throw SignatureMismatch("monomial length does not match the signature");
    acc[std::move(t.monomial)] += t.coefficient;
  }
  Polynomial p(std::move(sig));
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  const Signature& s = *p.sig_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return canonical_before(a.monomial, b.monomial, s); });
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return Homogeneity::every_degree();
  std::size_t d = algebra::degree(terms_.front().monomial, *sig_);
  for (const auto& t : terms_)
    if (algebra::degree(t.monomial, *sig_) != d) return Homogeneity::none();
  return Homogeneity::of(d);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_signature(sig_, other.sig_, "addition");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = from_terms(sig_, std::move(all));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = multiply(*this, other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= k;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(sig_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e) base = multiply(base, base);
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p = *this;
  // Multiplying by a monomial preserves the canonical order.
  for (auto& t : p.terms_) t.monomial = t.monomial * m;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
Polynomial operator*(const Integer& k, Polynomial p) { return p *= k; }
Polynomial operator*(long k, Polynomial p) { return p *= Integer(k); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  require_same_signature(p.signature_ptr(), q.signature_ptr(), "multiplication");
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.terms().size() * q.terms().size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) terms.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  return Polynomial::from_terms(p.signature_ptr(), std::move(terms));
}

Homogeneity homogeneous_degree(const Polynomial& p) { return p.homogeneity(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coefficient < 0;
    Integer magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += chowkit::to_string(magnitude);
    } else {
      if (magnitude != 1) out += chowkit::to_string(magnitude) + "*";
      out += to_string(t.monomial, p.signature());
    }
  }
  return out;
}

}  // namespace chowkit::algebra
