#include "chowkit/corpus/builders.hpp"

#include <algorithm>

namespace chowkit::corpus {

using algebra::make_signature;
using algebra::SignaturePtr;
using algebra::Variable;

namespace {

void require_genus(long g) {
  if (g < 2) throw ParameterError("genus must be at least 2, got " + std::to_string(g));
}

Polynomial var(const SignaturePtr& sig, std::string_view name) { return Polynomial::variable(sig, name); }

Polynomial num(const SignaturePtr& sig, const Integer& k) { return Polynomial::constant(sig, k); }

SignaturePtr degree_one(std::vector<std::string> names) {
  std::vector<Variable> vars;
  for (auto& s : names) vars.push_back({std::move(s), 1});
  return make_signature(std::move(vars));
}

std::vector<Integer> divisors(const Integer& m) {
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d * d != m) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pairwise differences of the members of an equality chain.
void chain(std::vector<Polynomial>& rels, const std::vector<Polynomial>& members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) rels.push_back(members[a] - members[b]);
}

}  // namespace

std::string to_string(Hg1Basis b) {
  switch (b) {
    case Hg1Basis::kTEven: return "t-basis-even";
    case Hg1Basis::kTauOdd: return "tau-basis-odd";
    case Hg1Basis::kGeometric: return "geometric";
    case Hg1Basis::kL: return "l-basis";
  }
  return "?";
}

std::string to_string(Hg2FarBasis b) { return b == Hg2FarBasis::kL ? "l-basis" : "geometric"; }

std::string to_string(Intermediate w) {
  switch (w) {
    case Intermediate::kZ12OfHg2: return "Z12-of-Hg2";
    case Intermediate::kHOpen: return "H-open-n";
    case Intermediate::kZSubstack: return "Z-substack-n";
    case Intermediate::kWeierstrass: return "W-weierstrass";
  }
  return "?";
}

Hg1Basis parse_hg1_basis(std::string_view s) {
  for (auto b : {Hg1Basis::kTEven, Hg1Basis::kTauOdd, Hg1Basis::kGeometric, Hg1Basis::kL})
    if (s == to_string(b)) return b;
  if (s == "t-basis") return Hg1Basis::kTEven;
  if (s == "tau-basis") return Hg1Basis::kTauOdd;
  throw ParameterError("unknown H_{g,1} basis '" + std::string(s) + "'");
}

Hg2FarBasis parse_hg2far_basis(std::string_view s) {
  for (auto b : {Hg2FarBasis::kL, Hg2FarBasis::kGeometric})
    if (s == to_string(b)) return b;
  throw ParameterError("unknown far basis '" + std::string(s) + "' (expected l-basis or geometric)");
}

Intermediate parse_intermediate(std::string_view s) {
  for (auto w : {Intermediate::kZ12OfHg2, Intermediate::kHOpen, Intermediate::kZSubstack, Intermediate::kWeierstrass})
    if (s == to_string(w)) return w;
  throw ParameterError("unknown intermediate ring '" + std::string(s) + "'");
}

std::vector<Hg1Basis> hg1_bases(long g) {
  require_genus(g);
  if (g % 2 == 0) return {Hg1Basis::kTEven, Hg1Basis::kGeometric, Hg1Basis::kL};
  return {Hg1Basis::kTauOdd, Hg1Basis::kGeometric, Hg1Basis::kL};
}

Integer b_bound(long g) { return Integer(4 * g + 2) * (g + 1); }

std::vector<Integer> admissible_b(long g, long n) {
  require_genus(g);
  if (n < 3 || n > 2 * g + 3) return {};
  if (n == 3) return {Integer(2 * g + 1) * (g + 1), b_bound(g)};
  if (n == 4) {
    std::vector<Integer> out;
    for (const auto& d : divisors(4 * g + 2)) out.push_back(d * (g + 1));
    return out;
  }
  return divisors(b_bound(g));
}

std::vector<long> admissible_c(long g) {
  require_genus(g);
  std::vector<long> out;
  for (long c = 2; c <= 2 * g + 2; ++c) out.push_back(c);
  return out;
}

void validate(const CorpusParams& p) {
  require_genus(p.g);
  if (p.n < 0 || p.n > 2 * p.g + 3)
    throw ParameterError("n must lie in [0, " + std::to_string(2 * p.g + 3) + "], got " + std::to_string(p.n));
  if (p.n >= 3) {
    if (!p.b) throw ParameterError("n = " + std::to_string(p.n) + " needs an explicit b hypothesis");
    auto allowed = admissible_b(p.g, p.n);
    if (std::find(allowed.begin(), allowed.end(), *p.b) == allowed.end()) {
      std::string list;
      for (const auto& b : allowed) list += (list.empty() ? "" : ", ") + chowkit::to_string(b);
      throw ParameterError("b = " + chowkit::to_string(*p.b) + " is not admissible for g = " + std::to_string(p.g) +
                           ", n = " + std::to_string(p.n) + " (allowed: " + list + ")");
    }
  }
  if (p.n == 2 * p.g + 3) {
    if (!p.c) throw ParameterError("n = 2g+3 needs an explicit c hypothesis");
    if (*p.c <= 1 || *p.c > 2 * p.g + 2)
      throw ParameterError("c must lie in (1, " + std::to_string(2 * p.g + 2) + "], got " + std::to_string(*p.c));
  } else if (p.c) {
    throw ParameterError("a c hypothesis only applies when n = 2g+3");
  }
}

std::string z_name(long i, long j) {
  std::string a = std::to_string(i), b = std::to_string(j);
  if (i >= 10 || j >= 10) return "Z" + a + "_" + b;
  return "Z" + a + b;
}

Presentation build_chow_Hg1(long g, Hg1Basis basis) {
  require_genus(g);
  switch (basis) {
    case Hg1Basis::kTEven: {
      if (g % 2 != 0) throw ParameterError("t-basis needs even g, got " + std::to_string(g));
      auto sig = degree_one({"t0", "t1"});
      Polynomial t0 = var(sig, "t0"), t1 = var(sig, "t1");
      return Presentation(sig, {(4 * g + 2) * (t0 + t1), (g * (g - 1) / 2) * (t0 * t0 + t1 * t1) -
                                                             (g * (g + 3)) * (t0 * t1) +
                                                             (2 * g + 1) * ((t0 + t1) * t1)});
    }
    case Hg1Basis::kTauOdd: {
      if (g % 2 == 0) throw ParameterError("tau-basis needs odd g, got " + std::to_string(g));
      auto sig = degree_one({"tau", "rho"});
      Polynomial tau = var(sig, "tau"), rho = var(sig, "rho");
      return Presentation(sig, {(8 * g + 4) * tau, 2 * (tau * tau) + (g * (g + 1) / 2) * (rho * rho) -
                                                       (2 * g + 1) * (tau * rho)});
    }
    case Hg1Basis::kGeometric: {
      auto sig = degree_one({"psi1", "W1"});
      Polynomial psi = var(sig, "psi1"), w = var(sig, "W1");
      return Presentation(sig, {(4 * g + 2) * ((g + 1) * psi - (g - 1) * w), w * w + psi * w});
    }
    case Hg1Basis::kL: {
      auto sig = degree_one({"l1", "l2"});
      Polynomial l1 = var(sig, "l1"), l2 = var(sig, "l2");
      return Presentation(sig, {(4 * g + 2) * ((g + 1) * l1 + 2 * l2), 2 * (l2 * l2) + l1 * l2});
    }
  }
  throw ParameterError("unknown basis");
}

Presentation build_chow_Hg2far(long g, Hg2FarBasis basis) {
  require_genus(g);
  if (basis == Hg2FarBasis::kL) {
    Presentation base = build_chow_Hg1(g, Hg1Basis::kL);
    auto sig = base.signature_ptr();
    Polynomial l1 = var(sig, "l1"), l2 = var(sig, "l2");
    auto rels = base.relations();
    rels.push_back(((g + 1) * (2 * g + 1)) * (l1 * l1) + (4 * g + 2) * (l1 * l2));
    return Presentation(sig, std::move(rels));
  }
  Presentation base = build_chow_Hg1(g, Hg1Basis::kGeometric);
  auto sig = base.signature_ptr();
  Polynomial psi = var(sig, "psi1"), w = var(sig, "W1");
  auto rels = base.relations();
  rels.push_back(((2 * g + 1) * (g + 1)) * (psi * psi) + ((2 * g + 1) * (3 * g - 1)) * (w * w));
  return Presentation(sig, std::move(rels));
}

Presentation build_chow_Hgn(long g, long n, const std::optional<Integer>& b, const std::optional<long>& c) {
  require_genus(g);
  if (n < 2 || n > 2 * g + 3)
    throw ParameterError("n must lie in [2, " + std::to_string(2 * g + 3) + "], got " + std::to_string(n));

  if (n == 2) {
    if (c) throw ParameterError("a c hypothesis only applies when n = 2g+3");
    auto sig = degree_one({"psi1", "W1", "Z12"});
    Polynomial psi = var(sig, "psi1"), w = var(sig, "W1"), z = var(sig, "Z12");
    return Presentation(sig, {(4 * g + 2) * ((g + 1) * psi - (g - 1) * w), z * z + psi * z, w * w + psi * w, z * w,
                              ((2 * g + 1) * (g + 1)) * (psi * psi) + ((2 * g + 1) * (3 * g - 1)) * (w * w) -
                                  ((2 * g + 1) * (g + 1)) * (z * z)});
  }

  validate({g, n, b, c, 0});
  std::vector<std::string> names{"W1"};
  for (long j = 2; j <= n; ++j) names.push_back(z_name(1, j));
  names.push_back(z_name(2, 3));
  auto sig = degree_one(std::move(names));
  Presentation bare(sig, {});
  MarkedClasses k(bare);
  Polynomial w = k.W(), z23 = k.Z(2, 3);
  auto z1 = [&](long j) { return k.Z(1, j); };

  std::vector<Polynomial> rels;
  rels.push_back((8 * g + 4) * w - b_bound(g) * (z1(2) + z1(3) - z23));
  for (long i = 2; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) rels.push_back(z1(i) * z1(j));
  for (long j = 2; j <= 3; ++j) rels.push_back(z1(j) * z23);
  for (long j = 2; j <= n; ++j) rels.push_back(z1(j) * w);
  rels.push_back(z23 * w + (g + 1) * (z23 * z23));
  rels.push_back(2 * (w * w) - (g + 1) * (z23 * z23));

  std::vector<Polynomial> squares;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) squares.push_back(k.Z(i, j) * k.Z(i, j));

  if (n == 3) {
    for (std::size_t a = 0; a < squares.size(); ++a)
      for (std::size_t e = a + 1; e < squares.size(); ++e)
        rels.push_back(((2 * g + 1) * (g + 1)) * (squares[a] + squares[e]));
  } else if (n == 4) {
    chain(rels, {z23 * z23, -(z23 * z1(4)), z1(4) * z1(4)});
    for (long i = 1; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j) rels.push_back((g + 1) * k.Z(i, j).pow(3));
    for (std::size_t a = 0; a < squares.size(); ++a)
      for (std::size_t e = a + 1; e < squares.size(); ++e) rels.push_back((g + 1) * (squares[a] - squares[e]));
  } else {
    std::vector<Polynomial> members{z23 * z23};
    for (long i = 4; i <= n; ++i) members.push_back(-(z23 * z1(i)));
    for (long j = 2; j <= n; ++j) members.push_back(z1(j) * z1(j));
    chain(rels, members);
  }
  for (const auto& s : squares) rels.push_back(*b * s);
  if (n == 2 * g + 3) {
    rels.push_back(w.pow(static_cast<unsigned>(*c)));
    rels.push_back(w.pow(static_cast<unsigned>(2 * g + 2)));
  }
  return Presentation(sig, std::move(rels));
}

Presentation build_chow_Hgn_far(long g, long n, const std::optional<long>& c) {
  require_genus(g);
  if (n < 3 || n > 2 * g + 3)
    throw ParameterError("far ring needs n in [3, " + std::to_string(2 * g + 3) + "], got " + std::to_string(n) +
                         " (n = 2 is build_chow_Hg2far)");
  if (c && n != 2 * g + 3) throw ParameterError("a c hypothesis only applies when n = 2g+3");
  if (c && (*c <= 1 || *c > 2 * g + 2))
    throw ParameterError("c must lie in (1, " + std::to_string(2 * g + 2) + "], got " + std::to_string(*c));
  auto sig = degree_one({"W1"});
  Polynomial w = var(sig, "W1");
  std::vector<Polynomial> rels{(8 * g + 4) * w, 2 * (w * w)};
  if (n == 2 * g + 3) {
    if (c) rels.push_back(w.pow(static_cast<unsigned>(*c)));
    rels.push_back(w.pow(static_cast<unsigned>(2 * g + 2)));
  }
  return Presentation(sig, std::move(rels));
}

Presentation build_intermediate(long g, long n, Intermediate which) {
  require_genus(g);
  Integer big = b_bound(g);
  long half = (2 * g + 1) * (g + 1);
  switch (which) {
    case Intermediate::kZ12OfHg2: {
      auto sig = degree_one({"psi1"});
      return Presentation(sig, {big * var(sig, "psi1")});
    }
    case Intermediate::kWeierstrass: {
      auto sig = degree_one({"psi1"});
      return Presentation(sig, {(4 * g * (2 * g + 1)) * var(sig, "psi1")});
    }
    case Intermediate::kZSubstack: {
      if (n < 2 || n > 2 * g + 3)
        throw ParameterError("Z-substack-n needs n in [2, " + std::to_string(2 * g + 3) + "], got " +
                             std::to_string(n));
      auto sig = degree_one({"psi1"});
      Polynomial psi = var(sig, "psi1");
      std::vector<Polynomial> rels{big * psi};
      if (n == 3) rels.push_back(half * (psi * psi));
      if (n == 4) rels.push_back((g + 1) * (psi * psi));
      if (n >= 5) rels.push_back(psi * psi);
      return Presentation(sig, std::move(rels));
    }
    case Intermediate::kHOpen: {
      if (n < 2 || n > 2 * g + 3)
        throw ParameterError("H-open-n needs n in [2, " + std::to_string(2 * g + 3) + "], got " + std::to_string(n));
      auto sig = degree_one({"psi1", z_name(1, n)});
      Polynomial psi = var(sig, "psi1"), z = var(sig, z_name(1, n));
      std::vector<Polynomial> rels{big * psi};
      switch (n) {
        case 2:
          rels.push_back(z * z + psi * z);
          rels.push_back(half * (psi * psi - z * z));
          break;
        case 3:
          rels.push_back(z * z + psi * z);
          rels.push_back(half * (psi * psi));
          rels.push_back(half * (z * z));
          break;
        case 4:
          rels.push_back(z * z + psi * z);
          rels.push_back((g + 1) * (psi * psi));
          rels.push_back(z * z - psi * psi);
          break;
        default:
          rels.push_back(psi * z);
          rels.push_back(psi * psi);
          rels.push_back(z * z);
      }
      return Presentation(sig, std::move(rels));
    }
  }
  throw ParameterError("unknown intermediate ring");
}

Presentation weighted_projective_chow(const std::vector<Integer>& weights) {
  if (weights.empty()) throw ParameterError("weighted projective stack needs at least one weight");
  Integer product = 1;
  for (const auto& w : weights) {
    if (w <= 0) throw ParameterError("weights must be positive, got " + chowkit::to_string(w));
    product *= w;
  }
  auto sig = degree_one({"h"});
  return Presentation(sig, {product * var(sig, "h").pow(static_cast<unsigned>(weights.size()))});
}

namespace {

// Variables of a basis written in l1, l2 (into the l-basis ring), and back.
RingMap to_l(long g, Hg1Basis basis, const Presentation& src, const Presentation& l_ring) {
  auto sig = l_ring.signature_ptr();
  Polynomial l1 = var(sig, "l1"), l2 = var(sig, "l2");
  std::vector<Polynomial> images;
  switch (basis) {
    case Hg1Basis::kTEven: images = {(g / 2 + 1) * l1 + l2, (g / 2) * l1 + l2}; break;
    case Hg1Basis::kTauOdd: images = {((g + 1) / 2) * l1 + l2, l1}; break;
    case Hg1Basis::kGeometric: images = {l1 + l2, l2}; break;
    case Hg1Basis::kL: images = {l1, l2}; break;
  }
  return RingMap(src.signature_ptr(), l_ring, std::move(images));
}

RingMap from_l(long g, Hg1Basis basis, const Presentation& l_ring, const Presentation& dst) {
  auto sig = dst.signature_ptr();
  std::vector<Polynomial> images;
  switch (basis) {
    case Hg1Basis::kTEven: {
      Polynomial t0 = var(sig, "t0"), t1 = var(sig, "t1");
      images = {t0 - t1, (g / 2 + 1) * t1 - (g / 2) * t0};
      break;
    }
    case Hg1Basis::kTauOdd: {
      Polynomial tau = var(sig, "tau"), rho = var(sig, "rho");
      images = {rho, tau - ((g + 1) / 2) * rho};
      break;
    }
    case Hg1Basis::kGeometric: {
      Polynomial psi = var(sig, "psi1"), w = var(sig, "W1");
      images = {psi - w, w};
      break;
    }
    case Hg1Basis::kL: images = {var(sig, "l1"), var(sig, "l2")}; break;
  }
  return RingMap(l_ring.signature_ptr(), dst, std::move(images));
}

}  // namespace

RingMap hg1_dictionary(long g, Hg1Basis from, Hg1Basis to) {
  Presentation src = build_chow_Hg1(g, from), dst = build_chow_Hg1(g, to), l_ring = build_chow_Hg1(g, Hg1Basis::kL);
  return algebra::compose(from_l(g, to, l_ring, dst), to_l(g, from, src, l_ring));
}

RingMap hg2far_dictionary(long g, Hg2FarBasis from, Hg2FarBasis to) {
  Presentation src = build_chow_Hg2far(g, from), dst = build_chow_Hg2far(g, to);
  if (from == to) return RingMap::identity(src);
  auto sig = dst.signature_ptr();
  if (from == Hg2FarBasis::kGeometric) {
    Polynomial l1 = var(sig, "l1"), l2 = var(sig, "l2");
    return RingMap(src.signature_ptr(), dst, {l1 + l2, l2});
  }
  Polynomial psi = var(sig, "psi1"), w = var(sig, "W1");
  return RingMap(src.signature_ptr(), dst, {psi - w, w});
}

MarkedClasses::MarkedClasses(const Presentation& pres) : sig_(pres.signature_ptr()), n_(0) {
  if (!sig_->index_of("W1") || !sig_->index_of("Z23"))
    throw ParameterError("presentation does not carry the W1, Z1j, Z23 generators");
  n_ = 1;
  while (sig_->index_of(z_name(1, n_ + 1))) ++n_;
  if (n_ < 3) throw ParameterError("presentation does not carry the W1, Z1j, Z23 generators");
}

Polynomial MarkedClasses::W() const { return var(sig_, "W1"); }

Polynomial MarkedClasses::Z(long i, long j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) throw ParameterError("no class Z" + std::to_string(i) + "," + std::to_string(j));
  if (i == 1) return var(sig_, z_name(1, j));
  if (i == 2 && j == 3) return var(sig_, "Z23");
  return Z(1, i) + Z(1, j) + Z(2, 3) - Z(1, 2) - Z(1, 3);
}

Polynomial MarkedClasses::psi1() const { return W() - Z(1, 2) - Z(1, 3) + Z(2, 3); }

Polynomial MarkedClasses::W2(long g) const { return W() - (g + 1) * (Z(1, 3) - Z(2, 3)); }

Polynomial MarkedClasses::constant(long k) const { return num(sig_, k); }

}  // namespace chowkit::corpus
