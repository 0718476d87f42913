#include "chowkit/corpus/claims.hpp"

#include <algorithm>
#include <set>

#include "chowkit/format/serialize.hpp"

namespace chowkit::corpus {

using algebra::GradedRing;
using algebra::MembershipResult;
using lattice::AbelianGroup;

Presentation FaultInjection::apply(const std::string& family, Presentation p) const {
  return presentation ? presentation(family, p) : p;
}

RingMap FaultInjection::apply_map(const std::string& name, RingMap m) const { return dictionary ? dictionary(name, m) : m; }

Presentation drop_relation(const Presentation& pres, const Polynomial& relation) {
  auto rels = pres.relations();
  for (auto it = rels.begin(); it != rels.end(); ++it) {
    if (*it == relation || *it == -relation) {
      rels.erase(it);
      return Presentation(pres.signature_ptr(), std::move(rels));
    }
  }
  throw std::invalid_argument("relation " + algebra::to_string(relation) + " is not in the presentation");
}

Presentation replace_relation(const Presentation& pres, std::size_t i, const Polynomial& relation) {
  auto rels = pres.relations();
  rels.at(i) = relation;
  return Presentation(pres.signature_ptr(), std::move(rels));
}

std::string scope_of(const CorpusParams& p) {
  std::string s = "g=" + std::to_string(p.g) + " n=" + std::to_string(p.n);
  if (p.n >= 3 && p.b) s += " b=" + chowkit::to_string(*p.b);
  if (p.c) s += " c=" + std::to_string(*p.c);
  return s;
}

namespace {

struct Instance {
  std::string label;
  Polynomial p;
};

ClaimReport make_claim(std::string id, std::string scope, std::string anchor) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.scope = std::move(scope);
  r.anchor = std::move(anchor);
  return r;
}

std::string join_witness(const Presentation& pres, const MembershipResult& m) {
  if (m.witness.empty()) return "0";
  std::string out;
  for (const auto& w : m.witness) out += (out.empty() ? "" : " + ") + format::format_witness(pres, w);
  return out;
}

ClaimReport membership_family(const GradedRing& ring, std::string id, const std::string& scope, std::string anchor,
                              const std::vector<Instance>& instances) {
  ClaimReport r = make_claim(std::move(id), scope, std::move(anchor));
  std::set<std::size_t> degrees;
  std::size_t terms = 0;
  for (const auto& inst : instances) {
    std::size_t d = inst.p.homogeneity().degree().value_or(0);
    degrees.insert(d);
    MembershipResult m = ring.is_member(inst.p);
    if (!m.member) {
      r.status = ClaimStatus::kFail;
      r.details = "counterexample in degree " + std::to_string(d) + ": " + inst.label + ", " +
                  algebra::to_string(inst.p) + " is not in the ideal";
      r.witness.push_back(inst.label + ": " + algebra::to_string(inst.p) + " not a member");
      return r;
    }
    terms += m.witness.size();
    r.witness.push_back(inst.label + ": " + algebra::to_string(inst.p) + " = " + join_witness(ring.presentation(), m));
  }
  std::string ds;
  for (auto d : degrees) ds += (ds.empty() ? "" : ",") + std::to_string(d);
  r.details = std::to_string(instances.size()) + (instances.size() == 1 ? " instance" : " instances") +
              " in degree " + ds + " verified, " + std::to_string(terms) + " witness terms";
  return r;
}

Presentation with_relations(const Presentation& pres, const std::vector<Polynomial>& extra) {
  auto rels = pres.relations();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(pres.signature_ptr(), std::move(rels));
}

ClaimReport iso_claim(std::string id, const std::string& scope, std::string anchor, const RingMap& f,
                      const RingMap& f_inv, const Presentation& a, const Presentation& b, std::size_t max_degree) {
  ClaimReport r = make_claim(std::move(id), scope, std::move(anchor));
  algebra::IsoCheck iso = algebra::check_iso_up_to(f, f_inv, a, b, max_degree);
  for (const auto& d : iso.degrees)
    r.witness.push_back("degree " + std::to_string(d.degree) + ": " + d.group_a.to_string() + " = " +
                        d.group_b.to_string());
  if (!iso.isomorphic) {
    r.status = ClaimStatus::kFail;
    r.details = iso.failure;
    return r;
  }
  r.details = "isomorphic through degree " + std::to_string(max_degree);
  return r;
}

Polynomial v(const Presentation& pres, std::string_view name) { return Polynomial::variable(pres.signature_ptr(), name); }

AbelianGroup expected_picard(long g, long n) {
  return AbelianGroup(static_cast<std::size_t>(n), {Integer(g % 2 == 1 ? 8 * g + 4 : 4 * g + 2)});
}

Presentation hgn_ring(const CorpusParams& p, const FaultInjection& faults) {
  return faults.apply("Hgn", build_chow_Hgn(p.g, p.n, p.b, p.c));
}

std::string label_z(long i, long j) { return "Z" + std::to_string(i) + "," + std::to_string(j); }

void sort_claims(std::vector<ClaimReport>& claims) {
  std::stable_sort(claims.begin(), claims.end(),
                   [](const ClaimReport& a, const ClaimReport& b) { return a.claim_id < b.claim_id; });
}

std::vector<ClaimReport> derived_n2(const CorpusParams& p, const FaultInjection& faults) {
  const long g = p.g;
  const std::string scope = scope_of(p);
  Presentation pres = hgn_ring(p, faults);
  GradedRing ring(pres);
  Polynomial psi = v(pres, "psi1"), w = v(pres, "W1"), z = v(pres, "Z12");
  // second-point classes through the degree-1 identities
  Polynomial psi2 = g * psi + (g - 1) * z - (g - 1) * w;
  Polynomial w2 = (g + 1) * psi + (g + 1) * z - g * w;

  std::vector<ClaimReport> out;
  out.push_back(membership_family(ring, "Cor-generators/degree1-relation", scope,
                                  "(4g+2)(g+1)psi1 = (4g+2)(g-1)W1",
                                  {{"degree 1", Integer(4 * g + 2) * (g + 1) * psi - Integer(4 * g + 2) * (g - 1) * w}}));
  out.push_back(membership_family(ring, "Lem-ortogonality/empty-intersections", scope, "Z12*W1 = 0",
                                  {{"Z12*W1", z * w}}));
  out.push_back(membership_family(
      ring, "Lem-longrel23/n2-form", scope, "(2g+1)(g+1)psi1^2 + (2g+1)(3g-1)W1^2 - (2g+1)(g+1)Z12^2 = 0",
      {{"long relation", ((2 * g + 1) * (g + 1)) * (psi * psi) + ((2 * g + 1) * (3 * g - 1)) * (w * w) -
                             ((2 * g + 1) * (g + 1)) * (z * z)}}));
  out.push_back(membership_family(ring, "Lem-psiZ23/Z12", scope, "Z12^2 = -Z12*psi1 = -Z12*psi2",
                                  {{"psi1", z * z + z * psi}, {"psi2", z * z + z * psi2}}));
  out.push_back(membership_family(ring, "Lem-W12+W1psi1/n2", scope, "W1^2 = -W1*psi1", {{"W1", w * w + w * psi}}));
  out.push_back(membership_family(ring, "Lem-gW1+W2/degree1", scope, "g*W1 + W2 = (g+1)psi1 + (g+1)Z12",
                                  {{"W2", g * w + w2 - (g + 1) * psi - (g + 1) * z}}));
  out.push_back(membership_family(ring, "Lem-psi2/degree1", scope,
                                  "(g-1)(W1 - W2) = (g+1)(psi1 - psi2), W1 + W2 = psi1 + psi2 + 2Z12",
                                  {{"difference", (g - 1) * (w - w2) - (g + 1) * (psi - psi2)},
                                   {"sum", w + w2 - psi - psi2 - 2 * z}}));
  out.push_back(membership_family(ring, "Lem-psi2/W2-square", scope, "W2^2 = -W2*psi2", {{"W2", w2 * w2 + w2 * psi2}}));

  Presentation hg1 = faults.apply("Hg1/geometric", build_chow_Hg1(g, Hg1Basis::kGeometric));
  GradedRing ring1(hg1);
  Polynomial psi_1 = v(hg1, "psi1"), w_1 = v(hg1, "W1");
  out.push_back(membership_family(ring1, "Lem-W12+W1psi1/n1", "g=" + std::to_string(g) + " n=1", "W1^2 = -W1*psi1",
                                  {{"W1", w_1 * w_1 + w_1 * psi_1}}));
  return out;
}

std::vector<ClaimReport> derived_far(const CorpusParams& p, const FaultInjection& faults) {
  const long g = p.g, n = p.n;
  const std::string scope = scope_of(p);
  Presentation pres = hgn_ring(p, faults);
  GradedRing ring(pres);
  MarkedClasses k(pres);
  Polynomial w = k.W(), z23 = k.Z(2, 3), psi = k.psi1();
  auto z = [&](long i, long j) { return k.Z(i, j); };

  std::vector<ClaimReport> out;
  out.push_back(membership_family(
      ring, "Cor-generators/degree1-relation", scope, "(8g+4)W1 = (4g+2)(g+1)(Z12 + Z13 - Z23)",
      {{"degree 1", (8 * g + 4) * w - b_bound(g) * (z(1, 2) + z(1, 3) - z23)}}));

  {
    std::vector<Instance> inst;
    inst.push_back({"Z2,3 from the formula", z(1, 2) + z(1, 3) + z23 - z(1, 2) - z(1, 3) - z23});
    for (long i = 4; i <= n; ++i)
      inst.push_back({label_z(1, i) + " through Z3," + std::to_string(i), z(1, i) - (z(1, 2) - z23 + z(3, i))});
    for (long i = 2; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j)
        for (long l = j + 1; l <= n; ++l)
          inst.push_back({"Z" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l),
                          z(i, j) - z(i, l) - z(1, j) + z(1, l)});
    out.push_back(membership_family(ring, "Prop-relationsZ/expansion", scope,
                                    "Zij = Z1i + Z1j + Z23 - Z12 - Z13 for 1 != i < j", inst));
  }
  {
    std::vector<Instance> inst;
    for (long i = 2; i <= n; ++i) inst.push_back({label_z(1, i) + "*W1", z(1, i) * w});
    for (long i = 2; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j) inst.push_back({label_z(1, i) + "*" + label_z(1, j), z(1, i) * z(1, j)});
    for (long i = 2; i <= 3; ++i) inst.push_back({label_z(1, i) + "*Z2,3", z(1, i) * z23});
    out.push_back(membership_family(ring, "Lem-ortogonality/empty-intersections", scope,
                                    "Z1i*W1 = 0, Z1i*Z1j = 0, Z1i*Z23 = 0 for i = 2,3", inst));
  }
  if (n >= 4) {
    std::vector<Instance> inst;
    for (long i = 4; i <= n; ++i) {
      inst.push_back({label_z(1, i) + " square", z(1, i) * z(1, i) + z(1, i) * z23});
      inst.push_back({label_z(1, i) + " product", z(1, i) * z23 + z23 * z23});
    }
    out.push_back(membership_family(ring, "Lem-Z1isquarei>3/chain", scope, "Z1i^2 = -Z1i*Z23 = Z23^2 for i > 3", inst));
  }
  if (n >= 5) {
    std::vector<Instance> inst, permuted;
    for (long j = 2; j <= n; ++j) inst.push_back({label_z(1, j), z(1, j) * z(1, j) - z23 * z23});
    for (long i = 2; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j)
        if (!(i == 2 && j == 3)) permuted.push_back({label_z(i, j), z(i, j) * z(i, j) - z23 * z23});
    out.push_back(membership_family(ring, "Lem-Z1isquareall/chain", scope, "Z12^2 = Z13^2 = Z1i^2 = Z23^2", inst));
    out.push_back(
        membership_family(ring, "Lem-Z1isquareall/permuted", scope, "Zij^2 = Z23^2 for all i != j", permuted));
  }
  out.push_back(membership_family(ring, "Cor-W1Z23/product", scope, "W1*Z23 = -(g+1)Z23^2",
                                  {{"W1*Z2,3", w * z23 + (g + 1) * (z23 * z23)}}));
  {
    std::vector<Instance> inst;
    for (long i = 1; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j) inst.push_back({label_z(i, j), b_bound(g) * (z(i, j) * z(i, j))});
    out.push_back(membership_family(ring, "Cor-Z23square/squares", scope, "(4g+2)(g+1)Zij^2 = 0", inst));
  }
  out.push_back(membership_family(ring, "Cor-Z23square/companions", scope, "(4g+2)Z23*W1 = 0, (8g+4)W1^2 = 0",
                                  {{"Z2,3*W1", (4 * g + 2) * (z23 * w)}, {"W1^2", (8 * g + 4) * (w * w)}}));
  out.push_back(membership_family(ring, "Prop-W1square/chain", scope, "2W1^2 = -W1*Z23 = (g+1)Z23^2",
                                  {{"first", 2 * (w * w) + w * z23}, {"second", 2 * (w * w) - (g + 1) * (z23 * z23)}}));
  {
    std::vector<Polynomial> squares;
    std::vector<std::string> labels;
    for (long i = 1; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j) {
        squares.push_back(z(i, j) * z(i, j));
        labels.push_back(label_z(i, j));
      }
    std::vector<Instance> inst;
    for (std::size_t a = 0; a < squares.size(); ++a)
      for (std::size_t e = a; e < squares.size(); ++e)
        inst.push_back({labels[a] + "+" + labels[e], ((2 * g + 1) * (g + 1)) * (squares[a] + squares[e])});
    out.push_back(membership_family(ring, "Lem-longrel23/pair-sums", scope,
                                    "(2g+1)(g+1)(Zij^2 + Zi'j'^2) = 0", inst));
  }
  out.push_back(membership_family(
      ring, "Lem-longrel23/n2-form", scope, "(2g+1)(g+1)psi1^2 + (2g+1)(3g-1)W1^2 - (2g+1)(g+1)Z12^2 = 0",
      {{"pulled back", ((2 * g + 1) * (g + 1)) * (psi * psi) + ((2 * g + 1) * (3 * g - 1)) * (w * w) -
                           ((2 * g + 1) * (g + 1)) * (z(1, 2) * z(1, 2))}}));
  {
    std::vector<Instance> inst;
    for (long j = 2; j <= n; ++j) inst.push_back({label_z(1, j), z(1, j) * z(1, j) + z(1, j) * psi});
    out.push_back(membership_family(ring, "Lem-psiZ23/Z1j", scope, "Z1j^2 = -Z1j*psi1", inst));
  }
  out.push_back(membership_family(ring, "Prop-W1psi1/W1square-proof", scope,
                                  "W1^2 = -W1*psi1, W1^2 = W1*psi1 + (g+1)Z23^2 with psi1 = W1 - Z12 - Z13 + Z23",
                                  {{"pulled back", w * w + w * psi}, {"expanded", w * w - w * psi - (g + 1) * (z23 * z23)}}));
  Polynomial w2 = k.W2(g);
  out.push_back(membership_family(ring, "Prop-W1W2integral/consistency", scope,
                                  "W1 - W2 = (g+1)(Z13 - Z23) agrees with g*W1 + W2 = (g+1)psi1 + (g+1)Z12",
                                  {{"degree 1", g * w + w2 - (g + 1) * psi - (g + 1) * z(1, 2)}}));
  out.push_back(membership_family(ring, "Prop-W1W2integral/W2-Z23", scope, "W2*Z23 = 0", {{"W2*Z2,3", w2 * z23}}));
  if (n >= 5) {
    out.push_back(membership_family(ring, "Cor-deg>=3/cubes", scope, "Z23^3 = W1*Z23^2 = W1^2*Z23 = 0",
                                    {{"Z2,3^3", z23.pow(3)}, {"W1*Z2,3^2", w * z23 * z23}, {"W1^2*Z2,3", w * w * z23}}));
  }
  if (n == 2 * g + 3 && static_cast<std::size_t>(2 * g + 2) <= p.max_degree) {
    out.push_back(membership_family(ring, "Rmk-ChowHg2g+3far/top-power", scope, "W1^(2g+2) = 0",
                                    {{"W1^" + std::to_string(2 * g + 2), w.pow(static_cast<unsigned>(2 * g + 2))}}));
  }
  return out;
}

std::string theorem_tag(long g, long n) {
  if (n == 3) return "Thm-ChowHg3";
  if (n == 4) return "Thm-ChowringHg4";
  if (n == 2 * g + 3) return "Thm-ChowHg2g+3";
  return "Thm-ChowHgn";
}

}  // namespace

PicardCheck picard_group(long g, long n, const FaultInjection& faults) {
  if (g < 2) throw ParameterError("genus must be at least 2, got " + std::to_string(g));
  if (n < 1 || n > 2 * g + 3)
    throw ParameterError("n must lie in [1, " + std::to_string(2 * g + 3) + "], got " + std::to_string(n));
  Presentation pres = n == 1 ? faults.apply("Hg1/geometric", build_chow_Hg1(g, Hg1Basis::kGeometric))
                             : faults.apply("Hgn", build_chow_Hgn(g, n, b_bound(g),
                                                                  n == 2 * g + 3 ? std::optional<long>(2 * g + 2)
                                                                                 : std::nullopt));
  PicardCheck out;
  out.computed = GradedRing(pres).group(1);
  out.expected = expected_picard(g, n);
  out.matches = out.computed == out.expected;
  return out;
}

ClaimReport picard_claim(long g, long n, const FaultInjection& faults) {
  PicardCheck pc = picard_group(g, n, faults);
  ClaimReport r = make_claim("Thm-Picard/degree1", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                             "CH^1 = Z^n + Z/(8g+4) for odd g, Z^n + Z/(4g+2) for even g");
  r.status = pc.matches ? ClaimStatus::kPass : ClaimStatus::kFail;
  r.details = "computed " + pc.computed.to_string() + ", expected " + pc.expected.to_string();
  return r;
}

std::vector<ClaimReport> derived_relation_suite(const CorpusParams& p, const FaultInjection& faults) {
  validate(p);
  if (p.n < 2) throw ParameterError("the derived suite needs n >= 2");
  auto out = p.n == 2 ? derived_n2(p, faults) : derived_far(p, faults);
  sort_claims(out);
  return out;
}

std::vector<ClaimReport> structural_claim_suite(const CorpusParams& p, const FaultInjection& faults) {
  validate(p);
  if (p.n < 2) throw ParameterError("the structural suite needs n >= 2");
  const long g = p.g, n = p.n;
  const std::size_t D = p.max_degree;
  const std::string scope = scope_of(p);
  Presentation pres = hgn_ring(p, faults);
  GradedRing ring(pres);
  std::vector<ClaimReport> out;

  if (n == 2) {
    Polynomial psi = v(pres, "psi1"), w = v(pres, "W1"), z = v(pres, "Z12");
    ClaimReport r = make_claim("Thm-ChowHg2/order-Z12^q", scope, "order of Z12^q is (4g+2)(g+1) for q >= 2");
    Integer expected = b_bound(g);
    r.details = "order " + chowkit::to_string(expected) + " for q = 2.." + std::to_string(D);
    for (std::size_t q = 2; q <= D; ++q) {
      lattice::Order o = ring.order(z.pow(static_cast<unsigned>(q)));
      r.witness.push_back("q=" + std::to_string(q) + ": " + o.to_string());
      if (!o.is_finite() || o.value() != expected) {
        r.status = ClaimStatus::kFail;
        r.details = "q=" + std::to_string(q) + ": order " + o.to_string() + ", expected " + chowkit::to_string(expected);
        break;
      }
    }
    out.push_back(std::move(r));

    Presentation open = with_relations(pres, {w});
    Presentation target = build_intermediate(g, 2, Intermediate::kHOpen);
    RingMap f(open.signature_ptr(), target, {v(target, "psi1"), Polynomial(target.signature_ptr()), v(target, "Z12")});
    RingMap f_inv(target.signature_ptr(), open, {v(open, "psi1"), v(open, "Z12")});
    out.push_back(iso_claim("Prop-ChowHg2minusW1/open-part", scope, "CH(H_{g,2} - W1) = Z[psi1,Z12]/(...)", f, f_inv,
                            open, target, D));

    Presentation far_part = with_relations(pres, {z});
    Presentation far = build_chow_Hg2far(g, Hg2FarBasis::kGeometric);
    RingMap h(far_part.signature_ptr(), far, {v(far, "psi1"), v(far, "W1"), Polynomial(far.signature_ptr())});
    RingMap h_inv(far.signature_ptr(), far_part, {v(far_part, "psi1"), v(far_part, "W1")});
    out.push_back(iso_claim("Cor-ChowringHg2far/far-part", scope, "CH(H_{g,2})/(Z12) = CH(H_{g,2}^far)", h, h_inv,
                            far_part, far, D));
    sort_claims(out);
    return out;
  }

  MarkedClasses k(pres);
  Polynomial w = k.W(), z23 = k.Z(2, 3);

  // far part: kill every Z generator
  std::vector<Polynomial> zs;
  for (long j = 2; j <= n; ++j) zs.push_back(k.Z(1, j));
  zs.push_back(z23);
  Presentation far_part = with_relations(pres, zs);
  Presentation far = faults.apply("Hgn-far", build_chow_Hgn_far(g, n, p.c));
  {
    std::vector<Polynomial> images{v(far, "W1")};
    for (std::size_t i = 0; i < zs.size(); ++i) images.push_back(Polynomial(far.signature_ptr()));
    RingMap f(far_part.signature_ptr(), far, images);
    RingMap f_inv(far.signature_ptr(), far_part, {v(far_part, "W1")});
    out.push_back(iso_claim("Prop-ChowringHgnfar/far-part", scope, "CH(H_{g,n})/(Z1j, Z23) = CH(H_{g,n}^far)", f,
                            f_inv, far_part, far, D));
  }
  if (n <= 2 * g + 2) {
    GradedRing far_ring(far);
    Polynomial fw = v(far, "W1");
    ClaimReport r = make_claim("Prop-ChowringHgnfar/pieces", scope,
                               "CH(H_{g,n}^far) = Z[W1]/((8g+4)W1, 2W1^2): order(W1) = 8g+4, order(W1^q) = 2");
    r.details = "degree 1: Z/" + std::to_string(8 * g + 4) + ", degrees 2.." + std::to_string(D) + ": Z/2";
    for (std::size_t q = 1; q <= D; ++q) {
      Integer want = q == 1 ? Integer(8 * g + 4) : Integer(2);
      lattice::Order o = far_ring.order(fw.pow(static_cast<unsigned>(q)));
      const AbelianGroup& grp = far_ring.group(q);
      r.witness.push_back("degree " + std::to_string(q) + ": " + grp.to_string() + ", order " + o.to_string());
      if (grp != AbelianGroup(0, {want}) || !o.is_finite() || o.value() != want) {
        r.status = ClaimStatus::kFail;
        r.details = "degree " + std::to_string(q) + ": " + grp.to_string() + ", order of W1^" + std::to_string(q) +
                    " is " + o.to_string() + ", expected " + chowkit::to_string(want);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  if (n >= 5) {
    ClaimReport r2 = make_claim("Cor-partialdeg2/generators", scope, "CH^2 is generated by W1^2 and Z23^2");
    bool ok = ring.is_generated_by({w * w, z23 * z23}, 2);
    r2.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
    r2.details = "CH^2 = " + ring.group(2).to_string() + (ok ? ", spanned" : ", not spanned");
    out.push_back(std::move(r2));

    ClaimReport r3 = make_claim("Cor-deg>=3/generators", scope, "CH^q is generated by W1^q for q >= 3");
    r3.details = "q = 3.." + std::to_string(D) + " spanned";
    for (std::size_t q = 3; q <= D; ++q) {
      bool spanned = ring.is_generated_by({w.pow(static_cast<unsigned>(q))}, q);
      r3.witness.push_back("q=" + std::to_string(q) + ": CH^q = " + ring.group(q).to_string());
      if (!spanned) {
        r3.status = ClaimStatus::kFail;
        r3.details = "q=" + std::to_string(q) + ": W1^q does not span " + ring.group(q).to_string();
        break;
      }
    }
    out.push_back(std::move(r3));

    ClaimReport r4 = make_claim("Cor-deg>=3/restriction", scope, "CH^q(H_{g,n}) = CH^q(H_{g,n}^far) for q >= 3");
    GradedRing far_ring(far);
    r4.details = "q = 3.." + std::to_string(D) + " agree";
    for (std::size_t q = 3; q <= D; ++q) {
      r4.witness.push_back("q=" + std::to_string(q) + ": " + ring.group(q).to_string() + " = " +
                           far_ring.group(q).to_string());
      if (ring.group(q) != far_ring.group(q)) {
        r4.status = ClaimStatus::kFail;
        r4.details = "q=" + std::to_string(q) + ": " + ring.group(q).to_string() + " vs " + far_ring.group(q).to_string();
        break;
      }
    }
    out.push_back(std::move(r4));

    // open part: kill W1 and Z12..Z1,n-1
    std::vector<Polynomial> killed{w};
    for (long j = 2; j < n; ++j) killed.push_back(k.Z(1, j));
    Presentation open = with_relations(pres, killed);
    Presentation target = build_intermediate(g, n, Intermediate::kHOpen);
    Polynomial tz = v(target, z_name(1, n)), tpsi = v(target, "psi1"), zero(target.signature_ptr());
    std::vector<Polynomial> images{zero};
    for (long j = 2; j < n; ++j) images.push_back(zero);
    images.push_back(tz);
    images.push_back(tpsi);
    RingMap f(open.signature_ptr(), target, images);
    RingMap f_inv(target.signature_ptr(), open, {v(open, "Z23"), v(open, z_name(1, n))});
    out.push_back(iso_claim("Prop-Chowringsintermediate/open-part", scope,
                            "CH(H_{g,n}^o) = Z[psi1,Z1n]/((4g+2)(g+1)psi1, psi1*Z1n, psi1^2, Z1n^2), psi1 = Z23", f,
                            f_inv, open, target, D));
  }

  ClaimReport hb = make_claim(theorem_tag(g, n) + "/CH2-under-b", scope, "CH^2 depends on the open b");
  hb.status = ClaimStatus::kHypothesisDependent;
  lattice::Order oz = ring.order(z23 * z23);
  hb.details = "CH^2 = " + ring.group(2).to_string() + ", order(Z23^2) = " + oz.to_string();
  out.push_back(std::move(hb));
  if (n == 2 * g + 3) {
    ClaimReport hc = make_claim(theorem_tag(g, n) + "/CHq-under-c", scope, "CH^q for q >= 2 depends on the open c");
    hc.status = ClaimStatus::kHypothesisDependent;
    std::string ds;
    for (std::size_t q = 2; q <= D; ++q) {
      hc.witness.push_back("q=" + std::to_string(q) + ": " + ring.group(q).to_string());
      ds += (ds.empty() ? "" : ", ") + ("CH^" + std::to_string(q) + " = " + ring.group(q).to_string());
    }
    hc.details = ds;
    out.push_back(std::move(hc));
  }
  sort_claims(out);
  return out;
}

std::vector<ClaimReport> base_change_suite(long g, long n, std::size_t max_degree, const FaultInjection& faults) {
  std::vector<ClaimReport> out;
  const std::string scope = "g=" + std::to_string(g) + " n=" + std::to_string(n);
  if (n == 1) {
    auto bases = hg1_bases(g);
    for (std::size_t a = 0; a < bases.size(); ++a)
      for (std::size_t e = a + 1; e < bases.size(); ++e) {
        std::string fwd = to_string(bases[a]) + "->" + to_string(bases[e]);
        std::string bwd = to_string(bases[e]) + "->" + to_string(bases[a]);
        Presentation pa = faults.apply("Hg1/" + to_string(bases[a]), build_chow_Hg1(g, bases[a]));
        Presentation pb = faults.apply("Hg1/" + to_string(bases[e]), build_chow_Hg1(g, bases[e]));
        RingMap f = faults.apply_map("Hg1/" + fwd, hg1_dictionary(g, bases[a], bases[e]));
        RingMap f_inv = faults.apply_map("Hg1/" + bwd, hg1_dictionary(g, bases[e], bases[a]));
        out.push_back(iso_claim("Cor-newbase/" + fwd, scope, "W1 = l2, psi1 = l1 + l2 and the t/tau changes of basis",
                                RingMap(pa.signature_ptr(), pb, f.images()), RingMap(pb.signature_ptr(), pa, f_inv.images()),
                                pa, pb, max_degree));
      }
  } else if (n == 2) {
    Presentation pl = faults.apply("Hg2far/l-basis", build_chow_Hg2far(g, Hg2FarBasis::kL));
    Presentation pg = faults.apply("Hg2far/geometric", build_chow_Hg2far(g, Hg2FarBasis::kGeometric));
    RingMap f = faults.apply_map("Hg2far/geometric->l-basis",
                                 hg2far_dictionary(g, Hg2FarBasis::kGeometric, Hg2FarBasis::kL));
    RingMap f_inv = faults.apply_map("Hg2far/l-basis->geometric",
                                     hg2far_dictionary(g, Hg2FarBasis::kL, Hg2FarBasis::kGeometric));
    out.push_back(iso_claim("Cor-ChowringHg2far/geometric->l-basis", scope, "psi1 = l1 + l2, W1 = l2",
                            RingMap(pg.signature_ptr(), pl, f.images()), RingMap(pl.signature_ptr(), pg, f_inv.images()),
                            pg, pl, max_degree));
  }
  sort_claims(out);
  return out;
}

}  // namespace chowkit::corpus
