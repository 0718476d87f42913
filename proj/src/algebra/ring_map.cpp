#include "chowkit/algebra/ring_map.hpp"

#include <stdexcept>

#include "chowkit/error.hpp"

namespace chowkit::algebra {

RingMap::RingMap(SignaturePtr source, Presentation target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) {
    throw std::invalid_argument("ring map needs " + std::to_string(source_->size()) + " images, got " +
                                std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_signature(target_.signature_ptr(), images_[i].signature_ptr(), "ring map image");
    if (!images_[i].homogeneity().admits(source_->weight(i))) {
      throw DegreeMismatch("image of " + (*source_)[i].name + " is not homogeneous of degree " +
                           std::to_string(source_->weight(i)));
    }
  }
}

RingMap RingMap::identity(const Presentation& pres) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < pres.signature().size(); ++i)
    images.push_back(Polynomial::variable(pres.signature_ptr(), i));
  return RingMap(pres.signature_ptr(), pres, std::move(images));
}

Polynomial apply_map(const RingMap& m, const Polynomial& p) {
  require_same_signature(m.source_ptr(), p.signature_ptr(), "apply_map");
  const SignaturePtr& target = m.target().signature_ptr();
  // powers[i][e] = image_i^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(m.images().size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& list = powers[i];
    if (list.empty()) list.push_back(Polynomial::constant(target, 1));
    while (list.size() <= e) list.push_back(multiply(list.back(), m.images()[i]));
    return list[e];
  };
  std::vector<Polynomial::Term> terms;
  for (const auto& t : p.terms()) {
    Polynomial img = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] > 0) img = multiply(img, power(i, t.monomial[i]));
    terms.insert(terms.end(), img.terms().begin(), img.terms().end());
  }
  return Polynomial::from_terms(target, std::move(terms));
}

RingMap compose(const RingMap& f, const RingMap& g) {
  require_same_signature(g.target().signature_ptr(), f.source_ptr(), "compose");
  std::vector<Polynomial> images;
  for (const auto& img : g.images()) images.push_back(apply_map(f, img));
  return RingMap(g.source_ptr(), f.target(), std::move(images));
}

namespace {

MapCheck check_into(const RingMap& m, const Presentation& src, const GradedRing& target, std::size_t up_to_degree) {
  require_same_signature(src.signature_ptr(), m.source_ptr(), "check_map_defined");
  MapCheck result;
  result.max_degree = up_to_degree;
  for (std::size_t i = 0; i < src.relations().size(); ++i) {
    Polynomial image = apply_map(m, src.relations()[i]);
    MembershipResult r = target.is_member(image);
    bool ok = r.member;
    result.certificates.push_back(std::move(r));
    if (!ok) {
      result.defined = false;
      result.failed_relation = i;
      result.failed_image = image;
      break;
    }
  }
  return result;
}

}  // namespace

MapCheck check_map_defined(const RingMap& m, const Presentation& src, std::size_t up_to_degree) {
  return check_into(m, src, GradedRing(m.target()), up_to_degree);
}

IsoCheck check_iso_up_to(const RingMap& f, const RingMap& f_inv, const Presentation& a, const Presentation& b,
                         std::size_t max_degree) {
  require_same_signature(f.source_ptr(), a.signature_ptr(), "check_iso_up_to (f source)");
  require_same_signature(f.target().signature_ptr(), b.signature_ptr(), "check_iso_up_to (f target)");
  require_same_signature(f_inv.source_ptr(), b.signature_ptr(), "check_iso_up_to (inverse source)");
  require_same_signature(f_inv.target().signature_ptr(), a.signature_ptr(), "check_iso_up_to (inverse target)");

  GradedRing ra(a), rb(b);
  IsoCheck out;
  auto fail = [&](std::string why) {
    out.isomorphic = false;
    out.failure = std::move(why);
    return out;
  };

  MapCheck forward = check_into(f, a, rb, max_degree);
  if (!forward.defined) return fail("forward map sends relation " + std::to_string(*forward.failed_relation) +
                                    " to " + to_string(*forward.failed_image) + ", not in the target ideal");
  MapCheck backward = check_into(f_inv, b, ra, max_degree);
  if (!backward.defined) return fail("inverse map sends relation " + std::to_string(*backward.failed_relation) +
                                     " to " + to_string(*backward.failed_image) + ", not in the target ideal");

  for (std::size_t i = 0; i < a.signature().size(); ++i) {
    Polynomial x = Polynomial::variable(a.signature_ptr(), i);
    if (!ra.is_member(apply_map(f_inv, apply_map(f, x)) - x).member)
      return fail("inverse after forward does not fix " + a.signature()[i].name);
  }
  for (std::size_t i = 0; i < b.signature().size(); ++i) {
    Polynomial x = Polynomial::variable(b.signature_ptr(), i);
    if (!rb.is_member(apply_map(f, apply_map(f_inv, x)) - x).member)
      return fail("forward after inverse does not fix " + b.signature()[i].name);
  }
  for (std::size_t d = 0; d <= max_degree; ++d) {
    out.degrees.push_back({d, ra.group(d), rb.group(d)});
    if (ra.group(d) != rb.group(d)) {
      return fail("degree " + std::to_string(d) + " pieces differ: " + ra.group(d).to_string() + " vs " +
                  rb.group(d).to_string());
    }
  }
  return out;
}

}  // namespace chowkit::algebra
