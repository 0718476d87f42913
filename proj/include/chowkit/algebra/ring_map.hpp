#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowkit/algebra/graded_ring.hpp"

namespace chowkit::algebra {

// Degree-preserving homomorphism Z[source] -> target given by variable images.
class RingMap {
 public:
  // Throws SignatureMismatch, DegreeMismatch or std::invalid_argument.
  RingMap(SignaturePtr source, Presentation target, std::vector<Polynomial> images);
  static RingMap identity(const Presentation& pres);

  const SignaturePtr& source_ptr() const { return source_; }
  const Signature& source() const { return *source_; }
  const Presentation& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

 private:
  SignaturePtr source_;
  Presentation target_;
  std::vector<Polynomial> images_;
};

Polynomial apply_map(const RingMap& m, const Polynomial& p);

// (f o g)(x) = f(g(x)); g's target signature must be f's source.
RingMap compose(const RingMap& f, const RingMap& g);

struct MapCheck {
  bool defined = true;
  std::size_t max_degree = 0;
  // First relation whose image is not in the target ideal.
  std::optional<std::size_t> failed_relation;
  std::optional<Polynomial> failed_image;
  // One membership certificate per source relation checked.
  std::vector<MembershipResult> certificates;
};

MapCheck check_map_defined(const RingMap& m, const Presentation& src, std::size_t up_to_degree);

struct DegreeCertificate {
  std::size_t degree;
  lattice::AbelianGroup group_a;
  lattice::AbelianGroup group_b;
};

struct IsoCheck {
  bool isomorphic = true;
  std::string failure;  // empty on success
  std::vector<DegreeCertificate> degrees;
};

IsoCheck check_iso_up_to(const RingMap& f, const RingMap& f_inv, const Presentation& a, const Presentation& b,
                         std::size_t max_degree);

}  // namespace chowkit::algebra
