#include "chowkit/algebra/presentation.hpp"

#include <string>

#include "chowkit/error.hpp"

namespace chowkit::algebra {

Presentation::Presentation(SignaturePtr sig, std::vector<Polynomial> relations)
    : sig_(std::move(sig)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    require_same_signature(sig_, relations_[i].signature_ptr(), "relation " + std::to_string(i));
    Homogeneity h = relations_[i].homogeneity();
    if (!h.is_homogeneous()) {
      throw NotHomogeneous("relation " + std::to_string(i) + " is not homogeneous: " + to_string(relations_[i]));
    }
    if (h.degree() == std::size_t{0}) {
      throw NotHomogeneous("relation " + std::to_string(i) + " is a nonzero constant");
    }
    degrees_.push_back(h.degree());
  }
}

bool operator==(const Presentation& a, const Presentation& b) {
  return same_signature(a.sig_, b.sig_) && a.relations_ == b.relations_;
}

}  // namespace chowkit::algebra
