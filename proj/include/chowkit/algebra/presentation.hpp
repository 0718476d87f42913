#pragma once

#include <vector>

#include "chowkit/algebra/polynomial.hpp"

namespace chowkit::algebra {

// Z[vars] / (relations) with homogeneous relations. The zero polynomial is
// accepted as a relation and contributes nothing.
class Presentation {
 public:
  // Throws SignatureMismatch or NotHomogeneous (naming the relation index).
  Presentation(SignaturePtr sig, std::vector<Polynomial> relations);

  const SignaturePtr& signature_ptr() const { return sig_; }
  const Signature& signature() const { return *sig_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  // Zero relations report nullopt.
  std::optional<std::size_t> relation_degree(std::size_t i) const { return degrees_[i]; }

  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  SignaturePtr sig_;
  std::vector<Polynomial> relations_;
  std::vector<std::optional<std::size_t>> degrees_;
};

}  // namespace chowkit::algebra
