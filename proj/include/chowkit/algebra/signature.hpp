#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowkit::algebra {

struct Variable {
  std::string name;
  std::size_t weight;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Letters, digits and underscores, starting with a letter.
bool is_identifier(std::string_view name);

class Signature {
 public:
  // Throws std::invalid_argument on bad names, duplicate names or zero weights.
  explicit Signature(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t weight(std::size_t i) const { return vars_[i].weight; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<Variable> vars);

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

// Throws SignatureMismatch unless same_signature(a, b).
void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view what);

}  // namespace chowkit::algebra
