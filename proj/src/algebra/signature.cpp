#include "chowkit/algebra/signature.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "chowkit/error.hpp"

namespace chowkit::algebra {

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Signature::Signature(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> names;
  for (const auto& v : vars_) {
    if (!is_identifier(v.name)) throw std::invalid_argument("invalid variable name '" + v.name + "'");
    if (v.weight == 0) throw std::invalid_argument("variable '" + v.name + "' has weight 0");
    if (!names.insert(v.name).second) throw std::invalid_argument("duplicate variable '" + v.name + "'");
  }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

SignaturePtr make_signature(std::vector<Variable> vars) {
  return std::make_shared<const Signature>(std::move(vars));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) { return a == b || *a == *b; }

void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view what) {
  if (!same_signature(a, b)) throw SignatureMismatch(std::string(what) + ": signatures differ");
}

}  // namespace chowkit::algebra
