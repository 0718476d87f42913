#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowkit/algebra/presentation.hpp"
#include "chowkit/algebra/ring_map.hpp"

namespace chowkit::format {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class ParseErrorKind { kLexical, kSyntax, kUnknownVariable, kNonHomogeneous, kDuplicateVariable };

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, Position pos, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  Position position() const { return pos_; }
  // Message without the "line:column: kind:" prefix.
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  Position pos_;
  std::string message_;
};

struct PresentationDocument {
  algebra::Presentation presentation;
  // In file order. Keys are [A-Za-z][A-Za-z0-9_-]* other than vars and rel.
  std::vector<std::pair<std::string, std::string>> metadata;

  friend bool operator==(const PresentationDocument&, const PresentationDocument&) = default;
};

// .gpres text:
//   vars: x:1 y:2
//   rel: x^2 - 3*y
//   key: value
// "#" starts a comment; blank lines are ignored.
PresentationDocument parse_document(std::string_view text);
algebra::Presentation parse_presentation(std::string_view text);
algebra::Polynomial parse_polynomial(std::string_view text, const algebra::SignaturePtr& sig);
// The part after "vars:", e.g. "x:1 y:2".
algebra::SignaturePtr parse_signature(std::string_view text);

// .gmap text:
//   source: t0:1 t1:1
//   target: l1:1 l2:1
//   img: t0 = 2*l1 + l2
//   img: t1 = l1 + l2
// The target line must match the target presentation's signature.
algebra::RingMap parse_ring_map(std::string_view text, const algebra::Presentation& target);

}  // namespace chowkit::format
