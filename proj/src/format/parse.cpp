#include "chowkit/format/parse.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>

#include "chowkit/error.hpp"

namespace chowkit::format {

using algebra::Monomial;
using algebra::Polynomial;
using algebra::Presentation;
using algebra::SignaturePtr;
using algebra::Variable;

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kLexical:
      return "lexical error";
    case ParseErrorKind::kSyntax:
      return "syntax error";
    case ParseErrorKind::kUnknownVariable:
      return "unknown variable";
    case ParseErrorKind::kNonHomogeneous:
      return "non-homogeneous";
    case ParseErrorKind::kDuplicateVariable:
      return "duplicate variable";
  }
  return "error";
}

ParseError::ParseError(ParseErrorKind kind, Position pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + format::to_string(kind) +
                         ": " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();
constexpr std::size_t kMaxWeight = 1u << 20;

struct Token {
  enum class Kind { kIdent, kNat, kPlus, kMinus, kStar, kCaret, kColon, kEquals, kEnd };
  Kind kind;
  std::string text;
  Position pos;
};

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Kind::kIdent:
      return "identifier";
    case Token::Kind::kNat:
      return "number";
    case Token::Kind::kPlus:
      return "'+'";
    case Token::Kind::kMinus:
      return "'-'";
    case Token::Kind::kStar:
      return "'*'";
    case Token::Kind::kCaret:
      return "'^'";
    case Token::Kind::kColon:
      return "':'";
    case Token::Kind::kEquals:
      return "'='";
    case Token::Kind::kEnd:
      return "end of input";
  }
  return "token";
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view text, Position start) {
  std::vector<Token> out;
  Position pos = start;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (is_space(c)) {
      advance();
      continue;
    }
    Token t{Token::Kind::kEnd, {}, pos};
    if (is_alpha(c)) {
      t.kind = Token::Kind::kIdent;
      while (i < text.size() && (is_alpha(text[i]) || is_digit(text[i]) || text[i] == '_')) {
        t.text += text[i];
        advance();
      }
    } else if (is_digit(c)) {
      t.kind = Token::Kind::kNat;
      while (i < text.size() && is_digit(text[i])) {
        t.text += text[i];
        advance();
      }
    } else {
      switch (c) {
        case '+':
          t.kind = Token::Kind::kPlus;
          break;
        case '-':
          t.kind = Token::Kind::kMinus;
          break;
        case '*':
          t.kind = Token::Kind::kStar;
          break;
        case '^':
          t.kind = Token::Kind::kCaret;
          break;
        case ':':
          t.kind = Token::Kind::kColon;
          break;
        case '=':
          t.kind = Token::Kind::kEquals;
          break;
        default: {
          std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                  ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                  : std::string("'") + c + "'";
          throw ParseError(ParseErrorKind::kLexical, pos, "unexpected character " + shown);
        }
      }
      t.text = std::string(1, c);
      advance();
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Kind::kEnd, {}, pos});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[i_]; }
  bool at(Token::Kind k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = tokens_[i_];
    if (i_ + 1 < tokens_.size()) ++i_;
    return t;
  }
  const Token& expect(Token::Kind k, const char* context) {
    if (!at(k)) {
      throw ParseError(ParseErrorKind::kSyntax, peek().pos,
                       std::string("expected ") + describe(k) + " " + context + ", found " + found());
    }
    return next();
  }
  std::string found() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::kEnd) return "end of input";
    return describe(t.kind) + std::string(t.kind == Token::Kind::kIdent || t.kind == Token::Kind::kNat
                                              ? " '" + t.text + "'"
                                              : "");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

std::uint64_t small_nat(const Token& t, std::uint64_t limit, const char* what) {
  std::string_view digits = t.text;
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  if (digits.size() > 18 || std::stoull(std::string(digits)) > limit) {
    throw ParseError(ParseErrorKind::kSyntax, t.pos, std::string(what) + " " + t.text + " is too large");
  }
  return std::stoull(std::string(digits));
}

Polynomial parse_poly(TokenStream& ts, const SignaturePtr& sig) {
  const std::size_t n = sig->size();
  std::vector<Polynomial::Term> terms;
  bool negative = false;
  if (ts.at(Token::Kind::kMinus)) {
    ts.next();
    negative = true;
  }
  for (;;) {
    Integer coefficient = 1;
    std::vector<std::uint64_t> exps(n, 0);
    bool need_factor = true;
    if (ts.at(Token::Kind::kNat)) {
      coefficient = Integer(ts.next().text, 10);
      if (ts.at(Token::Kind::kStar)) {
        ts.next();
      } else {
        need_factor = false;
      }
    } else if (!ts.at(Token::Kind::kIdent)) {
      throw ParseError(ParseErrorKind::kSyntax, ts.peek().pos, "expected a term, found " + ts.found());
    }
    while (need_factor) {
      const Token& id = ts.expect(Token::Kind::kIdent, "as a factor");
      auto idx = sig->index_of(id.text);
      if (!idx) throw ParseError(ParseErrorKind::kUnknownVariable, id.pos, "'" + id.text + "' is not declared");
      std::uint64_t e = 1;
      if (ts.at(Token::Kind::kCaret)) {
        ts.next();
        e = small_nat(ts.expect(Token::Kind::kNat, "after '^'"), kMaxExponent, "exponent");
      }
      exps[*idx] += e;
      if (exps[*idx] > kMaxExponent) throw ParseError(ParseErrorKind::kSyntax, id.pos, "exponent is too large");
      if (!ts.at(Token::Kind::kStar)) break;
      ts.next();
    }
    std::vector<std::uint32_t> e32(exps.begin(), exps.end());
    terms.push_back({Monomial(std::move(e32)), negative ? Integer(-coefficient) : coefficient});

    if (ts.at(Token::Kind::kPlus) || ts.at(Token::Kind::kMinus)) {
      negative = ts.next().kind == Token::Kind::kMinus;
      continue;
    }
    if (ts.at(Token::Kind::kEnd)) break;
    throw ParseError(ParseErrorKind::kSyntax, ts.peek().pos, "expected '+', '-' or end of line, found " + ts.found());
  }
  return Polynomial::from_terms(sig, std::move(terms));
}

SignaturePtr parse_vars(TokenStream& ts) {
  std::vector<Variable> vars;
  std::map<std::string, bool> names;
  do {
    const Token& id = ts.expect(Token::Kind::kIdent, "as a variable name");
    if (names.count(id.text)) {
      throw ParseError(ParseErrorKind::kDuplicateVariable, id.pos, "'" + id.text + "' is declared twice");
    }
    names[id.text] = true;
    ts.expect(Token::Kind::kColon, "after the variable name");
    const Token& w = ts.expect(Token::Kind::kNat, "as the weight");
    std::size_t weight = small_nat(w, kMaxWeight, "weight");
    if (weight == 0) throw ParseError(ParseErrorKind::kSyntax, w.pos, "weight must be positive");
    vars.push_back({id.text, weight});
  } while (!ts.at(Token::Kind::kEnd));
  return algebra::make_signature(std::move(vars));
}

struct Line {
  std::string key;
  Position key_pos;
  std::string_view rest;
  Position rest_pos;
};

// Splits into keyed lines, skipping blank and comment-only lines.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i < line.size()) {
      Line l;
      l.key_pos = {line_no, i + 1};
      while (i < line.size() && (is_alpha(line[i]) || is_digit(line[i]) || line[i] == '_' || line[i] == '-')) {
        l.key += line[i++];
      }
      if (l.key.empty()) {
        lex(line.substr(i), {line_no, i + 1});  // reports a lexical error if there is one
        throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "expected a line key such as 'vars:' or 'rel:'");
      }
      if (!is_alpha(l.key.front())) throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "line key must start with a letter");
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size() || line[i] != ':') {
        if (i < line.size()) lex(line.substr(i, 1), {line_no, i + 1});
        throw ParseError(ParseErrorKind::kSyntax, {line_no, i + 1}, "expected ':' after '" + l.key + "'");
      }
      ++i;
      l.rest = line.substr(i);
      l.rest_pos = {line_no, i + 1};
      out.push_back(std::move(l));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return std::string(s.substr(a, b - a));
}

Position end_of(std::string_view text, Position start) {
  for (char c : text) {
    if (c == '\n') {
      ++start.line;
      start.column = 1;
    } else {
      ++start.column;
    }
  }
  return start;
}

SignaturePtr vars_from(const Line& l) {
  TokenStream ts(lex(l.rest, l.rest_pos));
  return parse_vars(ts);
}

Polynomial relation_from(std::string_view text, Position pos, const SignaturePtr& sig) {
  TokenStream ts(lex(text, pos));
  Position first = ts.peek().pos;
  Polynomial p = parse_poly(ts, sig);
  algebra::Homogeneity h = p.homogeneity();
  if (!h.is_homogeneous()) {
    throw ParseError(ParseErrorKind::kNonHomogeneous, first, "relation mixes weighted degrees: " + to_string(p));
  }
  if (h.degree() == std::size_t{0}) {
    throw ParseError(ParseErrorKind::kNonHomogeneous, first, "relation is a nonzero constant (degree 0)");
  }
  return p;
}

}  // namespace

PresentationDocument parse_document(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::kSyntax, end_of(text, {1, 1}), "missing 'vars:' line");
  if (lines.front().key != "vars") {
    throw ParseError(ParseErrorKind::kSyntax, lines.front().key_pos, "the first line must be 'vars:'");
  }
  SignaturePtr sig = vars_from(lines.front());
  std::vector<Polynomial> relations;
  std::vector<std::pair<std::string, std::string>> metadata;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.key == "vars") throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "second 'vars:' line");
    if (l.key == "rel") {
      relations.push_back(relation_from(l.rest, l.rest_pos, sig));
    } else {
      metadata.emplace_back(l.key, trim(l.rest));
    }
  }
  return {Presentation(sig, std::move(relations)), std::move(metadata)};
}

Presentation parse_presentation(std::string_view text) { return parse_document(text).presentation; }

Polynomial parse_polynomial(std::string_view text, const SignaturePtr& sig) {
  TokenStream ts(lex(text, {1, 1}));
  return parse_poly(ts, sig);
}

SignaturePtr parse_signature(std::string_view text) {
  TokenStream ts(lex(text, {1, 1}));
  return parse_vars(ts);
}

algebra::RingMap parse_ring_map(std::string_view text, const Presentation& target) {
  std::vector<Line> lines = split_lines(text);
  SignaturePtr source;
  std::optional<Position> target_seen;
  std::vector<std::optional<Polynomial>> images;
  for (const Line& l : lines) {
    if (l.key == "source") {
      if (source) throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "second 'source:' line");
      source = vars_from(l);
      images.assign(source->size(), std::nullopt);
    } else if (l.key == "target") {
      if (target_seen) throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "second 'target:' line");
      SignaturePtr t = vars_from(l);
      if (!algebra::same_signature(t, target.signature_ptr())) {
        throw ParseError(ParseErrorKind::kSyntax, l.rest_pos, "target signature does not match the target presentation");
      }
      target_seen = l.key_pos;
    } else if (l.key == "img") {
      if (!source || !target_seen) {
        throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "'img:' before the 'source:' and 'target:' lines");
      }
      TokenStream ts(lex(l.rest, l.rest_pos));
      const Token& id = ts.expect(Token::Kind::kIdent, "as the source variable");
      auto idx = source->index_of(id.text);
      if (!idx) throw ParseError(ParseErrorKind::kUnknownVariable, id.pos, "'" + id.text + "' is not a source variable");
      if (images[*idx]) throw ParseError(ParseErrorKind::kDuplicateVariable, id.pos, "second image for '" + id.text + "'");
      ts.expect(Token::Kind::kEquals, "after the source variable");
      Position first = ts.peek().pos;
      Polynomial p = parse_poly(ts, target.signature_ptr());
      if (!p.homogeneity().admits(source->weight(*idx))) {
        throw ParseError(ParseErrorKind::kNonHomogeneous, first,
                         "image of '" + id.text + "' must be homogeneous of degree " +
                             std::to_string(source->weight(*idx)));
      }
      images[*idx] = std::move(p);
    } else {
      throw ParseError(ParseErrorKind::kSyntax, l.key_pos, "unexpected line key '" + l.key + "' in a map file");
    }
  }
  Position end = end_of(text, {1, 1});
  if (!source) throw ParseError(ParseErrorKind::kSyntax, end, "missing 'source:' line");
  if (!target_seen) throw ParseError(ParseErrorKind::kSyntax, end, "missing 'target:' line");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError(ParseErrorKind::kSyntax, end, "no image for '" + (*source)[i].name + "'");
    out.push_back(std::move(*images[i]));
  }
  return algebra::RingMap(source, target, std::move(out));
}

}  // namespace chowkit::format
