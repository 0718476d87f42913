#include <random>

#include "chowkit/format/serialize.hpp"
#include "doctest.h"
#include "oracles/random_presentations.hpp"

using namespace chowkit;
using namespace chowkit::format;
using chowkit::algebra::Polynomial;

namespace {

ParseErrorKind error_kind(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return ParseErrorKind::kSyntax;
}

Position error_position(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no error for: " << text);
  return {};
}

}  // namespace

TEST_CASE("parse presentations") {
  auto p = parse_presentation("vars: t0:1 t1:1\nrel: 10*t0 + 10*t1");
  CHECK(p.signature().size() == 2);
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relation_degree(0) == std::size_t{1});

  auto free = parse_presentation("vars: x:1\n");
  CHECK(free.relations().empty());

  auto spaced = parse_presentation("  # header\n\nvars : x : 1   y:2 # weights\nrel:x^2-  3 * y\n\n");
  CHECK(algebra::to_string(spaced.relations()[0]) == "x^2 - 3*y");
}

TEST_CASE("parse polynomials") {
  auto sig = algebra::make_signature({{"x", 1}, {"y", 1}});
  CHECK(parse_polynomial("x^2 - 7*x*y + y^2", sig).terms().size() == 3);
  Polynomial neg = parse_polynomial("-x", sig);
  REQUIRE(neg.terms().size() == 1);
  CHECK(neg.terms()[0].coefficient == -1);
  CHECK(parse_polynomial("2*x*x", sig) == parse_polynomial("2*x^2", sig));
  CHECK(parse_polynomial("x - x", sig).is_zero());
  CHECK(parse_polynomial("0", sig).is_zero());
  CHECK(parse_polynomial("123456789012345678901234567890*y", sig).terms()[0].coefficient ==
        Integer("123456789012345678901234567890", 10));
  CHECK(parse_polynomial("x^0", sig) == Polynomial::constant(sig, 1));
}

TEST_CASE("grammar rejections") {
  auto sig = algebra::make_signature({{"x", 1}, {"y", 1}});
  for (const char* bad : {"2x", "x y", "x*2", "x + -y", "--x", "x^", "x^y", "", "+x", "x +", "2*", "x**y", "x*"}) {
    CHECK_THROWS_AS_MESSAGE(parse_polynomial(bad, sig), ParseError, bad);
  }
  CHECK(error_kind("vars: x:1\nrel: x $ y") == ParseErrorKind::kLexical);
  CHECK(error_kind("vars: x:1\nrel: x + z") == ParseErrorKind::kUnknownVariable);
  CHECK(error_kind("vars: x:1 y:2\nrel: x + y") == ParseErrorKind::kNonHomogeneous);
  CHECK(error_kind("vars: x:1 x:2") == ParseErrorKind::kDuplicateVariable);
  CHECK(error_kind("rel: x\nvars: x:1") == ParseErrorKind::kSyntax);
  CHECK(error_kind("") == ParseErrorKind::kSyntax);
  CHECK(error_kind("vars:") == ParseErrorKind::kSyntax);
  CHECK(error_kind("vars: x:0") == ParseErrorKind::kSyntax);
  CHECK(error_kind("vars: x:1\nvars: y:1") == ParseErrorKind::kSyntax);
  CHECK(error_kind("vars: x:1\nrel: 3") == ParseErrorKind::kNonHomogeneous);
  CHECK(error_kind("vars: x:1\nrel x") == ParseErrorKind::kSyntax);
}

TEST_CASE("error positions") {
  Position p = error_position("vars: x:1\nrel: x $ y");
  CHECK(p.line == 2);
  CHECK(p.column == 8);
  p = error_position("vars: x:1\n\nrel: x + zz");
  CHECK(p.line == 3);
  CHECK(p.column == 10);
  p = error_position("vars: x:1 y:2\nrel:   x + y");
  CHECK(p.line == 2);
  CHECK(p.column == 8);
  p = error_position("vars: x:1 y:1 x:3");
  CHECK(p.line == 1);
  CHECK(p.column == 15);
  try {
    parse_presentation("vars: x:1\nrel: x + z");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "2:10: unknown variable: 'z' is not declared");
  }
}

TEST_CASE("serialization is canonical and round-trips") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    PresentationDocument doc = oracle::random_document(rng);
    std::string text = serialize(doc);
    PresentationDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize(back) == text);
  }
  auto p = parse_presentation("vars: x:1");
  CHECK(serialize(p) == "vars: x:1\n");
  auto q = parse_presentation("vars: a:1 b:1\nrel: b*a + 2*a^2 - b^2\nrel: 5*b");
  CHECK(serialize(q) == "vars: a:1 b:1\nrel: 2*a^2 + a*b - b^2\nrel: 5*b\n");
}

TEST_CASE("ring map files") {
  auto l = parse_presentation("vars: l1:1 l2:1\nrel: 30*l1 + 20*l2\nrel: 2*l2^2 + l1*l2");
  std::string text = "source: t0:1 t1:1\ntarget: l1:1 l2:1\nimg: t0 = 2*l1 + l2\nimg: t1 = l1 + l2\n";
  algebra::RingMap m = parse_ring_map(text, l);
  CHECK(serialize(m) == text);
  CHECK(serialize(parse_ring_map(serialize(m), l)) == text);
  for (const char* bad : {"source: t0:1\ntarget: l1:1 l2:1\n",
                          "source: t0:1\ntarget: l1:1\nimg: t0 = l1\n",
                          "source: t0:1\ntarget: l1:1 l2:1\nimg: t0 = l1^2\n",
                          "source: t0:1\ntarget: l1:1 l2:1\nimg: t9 = l1\n",
                          "source: t0:1\ntarget: l1:1 l2:1\nimg: t0 = l1\nimg: t0 = l2\n",
                          "img: t0 = l1\n"}) {
    CHECK_THROWS_AS_MESSAGE(parse_ring_map(bad, l), ParseError, bad);
  }
}

TEST_CASE("report text") {
  auto p = parse_presentation("vars: l1:1 l2:1\nrel: 30*l1 + 20*l2\nrel: 2*l2^2 + l1*l2");
  auto r = algebra::graded_piece(p, 1);
  std::string text = serialize(r);
  CHECK(text.find("free_rank: 1") != std::string::npos);
  CHECK(text.find("invariant_factors: [10]") != std::string::npos);
  CHECK(text.find("group: ℤ ⊕ ℤ/10") != std::string::npos);
  CHECK(serialize(r, Detail::kFull).find("relation_matrix: 2x1") != std::string::npos);
  std::string json = to_json(r);
  CHECK(json.find("\"free_rank\": 1") != std::string::npos);
  CHECK(json.find("\"invariant_factors\": [\n    10\n  ]") != std::string::npos);

  ClaimReport c{"Thm-X/example", "g=2", ClaimStatus::kFail, "x = 0", "not in the ideal in degree 1", {"w"}};
  AggregateReport agg{{c}};
  CHECK(serialize(agg).find("[fail] g=2 Thm-X/example: x = 0") != std::string::npos);
  CHECK(serialize(agg).find("summary: 1 claims, 0 pass, 1 fail, 0 hypothesis-dependent") != std::string::npos);
  CHECK(to_json(agg) == to_json(agg));
  CHECK(to_json(agg, Detail::kFull).find("\"witness\"") != std::string::npos);
  CHECK(to_json(agg).find("\"witness\"") == std::string::npos);
}

TEST_CASE("fuzzed input yields positioned errors") {
  std::mt19937_64 rng(31337);
  const std::string alphabet = "vars:rel xyz0123456789+-*^#\n\t $()=:_ab";
  std::size_t errors = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    if (trial % 3 == 0) {
      text = "vars: x:1 y:2 z:1\nrel: ";
    }
    std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    if (trial % 5 == 0) text += std::string(1, static_cast<char>(rng() % 256));
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      ++errors;
      CHECK(e.position().line >= 1);
      CHECK(e.position().column >= 1);
    }
  }
  CHECK(errors > 1000);
}
