#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chowkit/algebra/ring_map.hpp"
#include "chowkit/error.hpp"

namespace chowkit::corpus {

using algebra::Polynomial;
using algebra::Presentation;
using algebra::RingMap;

enum class Hg1Basis { kTEven, kTauOdd, kGeometric, kL };
enum class Hg2FarBasis { kL, kGeometric };
enum class Intermediate { kZ12OfHg2, kHOpen, kZSubstack, kWeierstrass };

// "t-basis-even", "tau-basis-odd", "geometric", "l-basis"
std::string to_string(Hg1Basis b);
std::string to_string(Hg2FarBasis b);
// "Z12-of-Hg2", "H-open-n", "Z-substack-n", "W-weierstrass"
std::string to_string(Intermediate w);
// Throw ParameterError on unknown names.
Hg1Basis parse_hg1_basis(std::string_view s);
Hg2FarBasis parse_hg2far_basis(std::string_view s);
Intermediate parse_intermediate(std::string_view s);

// The H_{g,1} bases that exist for this parity of g.
std::vector<Hg1Basis> hg1_bases(long g);

struct CorpusParams {
  long g = 2;
  long n = 1;
  std::optional<Integer> b;
  std::optional<long> c;
  std::size_t max_degree = 6;
};

// Throws ParameterError. b is required for 3 <= n, c iff n = 2g+3.
void validate(const CorpusParams& p);

// Every b allowed for this n (empty for n < 3), ascending.
std::vector<Integer> admissible_b(long g, long n);
// 2..2g+2
std::vector<long> admissible_c(long g);

// (4g+2)(g+1)
Integer b_bound(long g);

// Variable names used for the marked-point classes.
std::string z_name(long i, long j);

Presentation build_chow_Hg1(long g, Hg1Basis basis);
Presentation build_chow_Hg2far(long g, Hg2FarBasis basis);
// For n = 2 the hypotheses are ignored.
Presentation build_chow_Hgn(long g, long n, const std::optional<Integer>& b, const std::optional<long>& c);
// c is optional; when n = 2g+3 the relation W1^(2g+2) is always present.
Presentation build_chow_Hgn_far(long g, long n, const std::optional<long>& c = std::nullopt);
Presentation build_intermediate(long g, long n, Intermediate which);
Presentation weighted_projective_chow(const std::vector<Integer>& weights);

// Image of each variable of `from` in the presentation of `to`.
RingMap hg1_dictionary(long g, Hg1Basis from, Hg1Basis to);
RingMap hg2far_dictionary(long g, Hg2FarBasis from, Hg2FarBasis to);

// Helpers for the n >= 3 rings, where Z_ij for 1 != i < j is not a generator.
class MarkedClasses {
 public:
  explicit MarkedClasses(const Presentation& pres);

  long n() const { return n_; }
  Polynomial W() const;
  // Any i != j; the non-generators are expanded in the generators.
  Polynomial Z(long i, long j) const;
  // W1 - Z12 - Z13 + Z23
  Polynomial psi1() const;
  // W1 - (g+1)(Z13 - Z23)
  Polynomial W2(long g) const;
  Polynomial constant(long k) const;

 private:
  algebra::SignaturePtr sig_;
  long n_;
};

}  // namespace chowkit::corpus
