#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chowkit/corpus/builders.hpp"
#include "chowkit/format/report.hpp"
#include "chowkit/lattice/abelian_group.hpp"

namespace chowkit::corpus {

using format::ClaimReport;
using format::ClaimStatus;

// Hooks for negative controls. Each builder result passes through
// `presentation` tagged with its family name ("Hg1/geometric", "Hgn", "Hgn-far",
// "Hg2far/l-basis", ...) and each dictionary through `dictionary`
// ("Hg1/l-basis->geometric", ...).
struct FaultInjection {
  std::function<Presentation(const std::string& family, const Presentation&)> presentation;
  std::function<RingMap(const std::string& dictionary, const RingMap&)> dictionary;

  Presentation apply(const std::string& family, Presentation p) const;
  RingMap apply_map(const std::string& name, RingMap m) const;
};

// Copy of pres without the first relation equal to `relation` (up to sign).
Presentation drop_relation(const Presentation& pres, const Polynomial& relation);
// Copy of pres with relation i replaced.
Presentation replace_relation(const Presentation& pres, std::size_t i, const Polynomial& relation);

struct PicardCheck {
  lattice::AbelianGroup computed;
  lattice::AbelianGroup expected;
  bool matches = false;
};

// Degree-1 piece against Z^n + Z/(8g+4) (g odd) or Z^n + Z/(4g+2) (g even).
PicardCheck picard_group(long g, long n, const FaultInjection& faults = {});
ClaimReport picard_claim(long g, long n, const FaultInjection& faults = {});

// "g=2 n=3 b=15"
std::string scope_of(const CorpusParams& p);

std::vector<ClaimReport> derived_relation_suite(const CorpusParams& p, const FaultInjection& faults = {});
std::vector<ClaimReport> structural_claim_suite(const CorpusParams& p, const FaultInjection& faults = {});
// Isomorphisms between the bases of H_{g,1} (n = 1) or of the far part of H_{g,2} (n = 2).
std::vector<ClaimReport> base_change_suite(long g, long n, std::size_t max_degree, const FaultInjection& faults = {});

}  // namespace chowkit::corpus
