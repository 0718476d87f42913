#pragma once

#include <optional>

#include "chowkit/corpus/claims.hpp"

namespace chowkit::corpus {

struct VerifyRanges {
  long g_min = 2, g_max = 2;
  // Clipped to [1, 2g+3] for each g.
  long n_min = 1, n_max = 3;
  std::size_t max_degree = 5;
  // When unset every admissible value is run.
  std::optional<Integer> b;
  std::optional<long> c;
};

// Picard, derived, structural and base-change claims over the ranges.
// Claims are ordered by g, n, hypothesis, then claim id.
format::AggregateReport verify_all(const VerifyRanges& ranges, const FaultInjection& faults = {});

}  // namespace chowkit::corpus
