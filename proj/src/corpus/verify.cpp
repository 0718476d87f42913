#include "chowkit/corpus/verify.hpp"

#include <algorithm>

namespace chowkit::corpus {

namespace {

void append(std::vector<ClaimReport>& out, std::vector<ClaimReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void flush(std::vector<ClaimReport>& out, std::vector<ClaimReport>& block) {
  std::stable_sort(block.begin(), block.end(), [](const ClaimReport& a, const ClaimReport& b) {
    return a.scope != b.scope ? a.scope < b.scope : a.claim_id < b.claim_id;
  });
  append(out, std::move(block));
  block.clear();
}

std::vector<CorpusParams> hypotheses(long g, long n, const VerifyRanges& r) {
  std::vector<std::optional<Integer>> bs{std::nullopt};
  if (n >= 3) {
    bs.clear();
    if (r.b) {
      bs.push_back(r.b);
    } else {
      for (const auto& b : admissible_b(g, n)) bs.push_back(b);
    }
  }
  std::vector<std::optional<long>> cs{std::nullopt};
  if (n == 2 * g + 3) {
    cs.clear();
    if (r.c) {
      cs.push_back(r.c);
    } else {
      for (long c : admissible_c(g)) cs.push_back(c);
    }
  }
  std::vector<CorpusParams> out;
  for (const auto& b : bs)
    for (const auto& c : cs) out.push_back({g, n, b, c, r.max_degree});
  return out;
}

}  // namespace

format::AggregateReport verify_all(const VerifyRanges& ranges, const FaultInjection& faults) {
  format::AggregateReport report;
  for (long g = ranges.g_min; g <= ranges.g_max; ++g) {
    long lo = std::max(ranges.n_min, 1L), hi = std::min(ranges.n_max, 2 * g + 3);
    for (long n = lo; n <= hi; ++n) {
      std::vector<ClaimReport> block{picard_claim(g, n, faults)};
      if (n <= 2) append(block, base_change_suite(g, n, ranges.max_degree, faults));
      flush(report.claims, block);
      if (n < 2) continue;
      for (const auto& p : hypotheses(g, n, ranges)) {
        validate(p);
        append(block, derived_relation_suite(p, faults));
        append(block, structural_claim_suite(p, faults));
        flush(report.claims, block);
      }
    }
  }
  return report;
}

}  // namespace chowkit::corpus
