#pragma once

#include <string>
#include <vector>

namespace chowkit::format {

enum class ClaimStatus { kPass, kFail, kHypothesisDependent };

const char* to_string(ClaimStatus s);

struct ClaimReport {
  // Citation tag, e.g. "Thm-ChowHg2/order-Z12sq".
  std::string claim_id;
  // Parameter context, e.g. "g=2 n=3 b=15".
  std::string scope;
  ClaimStatus status = ClaimStatus::kPass;
  // The identity being checked, written as a formula.
  std::string anchor;
  // Summary of the witness or counterexample.
  std::string details;
  // Full witness, printed only in verbose output.
  std::vector<std::string> witness;
};

struct AggregateReport {
  std::vector<ClaimReport> claims;

  std::size_t count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::kFail) == 0; }
};

}  // namespace chowkit::format
