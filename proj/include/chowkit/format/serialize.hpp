#pragma once

#include <string>

#include "chowkit/algebra/graded_ring.hpp"
#include "chowkit/algebra/ring_map.hpp"
#include "chowkit/format/parse.hpp"
#include "chowkit/format/report.hpp"

namespace chowkit::format {

enum class Detail { kSummary, kFull };

// Canonical .gpres / .gmap text; parse(serialize(x)) == x.
std::string serialize(const algebra::Presentation& pres);
std::string serialize(const PresentationDocument& doc);
std::string serialize(const algebra::RingMap& map);
std::string serialize(const algebra::Signature& sig);

// Human-readable reports.
std::string serialize(const algebra::GradedPieceReport& report, Detail detail = Detail::kSummary);
std::string serialize(const ClaimReport& claim, Detail detail = Detail::kSummary);
std::string serialize(const AggregateReport& report, Detail detail = Detail::kSummary);

// The same content as a JSON document.
std::string to_json(const algebra::GradedPieceReport& report, Detail detail = Detail::kSummary);
std::string to_json(const ClaimReport& claim, Detail detail = Detail::kSummary);
std::string to_json(const AggregateReport& report, Detail detail = Detail::kSummary);

std::string format_witness(const algebra::Presentation& pres, const algebra::WitnessTerm& w);

}  // namespace chowkit::format
