#include "chowkit/format/serialize.hpp"

#include <json.hpp>

namespace chowkit::format {

using json = nlohmann::ordered_json;

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kHypothesisDependent:
      return "hypothesis-dependent";
  }
  return "unknown";
}

std::size_t AggregateReport::count(ClaimStatus s) const {
  std::size_t n = 0;
  for (const auto& c : claims)
    if (c.status == s) ++n;
  return n;
}

namespace {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return chowkit::to_string(x);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> basis_names(const algebra::GradedPieceReport& r) {
  std::vector<std::string> names;
  for (const auto& m : r.basis) names.push_back(algebra::to_string(m, *r.signature));
  return names;
}

std::vector<std::string> factor_strings(const lattice::AbelianGroup& g) {
  std::vector<std::string> out;
  for (const auto& x : g.invariant_factors()) out.push_back(chowkit::to_string(x));
  return out;
}

json claim_json(const ClaimReport& c, Detail detail) {
  json j;
  j["claim_id"] = c.claim_id;
  j["scope"] = c.scope;
  j["status"] = to_string(c.status);
  j["anchor"] = c.anchor;
  j["details"] = c.details;
  if (detail == Detail::kFull) j["witness"] = c.witness;
  return j;
}

}  // namespace

std::string serialize(const algebra::Signature& sig) {
  std::vector<std::string> parts;
  for (const auto& v : sig.variables()) parts.push_back(v.name + ":" + std::to_string(v.weight));
  return join(parts, " ");
}

std::string serialize(const algebra::Presentation& pres) { return serialize(PresentationDocument{pres, {}}); }

std::string serialize(const PresentationDocument& doc) {
  std::string out = "vars: " + serialize(doc.presentation.signature()) + "\n";
  for (const auto& [k, v] : doc.metadata) out += k + ": " + v + "\n";
  for (const auto& r : doc.presentation.relations()) out += "rel: " + algebra::to_string(r) + "\n";
  return out;
}

std::string serialize(const algebra::RingMap& map) {
  std::string out = "source: " + serialize(map.source()) + "\n";
  out += "target: " + serialize(map.target().signature()) + "\n";
  for (std::size_t i = 0; i < map.images().size(); ++i)
    out += "img: " + map.source()[i].name + " = " + algebra::to_string(map.images()[i]) + "\n";
  return out;
}

std::string serialize(const algebra::GradedPieceReport& r, Detail detail) {
  std::string out = "degree: " + std::to_string(r.degree) + "\n";
  out += "basis: [" + join(basis_names(r), ", ") + "]\n";
  out += "free_rank: " + std::to_string(r.group.free_rank()) + "\n";
  out += "invariant_factors: [" + join(factor_strings(r.group), ", ") + "]\n";
  out += "group: " + r.group.to_string() + "\n";
  if (detail == Detail::kFull) {
    lattice::Matrix m = r.relation_matrix();
    out += "relation_matrix: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(chowkit::to_string(m(i, j)));
      out += "  [" + join(row, ", ") + "]\n";
    }
  }
  return out;
}

std::string to_json(const algebra::GradedPieceReport& r, Detail detail) {
  json j;
  j["degree"] = r.degree;
  j["basis"] = basis_names(r);
  j["free_rank"] = r.group.free_rank();
  json factors = json::array();
  for (const auto& x : r.group.invariant_factors()) factors.push_back(integer_json(x));
  j["invariant_factors"] = factors;
  j["group"] = r.group.to_string();
  if (detail == Detail::kFull) {
    lattice::Matrix m = r.relation_matrix();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
      rows.push_back(row);
    }
    j["relation_matrix"] = rows;
  }
  return j.dump(2) + "\n";
}

std::string serialize(const ClaimReport& c, Detail detail) {
  std::string out = "claim: " + c.claim_id + "\n";
  out += "scope: " + c.scope + "\n";
  out += "status: " + std::string(to_string(c.status)) + "\n";
  out += "anchor: " + c.anchor + "\n";
  out += "details: " + c.details + "\n";
  if (detail == Detail::kFull && !c.witness.empty()) {
    out += "witness:\n";
    for (const auto& w : c.witness) out += "  " + w + "\n";
  }
  return out;
}

std::string to_json(const ClaimReport& c, Detail detail) { return claim_json(c, detail).dump(2) + "\n"; }

std::string serialize(const AggregateReport& r, Detail detail) {
  std::string out;
  for (const auto& c : r.claims) {
    out += "[" + std::string(to_string(c.status)) + "] ";
    if (!c.scope.empty()) out += c.scope + " ";
    out += c.claim_id + ": " + c.anchor + " | " + c.details + "\n";
    if (detail == Detail::kFull)
      for (const auto& w : c.witness) out += "    " + w + "\n";
  }
  out += "summary: " + std::to_string(r.claims.size()) + " claims, " + std::to_string(r.count(ClaimStatus::kPass)) +
         " pass, " + std::to_string(r.count(ClaimStatus::kFail)) + " fail, " +
         std::to_string(r.count(ClaimStatus::kHypothesisDependent)) + " hypothesis-dependent\n";
  return out;
}

std::string to_json(const AggregateReport& r, Detail detail) {
  json j;
  j["summary"] = {{"claims", r.claims.size()},
                  {"pass", r.count(ClaimStatus::kPass)},
                  {"fail", r.count(ClaimStatus::kFail)},
                  {"hypothesis_dependent", r.count(ClaimStatus::kHypothesisDependent)}};
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c, detail));
  j["claims"] = claims;
  return j.dump(2) + "\n";
}

std::string format_witness(const algebra::Presentation& pres, const algebra::WitnessTerm& w) {
  std::string out = chowkit::to_string(w.coefficient);
  if (!w.multiplier.is_one()) out += " * " + algebra::to_string(w.multiplier, pres.signature());
  out += " * (" + algebra::to_string(pres.relations().at(w.relation)) + ")";
  return out;
}

}  // namespace chowkit::format
