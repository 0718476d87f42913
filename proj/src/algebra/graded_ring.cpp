#include "chowkit/algebra/graded_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chowkit/error.hpp"

namespace chowkit::algebra {

lattice::Matrix GradedPieceReport::relation_matrix() const {
  lattice::Matrix m(basis.size(), relation_columns.size());
  for (std::size_t c = 0; c < relation_columns.size(); ++c)
    for (const auto& [r, x] : relation_columns[c]) m(r, c) = x;
  return m;
}

Polynomial expand_witness(const Presentation& pres, const std::vector<WitnessTerm>& witness) {
  std::vector<Polynomial::Term> terms;
  for (const auto& w : witness)
    for (const auto& t : pres.relations().at(w.relation).terms())
      terms.push_back({t.monomial * w.multiplier, t.coefficient * w.coefficient});
  return Polynomial::from_terms(pres.signature_ptr(), std::move(terms));
}

GradedRing::GradedRing(Presentation pres) : pres_(std::move(pres)) {}

const GradedRing::Degree& GradedRing::degree_data(std::size_t d) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(d);
  if (it != cache_.end()) return *it->second;

  auto data = std::make_unique<Degree>();
  const Signature& sig = pres_.signature();
  data->basis = monomial_basis(sig, d);
  for (std::size_t i = 0; i < data->basis.size(); ++i) data->index.emplace(data->basis[i], i);

  const auto& rels = pres_.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    auto rd = pres_.relation_degree(i);
    if (!rd || *rd > d) continue;
    for (const Monomial& m : monomial_basis(sig, d - *rd)) {
      lattice::SparseVector col;
      col.reserve(rels[i].terms().size());
      for (const auto& t : rels[i].terms()) col.emplace_back(data->index.at(t.monomial * m), t.coefficient);
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      data->columns.push_back(std::move(col));
      data->column_source.emplace_back(i, m);
    }
  }
  data->lattice = std::make_unique<lattice::LatticeBasis>(data->basis.size(), data->columns);
  return *cache_.emplace(d, std::move(data)).first->second;
}

std::size_t GradedRing::homogeneous_degree_of(const Polynomial& p, const char* what) const {
  require_same_signature(pres_.signature_ptr(), p.signature_ptr(), what);
  Homogeneity h = p.homogeneity();
  if (!h.is_homogeneous()) throw NotHomogeneous(std::string(what) + ": polynomial is not homogeneous: " + to_string(p));
  return h.degree().value_or(0);
}

lattice::Vector GradedRing::coordinates(const Polynomial& p, std::size_t d) const {
  const Degree& data = degree_data(d);
  lattice::Vector v(data.basis.size());
  for (const auto& t : p.terms()) {
    auto it = data.index.find(t.monomial);
    if (it == data.index.end()) throw DegreeMismatch("polynomial has a term outside degree " + std::to_string(d));
    v[it->second] = t.coefficient;
  }
  return v;
}

GradedPieceReport GradedRing::piece(std::size_t d) const {
  const Degree& data = degree_data(d);
  return {d, pres_.signature_ptr(), data.basis, data.columns, data.lattice->cokernel()};
}

const lattice::AbelianGroup& GradedRing::group(std::size_t d) const { return degree_data(d).lattice->cokernel(); }

MembershipResult GradedRing::is_member(const Polynomial& p) const {
  std::size_t d = homogeneous_degree_of(p, "membership");
  if (p.is_zero()) return {true, {}};
  const Degree& data = degree_data(d);
  auto gamma = data.lattice->member(coordinates(p, d));
  if (!gamma) return {false, {}};
  MembershipResult result{true, {}};
  for (std::size_t j = 0; j < gamma->size(); ++j) {
    if ((*gamma)[j] == 0) continue;
    result.witness.push_back({data.column_source[j].first, data.column_source[j].second, (*gamma)[j]});
  }
  if (expand_witness(pres_, result.witness) != p) throw std::logic_error("membership witness failed re-expansion");
  return result;
}

lattice::Order GradedRing::order(const Polynomial& p) const {
  std::size_t d = homogeneous_degree_of(p, "order");
  if (p.is_zero()) return lattice::Order::finite(1);
  return degree_data(d).lattice->order(coordinates(p, d));
}

bool GradedRing::is_generated_by(const std::vector<Polynomial>& gens, std::size_t d) const {
  std::vector<lattice::Vector> extra;
  for (const auto& g : gens) {
    require_same_signature(pres_.signature_ptr(), g.signature_ptr(), "generation");
    if (!g.homogeneity().admits(d)) {
      throw DegreeMismatch("generator " + to_string(g) + " is not homogeneous of degree " + std::to_string(d));
    }
    extra.push_back(coordinates(g, d));
  }
  return degree_data(d).lattice->spans_with(extra);
}

lattice::Matrix ideal_degree_lattice(const Presentation& pres, std::size_t d) {
  return GradedRing(pres).piece(d).relation_matrix();
}

GradedPieceReport graded_piece(const Presentation& pres, std::size_t d) { return GradedRing(pres).piece(d); }

MembershipResult is_ideal_member(const Presentation& pres, const Polynomial& p) { return GradedRing(pres).is_member(p); }

lattice::Order element_order(const Presentation& pres, const Polynomial& p) { return GradedRing(pres).order(p); }

bool is_generated_by(const Presentation& pres, const std::vector<Polynomial>& gens, std::size_t d) {
  return GradedRing(pres).is_generated_by(gens, d);
}

}  // namespace chowkit::algebra
