#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "chowkit/algebra/presentation.hpp"
#include "chowkit/lattice/lattice.hpp"

namespace chowkit::algebra {

struct GradedPieceReport {
  std::size_t degree = 0;
  SignaturePtr signature;
  std::vector<Monomial> basis;
  // Columns m*r in basis coordinates; the dense form is built on request.
  std::vector<lattice::SparseVector> relation_columns;
  lattice::AbelianGroup group;

  lattice::Matrix relation_matrix() const;
};

// One term c * m * r_i of an ideal-membership witness.
struct WitnessTerm {
  std::size_t relation;
  Monomial multiplier;
  Integer coefficient;
};

struct MembershipResult {
  bool member = false;
  std::vector<WitnessTerm> witness;
};

// Expands sum c * m * r_i.
Polynomial expand_witness(const Presentation& pres, const std::vector<WitnessTerm>& witness);

// A presentation together with memoized degree lattices. Queries are exact
// and give the same answers as the free functions below.
class GradedRing {
 public:
  explicit GradedRing(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  const Signature& signature() const { return pres_.signature(); }

  GradedPieceReport piece(std::size_t d) const;
  const lattice::AbelianGroup& group(std::size_t d) const;
  MembershipResult is_member(const Polynomial& p) const;
  lattice::Order order(const Polynomial& p) const;
  bool is_generated_by(const std::vector<Polynomial>& gens, std::size_t d) const;

  // Coordinates of a polynomial homogeneous of degree d (or zero).
  lattice::Vector coordinates(const Polynomial& p, std::size_t d) const;

 private:
  struct Degree {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    std::vector<std::pair<std::size_t, Monomial>> column_source;
    std::vector<lattice::SparseVector> columns;
    std::unique_ptr<lattice::LatticeBasis> lattice;
  };

  const Degree& degree_data(std::size_t d) const;
  std::size_t homogeneous_degree_of(const Polynomial& p, const char* what) const;

  Presentation pres_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<Degree>> cache_;
};

lattice::Matrix ideal_degree_lattice(const Presentation& pres, std::size_t d);
GradedPieceReport graded_piece(const Presentation& pres, std::size_t d);
// Throws NotHomogeneous or SignatureMismatch; a positive answer carries a re-verified witness.
MembershipResult is_ideal_member(const Presentation& pres, const Polynomial& p);
lattice::Order element_order(const Presentation& pres, const Polynomial& p);
// Throws DegreeMismatch unless every generator is homogeneous of degree d or zero.
bool is_generated_by(const Presentation& pres, const std::vector<Polynomial>& gens, std::size_t d);

}  // namespace chowkit::algebra
