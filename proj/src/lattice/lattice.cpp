#include "chowkit/lattice/lattice.hpp"

#include <stdexcept>

namespace chowkit::lattice {

std::optional<Vector> lattice_member(const Matrix& basis, const Vector& v) {
  auto c = LatticeBasis(basis).member(v);
  if (c && basis * *c != v) throw std::logic_error("lattice witness failed re-multiplication");
  return c;
}

AbelianGroup cokernel(const Matrix& a) { return LatticeBasis(a).cokernel(); }

Order order_in_cokernel(const Matrix& a, const Vector& v) { return LatticeBasis(a).order(v); }

}  // namespace chowkit::lattice
