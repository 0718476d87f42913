#pragma once

#include <optional>

#include "chowkit/error.hpp"
#include "chowkit/lattice/abelian_group.hpp"
#include "chowkit/lattice/lattice_basis.hpp"
#include "chowkit/lattice/matrix.hpp"
#include "chowkit/lattice/normal_form.hpp"

namespace chowkit::lattice {

// Coefficients c with basis * c = v, checked by multiplication before returning.
std::optional<Vector> lattice_member(const Matrix& basis, const Vector& v);

// Z^rows / column lattice of a.
AbelianGroup cokernel(const Matrix& a);

Order order_in_cokernel(const Matrix& a, const Vector& v);

}  // namespace chowkit::lattice
