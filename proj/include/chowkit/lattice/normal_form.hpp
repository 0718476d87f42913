#pragma once

#include "chowkit/lattice/matrix.hpp"

namespace chowkit::lattice {

struct HermiteForm {
  Matrix h;
  Matrix u;  // unimodular, h = u * a
};

struct SnfDecomposition {
  Matrix d;
  Matrix u;  // rows x rows
  Matrix v;  // cols x cols, u * a * v = d
};

// Row-style: echelon, positive pivots, entries above each pivot in [0, pivot).
HermiteForm hnf(const Matrix& a);

// Nonnegative diagonal, each nonzero entry divides the next.
SnfDecomposition snf(const Matrix& a);

}  // namespace chowkit::lattice
