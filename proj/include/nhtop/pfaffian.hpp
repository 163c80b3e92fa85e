#pragma once

#include "nhtop/matrix.hpp"

namespace nhtop {

// Pfaffian of an even-dimensional antisymmetric matrix, Parlett-Reid
// tridiagonalization with partial pivoting. Satisfies Pf(A)^2 = det(A).
// Throws NotAntisymmetric / OddDimension on bad input; `tol` is the relative
// antisymmetry tolerance.
Complex pfaffian(const ComplexMatrix& A, double tol = 1e-8);

} // namespace nhtop
