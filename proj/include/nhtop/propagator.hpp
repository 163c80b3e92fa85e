#pragma once

#include "nhtop/matrix.hpp"

namespace nhtop {

// exp(A) by scaling-and-squaring with a Pade(13,13) approximant.
ComplexMatrix expm(const ComplexMatrix& A);

// exp(-i H t). Uses the biorthogonal eigendecomposition when the matrix is
// diagonalizable, the Pade fallback when it is defective.
ComplexMatrix propagator(const ComplexMatrix& H, double t);

} // namespace nhtop
