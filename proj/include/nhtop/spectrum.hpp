#pragma once

#include <vector>

#include "nhtop/matrix.hpp"

namespace nhtop {

// Full biorthogonal eigendecomposition of a dense non-Hermitian matrix.
//
// eigenvalues are sorted lexicographically by (Re, Im). right_vectors and
// left_vectors hold matched eigenvectors as columns; when `defective` is
// false they satisfy left_vectors.adjoint() * right_vectors == I within the
// solve tolerance, so expansions |psi> = sum_n <chi_n|psi> |phi_n> are exact.
// When the matrix is not diagonalizable within tol (or left/right eigenvalue
// matching fails), `defective` is set and both vector sets are only
// unit-normalized.
struct Spectrum {
    ComplexVector eigenvalues;
    ComplexMatrix right_vectors;
    ComplexMatrix left_vectors;
    double residual_max = 0.0;
    bool defective = false;

    Eigen::Index dim() const { return eigenvalues.size(); }
};

Spectrum eigendecompose(const ComplexMatrix& H, double tol = 1e-8);

// Cheaper paths for hot loops (band sweeps, disorder ensembles) that need
// only eigenvalues or only right eigenvectors.
ComplexVector eigenvalues_only(const ComplexMatrix& H);

struct RightEigen {
    ComplexVector eigenvalues;
    ComplexMatrix vectors; // columns, unit 2-norm
};
RightEigen right_eigensystem(const ComplexMatrix& H);

// Schur decomposition H = Q T Q^dagger with T upper triangular. Exposed for
// tests; eigendecompose is built on top of it.
struct SchurResult {
    ComplexMatrix T;
    ComplexMatrix Q; // empty when not requested
};
SchurResult complex_schur(const ComplexMatrix& H, bool want_q);

} // namespace nhtop
