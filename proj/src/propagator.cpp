#include "nhtop/propagator.hpp"

#include <cmath>

#include "nhtop/spectrum.hpp"

namespace nhtop {

namespace {

// Pade(13,13) coefficients (Higham 2005).
const double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
const double kTheta13 = 5.371920351148152;

} // namespace

ComplexMatrix expm(const ComplexMatrix& A) {
    require_square_finite(A, "expm");
    const int n = static_cast<int>(A.rows());
    if (n == 0) return A;

    double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    ComplexMatrix a = A / std::pow(2.0, squarings);

    const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
    ComplexMatrix a2 = a * a;
    ComplexMatrix a4 = a2 * a2;
    ComplexMatrix a6 = a2 * a4;
    const double* b = kPade13;
    ComplexMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                           b[3] * a2 + b[1] * ident);
    ComplexMatrix v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;

    ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

ComplexMatrix propagator(const ComplexMatrix& H, double t) {
    require_square_finite(H, "propagator");
    if (!std::isfinite(t)) throw NonFiniteInput("propagator: time must be finite");
    const int n = static_cast<int>(H.rows());
    if (n == 0) return H;

    Spectrum spec = eigendecompose(H);
    if (spec.defective) return expm(Complex(0, -1) * t * H);

    ComplexVector phases(n);
    for (int i = 0; i < n; ++i) phases(i) = std::exp(Complex(0, -1) * spec.eigenvalues(i) * t);
    return spec.right_vectors * phases.asDiagonal() * spec.left_vectors.adjoint();
}

} // namespace nhtop
