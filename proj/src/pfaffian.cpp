#include "nhtop/pfaffian.hpp"

#include <cmath>

namespace nhtop {

// Parlett-Reid: skew-symmetric Gaussian elimination in 2x2 steps. Each step
// pivots the largest entry of the working column into the subdiagonal slot
// (a row+column swap flips the sign of the Pfaffian), multiplies the running
// product by the 2x2 block Pfaffian, and updates the trailing submatrix with
// a rank-two skew outer product.
Complex pfaffian(const ComplexMatrix& A, double tol) {
    require_square_finite(A, "pfaffian");
    const int n = static_cast<int>(A.rows());
    if (n % 2 != 0) throw OddDimension("pfaffian: dimension must be even");
    double scale = std::max(max_norm(A), 1.0);
    if (max_norm(ComplexMatrix(A + A.transpose())) > tol * scale)
        throw NotAntisymmetric("pfaffian: matrix is not antisymmetric within tolerance");
    if (n == 0) return Complex(1, 0);

    // work on the exactly antisymmetric part
    ComplexMatrix m = 0.5 * (A - A.transpose());
    Complex pf(1, 0);
    for (int k = 0; k + 1 < n; k += 2) {
        int kp = k + 1;
        double best = std::abs(m(k + 1, k));
        for (int i = k + 2; i < n; ++i) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                kp = i;
            }
        }
        if (kp != k + 1) {
            m.row(k + 1).swap(m.row(kp));
            m.col(k + 1).swap(m.col(kp));
            pf = -pf;
        }
        if (m(k + 1, k) == Complex(0, 0)) return Complex(0, 0);
        pf *= m(k, k + 1);
        if (k + 2 < n) {
            const int r = n - k - 2;
            ComplexVector tau = m.block(k, k + 2, 1, r).transpose() / m(k, k + 1);
            ComplexVector col = m.block(k + 2, k + 1, r, 1);
            m.block(k + 2, k + 2, r, r).noalias() += tau * col.transpose();
            m.block(k + 2, k + 2, r, r).noalias() -= col * tau.transpose();
        }
    }
    return pf;
}

} // namespace nhtop
