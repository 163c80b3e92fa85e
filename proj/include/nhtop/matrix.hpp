#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nhtop/errors.hpp"

namespace nhtop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex I_UNIT{0.0, 1.0};

// Max-norm (largest entry modulus). Used as the operator scale for all
// relative tolerances in this library.
inline double max_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

inline bool is_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    return true;
}

inline void require_square_finite(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw DimensionMismatch(std::string(who) + ": matrix must be square");
    if (!is_finite(m))
        throw NonFiniteInput(std::string(who) + ": matrix has NaN/Inf entries");
}

// Pauli matrices and small constructors used throughout the model builders.
inline ComplexMatrix pauli_x() {
    ComplexMatrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}
inline ComplexMatrix pauli_y() {
    ComplexMatrix s(2, 2);
    s << 0, Complex(0, -1), Complex(0, 1), 0;
    return s;
}
inline ComplexMatrix pauli_z() {
    ComplexMatrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}
inline ComplexMatrix id2() { return ComplexMatrix::Identity(2, 2); }

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace nhtop
