#include "nhtop/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

// Dense complex eigensolver: Householder reduction to upper Hessenberg form
// followed by an implicitly shifted (Wilkinson) single-shift QR iteration on
// the complex matrix, accumulating the unitary transform so that
// H = Q T Q^dagger with T upper triangular. Eigenvectors of T are obtained by
// back-substitution and mapped back through Q. Left eigenvectors come from an
// independent decomposition of H^dagger, paired to the right ones by minimum
// complex distance, then the pair is biorthonormalized through the Gram
// matrix. A singular Gram matrix (Jordan block, exceptional point) marks the
// spectrum defective instead of producing garbage.

namespace nhtop {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Givens {
    double c;  // real cosine
    Complex s; // complex sine
};

// Rotation G = [[c, s], [-conj(s), c]] with G * (a, b)^T = (r, 0)^T.
Givens make_givens(Complex a, Complex b) {
    double aa = std::abs(a), ab = std::abs(b);
    if (ab == 0.0) return {1.0, Complex(0, 0)};
    if (aa == 0.0) return {0.0, std::conj(b) / ab};
    double r = std::hypot(aa, ab);
    double c = aa / r;
    Complex s = c * std::conj(b) / std::conj(a);
    return {c, s};
}

void apply_rows(ComplexMatrix& m, int k, const Givens& g, int col_lo, int col_hi) {
    for (int j = col_lo; j < col_hi; ++j) {
        Complex a = m(k, j), b = m(k + 1, j);
        m(k, j) = g.c * a + g.s * b;
        m(k + 1, j) = -std::conj(g.s) * a + g.c * b;
    }
}

void apply_cols(ComplexMatrix& m, int k, const Givens& g, int row_lo, int row_hi) {
    for (int i = row_lo; i < row_hi; ++i) {
        Complex a = m(i, k), b = m(i, k + 1);
        m(i, k) = g.c * a + std::conj(g.s) * b;
        m(i, k + 1) = -g.s * a + g.c * b;
    }
}

// Reduce H in place to upper Hessenberg form; accumulate the reflectors into
// q when it is non-empty.
void hessenberg(ComplexMatrix& h, ComplexMatrix& q) {
    const int n = static_cast<int>(h.rows());
    for (int c = 0; c + 2 < n; ++c) {
        const int m = n - c - 1;
        ComplexVector x = h.block(c + 1, c, m, 1);
        double tail = x.tail(m - 1).norm();
        if (tail == 0.0) continue;
        double normx = x.norm();
        Complex phase = (std::abs(x(0)) == 0.0) ? Complex(1, 0) : x(0) / std::abs(x(0));
        ComplexVector v = x;
        v(0) += phase * normx;
        double vn = v.norm();
        if (vn == 0.0) continue;
        v /= vn;
        // H <- P H P with P = I - 2 v v^dagger acting on rows/cols c+1..n-1
        h.block(c + 1, c, m, n - c).noalias() -= 2.0 * v * (v.adjoint() * h.block(c + 1, c, m, n - c));
        h.block(0, c + 1, n, m).noalias() -= 2.0 * (h.block(0, c + 1, n, m) * v) * v.adjoint();
        if (q.size() > 0)
            q.block(0, c + 1, n, m).noalias() -= 2.0 * (q.block(0, c + 1, n, m) * v) * v.adjoint();
        for (int i = c + 2; i < n; ++i) h(i, c) = Complex(0, 0);
    }
}

Complex wilkinson_shift(const ComplexMatrix& h, int hi) {
    Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
    Complex c = h(hi, hi - 1), d = h(hi, hi);
    Complex tr2 = 0.5 * (a - d);
    Complex disc = std::sqrt(tr2 * tr2 + b * c);
    Complex mu1 = d + tr2 + disc;
    Complex mu2 = d + tr2 - disc;
    return (std::abs(mu1 - d) < std::abs(mu2 - d)) ? mu1 : mu2;
}

// Shifted QR on a Hessenberg matrix; returns false on iteration-cap blowout.
bool qr_iterate(ComplexMatrix& h, ComplexMatrix& z) {
    const int n = static_cast<int>(h.rows());
    const double hnorm = std::max(max_norm(h), std::numeric_limits<double>::min());
    int hi = n - 1;
    int iters_here = 0;
    long total = 0;
    const long total_cap = 40L * n + 100;

    while (hi > 0) {
        // deflate converged subdiagonals
        int lo = hi;
        while (lo > 0) {
            double sub = std::abs(h(lo, lo - 1));
            double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (scale == 0.0) scale = hnorm;
            if (sub <= kEps * scale) {
                h(lo, lo - 1) = Complex(0, 0);
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            iters_here = 0;
            continue;
        }

        if (++total > total_cap) return false;
        ++iters_here;
        Complex shift;
        if (iters_here > 0 && iters_here % 12 == 0) {
            // exceptional shift to break rare cycles
            double mag = std::abs(h(hi, hi - 1));
            if (hi - 1 > lo) mag += std::abs(h(hi - 1, hi - 2));
            shift = h(hi, hi) + Complex(1.5 * mag, 0);
        } else {
            shift = wilkinson_shift(h, hi);
        }
        if (iters_here > 60) return false;

        // implicit single-shift bulge chase over the active block
        for (int k = lo; k < hi; ++k) {
            Complex a, b;
            if (k == lo) {
                a = h(lo, lo) - shift;
                b = h(lo + 1, lo);
            } else {
                a = h(k, k - 1);
                b = h(k + 1, k - 1);
            }
            Givens g = make_givens(a, b);
            int col0 = std::max(lo, k - 1);
            apply_rows(h, k, g, col0, n);
            apply_cols(h, k, g, 0, std::min(k + 3, hi + 1));
            if (z.size() > 0) apply_cols(z, k, g, 0, n);
            if (k > lo) h(k + 1, k - 1) = Complex(0, 0);
        }
    }
    // numerically clean the strict lower triangle
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) h(i, j) = Complex(0, 0);
    return true;
}

// Right eigenvectors of an upper triangular matrix by back-substitution;
// near-degenerate denominators are floored so defective inputs yield nearly
// parallel vectors that the Gram stage can detect.
ComplexMatrix triangular_eigenvectors(const ComplexMatrix& t) {
    const int n = static_cast<int>(t.rows());
    const double tnorm = std::max(max_norm(t), std::numeric_limits<double>::min());
    ComplexMatrix y = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        y(k, k) = Complex(1, 0);
        for (int i = k - 1; i >= 0; --i) {
            Complex num(0, 0);
            for (int j = i + 1; j <= k; ++j) num += t(i, j) * y(j, k);
            Complex d = t(i, i) - t(k, k);
            if (std::abs(d) < kEps * tnorm) d = Complex(kEps * tnorm, 0);
            y(i, k) = -num / d;
            double m = std::abs(y(i, k));
            if (m > 1e250) y.col(k).head(k + 1) /= m;
        }
        y.col(k).normalize();
    }
    return y;
}

std::vector<int> sort_permutation(const ComplexVector& vals) {
    std::vector<int> p(vals.size());
    std::iota(p.begin(), p.end(), 0);
    std::sort(p.begin(), p.end(), [&](int a, int b) {
        if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
        return vals(a).imag() < vals(b).imag();
    });
    return p;
}

} // namespace

SchurResult complex_schur(const ComplexMatrix& H, bool want_q) {
    require_square_finite(H, "complex_schur");
    const int n = static_cast<int>(H.rows());
    SchurResult res;
    res.T = H;
    if (want_q) res.Q = ComplexMatrix::Identity(n, n);
    if (n <= 1) return res;
    hessenberg(res.T, res.Q);
    if (!qr_iterate(res.T, res.Q))
        throw ConvergenceFailure("complex_schur: QR iteration cap exceeded");
    return res;
}

ComplexVector eigenvalues_only(const ComplexMatrix& H) {
    SchurResult s = complex_schur(H, false);
    ComplexVector vals = s.T.diagonal();
    auto p = sort_permutation(vals);
    ComplexVector out(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) out(i) = vals(p[i]);
    return out;
}

RightEigen right_eigensystem(const ComplexMatrix& H) {
    SchurResult s = complex_schur(H, true);
    const int n = static_cast<int>(H.rows());
    ComplexMatrix y = triangular_eigenvectors(s.T);
    ComplexMatrix vecs = s.Q * y;
    ComplexVector vals = s.T.diagonal();
    auto p = sort_permutation(vals);
    RightEigen out;
    out.eigenvalues.resize(n);
    out.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        out.eigenvalues(i) = vals(p[i]);
        out.vectors.col(i) = vecs.col(p[i]).normalized();
    }
    return out;
}

Spectrum eigendecompose(const ComplexMatrix& H, double tol) {
    require_square_finite(H, "eigendecompose");
    const int n = static_cast<int>(H.rows());
    const double hnorm = std::max(max_norm(H), std::numeric_limits<double>::min());

    RightEigen right = right_eigensystem(H);
    RightEigen adj = right_eigensystem(H.adjoint());

    Spectrum spec;
    spec.eigenvalues = right.eigenvalues;
    spec.right_vectors = right.vectors;
    spec.left_vectors.resize(n, n);

    // Pair each right eigenvalue with an eigenvalue of H^dagger: the left
    // eigenvector for E is the H^dagger eigenvector at conj(E). Greedy
    // minimum-distance assignment; a bad match flags a defective spectrum.
    struct Cand {
        double d;
        int i, j;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cands.push_back({std::abs(spec.eigenvalues(i) - std::conj(adj.eigenvalues(j))), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d < b.d; });
    std::vector<int> match(n, -1);
    std::vector<bool> used(n, false);
    int assigned = 0;
    double worst_match = 0.0;
    for (const Cand& c : cands) {
        if (assigned == n) break;
        if (match[c.i] >= 0 || used[c.j]) continue;
        match[c.i] = c.j;
        used[c.j] = true;
        worst_match = std::max(worst_match, c.d);
        ++assigned;
    }
    for (int i = 0; i < n; ++i) spec.left_vectors.col(i) = adj.vectors.col(match[i]);

    if (worst_match > 1e-6 * hnorm) spec.defective = true;

    if (!spec.defective) {
        // Gram matrix of unit left/right vectors. Its smallest singular value
        // vanishing (within tol, absolute) is the numerical signature of a
        // Jordan block / exceptional point.
        ComplexMatrix gram = spec.left_vectors.adjoint() * spec.right_vectors;
        Eigen::JacobiSVD<ComplexMatrix> svd(gram);
        double sigma_min = svd.singularValues()(n - 1);
        if (sigma_min <= std::max(tol, 1e4 * kEps)) {
            spec.defective = true;
        } else {
            // X <- X (G^-1)^dagger so that X^dagger Phi = I
            spec.left_vectors = spec.left_vectors * gram.partialPivLu().inverse().adjoint();
        }
    }

    double rmax = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (H * spec.right_vectors.col(i) - spec.eigenvalues(i) * spec.right_vectors.col(i)).norm();
        double lnorm = spec.left_vectors.col(i).norm();
        double l = (H.adjoint() * spec.left_vectors.col(i) -
                    std::conj(spec.eigenvalues(i)) * spec.left_vectors.col(i))
                       .norm();
        rmax = std::max(rmax, r);
        if (lnorm > 0) rmax = std::max(rmax, l / lnorm);
    }
    spec.residual_max = rmax;
    return spec;
}

} // namespace nhtop
