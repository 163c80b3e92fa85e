#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhtop/models.hpp"
#include "nhtop/spectrum.hpp"
#include "oracles.hpp"

using namespace nhtop;

namespace {

std::vector<Complex> to_vec(const ComplexVector& v) {
    return std::vector<Complex>(v.data(), v.data() + v.size());
}

// union of Bloch eigenvalues at the commensurate momenta of an L-cell ring
std::vector<Complex> commensurate_spectrum(const BlochHamiltonian& bh, int cells) {
    std::vector<Complex> out;
    for (int m = 0; m < cells; ++m) {
        double k = 2.0 * M_PI * m / cells;
        auto vals = eigenvalues_only(bh.evaluate(KPoint(k)));
        for (Eigen::Index i = 0; i < vals.size(); ++i) out.push_back(vals(i));
    }
    return out;
}

} // namespace

TEST_CASE("nhti: Bloch matrix at k = 0 and analytic dispersion") {
    auto bh = build_nhti(1.0, Complex(0.5, 0.0), 1.0);
    ComplexMatrix h0 = bh.evaluate(KPoint(0.0));
    CHECK(std::abs(h0(0, 0) - Complex(0, 3)) < 1e-14); // h_z = i(gamma + 2t)
    auto disp = bh.analytic_dispersion(KPoint(0.0));
    CHECK(std::abs(disp[0] - Complex(0, 3)) < 1e-14);
    CHECK(std::abs(disp[1] + Complex(0, 3)) < 1e-14);

    // dispersion matches exact diagonalization across the zone
    for (int j = 0; j <= 100; ++j) {
        double k = -M_PI + 2.0 * M_PI * j / 100.0;
        auto vals = to_vec(eigenvalues_only(bh.evaluate(KPoint(k))));
        auto ref = bh.analytic_dispersion(KPoint(k));
        CHECK(oracle::multiset_distance(vals, {ref.begin(), ref.end()}) < 1e-10);
    }
}

TEST_CASE("nhti: reduced case delta=0, gamma=0 is gapless at k = pi/2") {
    auto bh = build_nhti(1.0, Complex(0.0, 0.0), 0.0);
    auto disp = bh.analytic_dispersion(KPoint(M_PI / 2.0));
    CHECK(std::abs(disp[0]) < 1e-14);
    auto d2 = bh.analytic_dispersion(KPoint(0.3));
    CHECK(std::abs(d2[0] - Complex(0, 2.0 * std::cos(0.3))) < 1e-12);
}

TEST_CASE("nhti: periodicity of the Bloch map") {
    auto bh = build_nhti(1.0, Complex(0.3, 0.2), 0.7);
    for (double k : {0.3, -1.1, 2.9}) {
        ComplexMatrix a = bh.evaluate(KPoint(k));
        ComplexMatrix b = bh.evaluate(KPoint(k + 2.0 * M_PI));
        CHECK(max_norm(ComplexMatrix(a - b)) < 1e-12);
    }
}

TEST_CASE("nhti chain: periodic ring reproduces commensurate Bloch spectrum") {
    auto bh = build_nhti(1.0, Complex(0.5, 0.0), 1.0);
    auto ring = build_nhti_chain(1.0, Complex(0.5, 0.0), 1.0, 12, Boundary::Periodic);
    auto ring_vals = to_vec(eigenvalues_only(ring.matrix));
    CHECK(oracle::multiset_distance(ring_vals, commensurate_spectrum(bh, 12)) < 1e-10);
}

TEST_CASE("nhti chain: mid-gap states in the topological phase only") {
    auto count_midgap = [](const RealSpaceModel& m) {
        auto vals = eigenvalues_only(m.matrix);
        int c = 0;
        for (Eigen::Index i = 0; i < vals.size(); ++i)
            if (std::abs(vals(i).imag()) < 1e-6) ++c;
        return c;
    };
    CHECK(count_midgap(build_nhti_chain(1.0, Complex(0.5, 0.0), 1.0, 50)) == 2);
    CHECK(count_midgap(build_nhti_chain(1.0, Complex(0.5, 0.0), 3.0, 50)) == 0);
}

TEST_CASE("nhti chain: closed-form edge state at t = delta") {
    const double t = 1.0, gamma = 0.2;
    const int L = 50;
    auto m = build_nhti_chain(t, Complex(t, 0.0), gamma, L);
    auto eig = right_eigensystem(m.matrix);
    // predicted left-edge profile (-gamma/2t)^(j-1) (a_j - b_j)
    ComplexVector pred = ComplexVector::Zero(2 * L);
    double r = -gamma / (2.0 * t);
    for (int j = 0; j < L; ++j) {
        pred(2 * j) = std::pow(r, j);
        pred(2 * j + 1) = -std::pow(r, j);
    }
    pred.normalize();
    double best = 0.0;
    for (int i = 0; i < 2 * L; ++i) {
        if (std::abs(eig.eigenvalues(i).imag()) > 1e-6) continue;
        best = std::max(best, std::abs(pred.dot(eig.vectors.col(i))));
    }
    CHECK(best > 1.0 - 1e-6);
}

TEST_CASE("majorana: band separation at the symmetric momenta") {
    auto bh = build_majorana(1.4, 0.6, Complex(0.5, 0.0), 1.0);
    // at k = 0 and k = pi the separation is 2|mu + (tL+tR)| and
    // 2|mu - (tL+tR)|; gap closing as a function of mu happens there
    auto sep = [&](double k) {
        auto d = bh.analytic_dispersion(KPoint(k));
        return std::abs(d[0] - d[1]);
    };
    CHECK(sep(0.0) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(sep(M_PI) == doctest::Approx(2.0).epsilon(1e-12));
    // gapped everywhere; note the interior minimum 2*sqrt(2/3) at
    // cos k = -2/3 lies below the symmetric-momentum separations when
    // 4|pair|^2 < (tL+tR)^2
    double min_sep = 1e300;
    for (int j = 0; j < 2001; ++j) {
        double k = -M_PI + 2.0 * M_PI * j / 2001.0;
        min_sep = std::min(min_sep, sep(k));
    }
    CHECK(min_sep > 1.0);
    CHECK(min_sep == doctest::Approx(2.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-6));
    // with |pair| = (tL+tR)/2 the symmetric-momentum formula is exact
    auto bh2 = build_majorana(1.4, 0.6, Complex(1.0, 0.0), 1.0);
    double min2 = 1e300;
    for (int j = 0; j < 2001; ++j) {
        double k = -M_PI + 2.0 * M_PI * j / 2001.0;
        auto d = bh2.analytic_dispersion(KPoint(k));
        min2 = std::min(min2, std::abs(d[0] - d[1]));
    }
    CHECK(min2 == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("majorana: symmetric hopping limit is Hermitian") {
    auto bh = build_majorana(1.0, 1.0, Complex(0.4, 0.1), 0.7);
    for (double k : {0.0, 0.9, -2.2}) {
        ComplexMatrix h = bh.evaluate(KPoint(k));
        CHECK(max_norm(ComplexMatrix(h - h.adjoint())) < 1e-14);
    }
}

TEST_CASE("majorana: dispersion matches exact diagonalization") {
    auto bh = build_majorana(1.4, 0.6, Complex(0.5, 0.2), 1.0);
    for (int j = 0; j <= 100; ++j) {
        double k = -M_PI + 2.0 * M_PI * j / 100.0;
        auto vals = to_vec(eigenvalues_only(bh.evaluate(KPoint(k))));
        auto ref = bh.analytic_dispersion(KPoint(k));
        CHECK(oracle::multiset_distance(vals, {ref.begin(), ref.end()}) < 1e-10);
    }
}

TEST_CASE("majorana chain: ring matches Bloch, open chain hosts zero modes") {
    auto bh = build_majorana(1.4, 0.6, Complex(0.5, 0.0), 1.0);
    auto ring = build_majorana_chain(1.4, 0.6, Complex(0.5, 0.0), 1.0, 10, Boundary::Periodic);
    CHECK(oracle::multiset_distance(to_vec(eigenvalues_only(ring.matrix)),
                                    commensurate_spectrum(bh, 10)) < 1e-10);

    auto open_topo = build_majorana_chain(1.4, 0.6, Complex(0.5, 0.0), 1.0, 50);
    auto vals = eigenvalues_only(open_topo.matrix);
    int zeros = 0;
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        if (std::abs(vals(i)) < 1e-6) ++zeros;
    CHECK(zeros == 2);

    auto open_trivial = build_majorana_chain(1.4, 0.6, Complex(0.5, 0.0), 3.0, 50);
    vals = eigenvalues_only(open_trivial.matrix);
    zeros = 0;
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        if (std::abs(vals(i)) < 1e-6) ++zeros;
    CHECK(zeros == 0);
}

TEST_CASE("dirac algebra: Clifford relations and specific products") {
    auto alg = build_dirac_algebra();
    ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            ComplexMatrix anti = alg.gamma[i] * alg.gamma[j] + alg.gamma[j] * alg.gamma[i];
            CHECK(max_norm(ComplexMatrix(anti - (i == j ? 2.0 : 0.0) * id4)) < 1e-14);
        }
    // anticommutators with G25 entering the squared Hamiltonian:
    // {G1, G25} = -2 G34, {G3, G25} = 2 G14, {G2, G25} = {G5, G25} = 0.
    // ({G4, G25} = -2 G13 is nonzero, but G4 carries no coefficient here.)
    const ComplexMatrix& g25 = alg.gamma_comm[1][4];
    auto anti = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
        return ComplexMatrix(a * b + b * a);
    };
    CHECK(max_norm(ComplexMatrix(anti(alg.gamma[0], g25) + 2.0 * alg.gamma_comm[2][3])) < 1e-14);
    CHECK(max_norm(ComplexMatrix(anti(alg.gamma[2], g25) - 2.0 * alg.gamma_comm[0][3])) < 1e-14);
    CHECK(max_norm(anti(alg.gamma[1], g25)) < 1e-14);
    CHECK(max_norm(anti(alg.gamma[4], g25)) < 1e-14);
    CHECK(max_norm(ComplexMatrix(anti(alg.gamma[3], g25) + 2.0 * alg.gamma_comm[0][2])) < 1e-14);
    // P G_i P^-1 = -G_i for i != 1, +G_1 for i = 1
    for (int i = 0; i < 5; ++i) {
        ComplexMatrix conj = alg.inversion * alg.gamma[i] * alg.inversion.adjoint();
        double sign = (i == 0) ? 1.0 : -1.0;
        CHECK(max_norm(ComplexMatrix(conj - sign * alg.gamma[i])) < 1e-14);
    }
    // T G_i T^-1 under T = i(I x sy) K
    for (int i = 0; i < 5; ++i) {
        const ComplexMatrix& u = alg.time_reversal_unitary;
        ComplexMatrix conj = u * alg.gamma[i].conjugate() * u.adjoint();
        double sign = (i == 0) ? 1.0 : -1.0;
        CHECK(max_norm(ComplexMatrix(conj - sign * alg.gamma[i])) < 1e-14);
    }
}

TEST_CASE("qsh: gapped spectrum with (E, E*, -E, -E*) structure") {
    auto bh = build_qsh(1.0, -1.0, 0.5, 0.8);
    for (double kx : {0.3, 1.7}) {
        for (double ky : {-0.4, 2.1}) {
            auto vals = to_vec(eigenvalues_only(bh.evaluate(KPoint(kx, ky))));
            // multiset closed under E -> E* and E -> -E
            std::vector<Complex> conj_set, neg_set;
            for (auto& e : vals) {
                conj_set.push_back(std::conj(e));
                neg_set.push_back(-e);
            }
            CHECK(oracle::multiset_distance(vals, conj_set) < 1e-9);
            CHECK(oracle::multiset_distance(vals, neg_set) < 1e-9);
        }
    }
}

TEST_CASE("qsh: Hermitian limit gamma = 0 has real spectrum") {
    auto bh = build_qsh(1.0, -1.0, 0.5, 0.0);
    auto vals = eigenvalues_only(bh.evaluate(KPoint(0.7, -1.2)));
    for (Eigen::Index i = 0; i < vals.size(); ++i) CHECK(std::abs(vals(i).imag()) < 1e-12);
}

TEST_CASE("qsh: closed-form dispersion matches diagonalization on a 51x51 grid") {
    auto bh = build_qsh(1.0, -1.0, 0.5, 0.8);
    double worst = 0.0;
    for (int jx = 0; jx < 51; ++jx) {
        for (int jy = 0; jy < 51; ++jy) {
            KPoint k(-M_PI + 2.0 * M_PI * jx / 51.0, -M_PI + 2.0 * M_PI * jy / 51.0);
            auto vals = to_vec(eigenvalues_only(bh.evaluate(k)));
            auto ref = bh.analytic_dispersion(k);
            worst = std::max(worst, oracle::multiset_distance(vals, {ref.begin(), ref.end()}));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("qsh cylinder: periodic ring matches Bloch at commensurate kx") {
    const double ky = 0.9;
    auto bh = build_qsh(1.0, -1.0, 0.5, 0.8);
    auto ring = build_qsh_cylinder(1.0, -1.0, 0.5, 0.8, 8, ky, Boundary::Periodic);
    std::vector<Complex> ref;
    for (int m = 0; m < 8; ++m) {
        double kx = 2.0 * M_PI * m / 8.0;
        auto vals = eigenvalues_only(bh.evaluate(KPoint(kx, ky)));
        for (Eigen::Index i = 0; i < vals.size(); ++i) ref.push_back(vals(i));
    }
    CHECK(oracle::multiset_distance(to_vec(eigenvalues_only(ring.matrix)), ref) < 1e-9);
}

TEST_CASE("qsh rectangle: clean block structure matches cylinder at ky slices") {
    // Fourier transform of the rectangle along y at commensurate ky must
    // reproduce the cylinder on-site/hopping structure; spot check spectra of
    // a fully periodic small torus against the Bloch map.
    const int l = 6;
    auto bh = build_qsh(1.0, -1.0, 0.5, 0.8);
    auto rect = build_qsh_rectangle(1.0, -1.0, 0.5, 0.8, l, l);
    // periodicize by hand: add wrap-around blocks equal to the open ones
    // (torus check is done through cylinder+ring instead; here just sanity)
    CHECK(rect.dim() == l * l * 4);
    CHECK(max_norm(rect.matrix) > 0.0);
}

TEST_CASE("three-level system: matrix form and trace") {
    ComplexMatrix h = build_three_level(1.0, 0.5, 5.0);
    CHECK(std::abs(h(0, 0) - Complex(0, -0.25)) < 1e-15);
    CHECK(std::abs(h(2, 2) - Complex(0, -2.5)) < 1e-15);
    CHECK(std::abs(h(0, 1) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(h(1, 2) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(h(0, 2)) < 1e-15);
    CHECK(std::abs(h.trace() - Complex(0, -(0.5 + 5.0) / 2.0)) < 1e-15);
    ComplexMatrix lossless = build_three_level(0.8, 0.0, 0.0);
    CHECK(max_norm(ComplexMatrix(lossless - lossless.adjoint())) < 1e-15);
}

TEST_CASE("dirac continuum: eigenvalues and chiral identity") {
    DiracRegion massive{0.0, 1.0, 0.0};
    auto vals = to_vec(eigenvalues_only(dirac_continuum(0.0, massive)));
    CHECK(oracle::multiset_distance(vals, {Complex(1, 0), Complex(-1, 0)}) < 1e-12);

    DiracRegion r{0.5, 2.0, 0.7};
    ComplexMatrix sz = pauli_z();
    for (double k : {-3.0, 0.0, 1.3}) {
        ComplexMatrix h = dirac_continuum(k, r);
        CHECK(max_norm(ComplexMatrix(sz * h * sz + h)) < 1e-14);
        // E = +/- sqrt((k+ig)^2 + (m+i delta)^2)
        Complex e2 = (Complex(k, r.g) * Complex(k, r.g) + Complex(r.m, r.delta) * Complex(r.m, r.delta));
        Complex e = std::sqrt(e2);
        CHECK(oracle::multiset_distance(to_vec(eigenvalues_only(h)), {e, -e}) < 1e-12);
    }

    // |m| > |g|: pointwise band separation stays open over all k; the
    // separation vanishes on the boundary |m| = |g| (at k = -delta)
    auto min_gap = [](const DiracRegion& reg) {
        double mg = 1e300;
        for (int j = -400; j <= 400; ++j) {
            double k = j * 0.05;
            auto v = eigenvalues_only(dirac_continuum(k, reg));
            mg = std::min(mg, std::abs(v(0) - v(1)));
        }
        return mg;
    };
    CHECK(min_gap(DiracRegion{0.5, 2.0, 0.7}) > 0.1);
    CHECK(min_gap(DiracRegion{2.0, 2.0, 0.0}) < 1e-10);
}

TEST_CASE("disorder: zero amplitude reproduces the clean matrix entrywise") {
    DisorderSpec none;
    auto clean = build_nhti_chain(1.0, Complex(0.5, 0.0), 1.0, 20);
    auto dis = build_disordered("nhti", nhti_params(1.0, Complex(0.5, 0.0), 1.0, 20), none, 42);
    CHECK(max_norm(ComplexMatrix(clean.matrix - dis.matrix)) == 0.0);

    auto cleanm = build_majorana_chain(1.4, 0.6, Complex(0.5, 0.0), 1.0, 20);
    auto dism =
        build_disordered("majorana", majorana_params(1.4, 0.6, Complex(0.5, 0.0), 1.0, 20), none, 7);
    CHECK(max_norm(ComplexMatrix(cleanm.matrix - dism.matrix)) == 0.0);

    auto cleanq = build_qsh_cylinder(1.0, -1.0, 0.5, 0.8, 10, 0.4);
    auto disq = build_disordered("qsh_cylinder", qsh_params(1.0, -1.0, 0.5, 0.8, 10, 1, 0.4), none, 3);
    CHECK(max_norm(ComplexMatrix(cleanq.matrix - disq.matrix)) == 0.0);
}

TEST_CASE("disorder: determinism and realization independence") {
    DisorderSpec spec;
    spec.amplitude = {{"t_left", 0.3}, {"t_right", 0.3}, {"mu", 1.0}};
    auto params = majorana_params(1.4, 0.6, Complex(0.5, 0.0), 1.0, 30);
    auto a = build_disordered("majorana", params, spec, 99, 0);
    auto b = build_disordered("majorana", params, spec, 99, 0);
    CHECK(max_norm(ComplexMatrix(a.matrix - b.matrix)) == 0.0);
    auto c = build_disordered("majorana", params, spec, 99, 1);
    CHECK(max_norm(ComplexMatrix(a.matrix - c.matrix)) > 1e-3);
    auto d = build_disordered("majorana", params, spec, 100, 0);
    CHECK(max_norm(ComplexMatrix(a.matrix - d.matrix)) > 1e-3);
    CHECK_THROWS_AS(build_disordered("bogus", params, spec, 1), UnknownModelKind);
}

TEST_CASE("disorder variates: uniform on [-0.5, 0.5] and order independent") {
    double mn = 1.0, mx = -1.0, sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double e = disorder_eps(5, 0, i, 0);
        mn = std::min(mn, e);
        mx = std::max(mx, e);
        sum += e;
    }
    CHECK(mn >= -0.5);
    CHECK(mx <= 0.5);
    CHECK(mn < -0.49);
    CHECK(mx > 0.49);
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(disorder_eps(5, 0, 123, 1) == disorder_eps(5, 0, 123, 1));
}

TEST_CASE("builders: argument validation") {
    CHECK_THROWS_AS(build_nhti(-1.0, Complex(0.5, 0), 1.0), NonPositiveHopping);
    CHECK_THROWS_AS(build_nhti_chain(1.0, Complex(0.5, 0), 1.0, 3), TooFewSites);
    CHECK_THROWS_AS(build_majorana(1.0, -0.2, Complex(0.5, 0), 1.0), NonPositiveHopping);
    CHECK_THROWS_AS(build_majorana_chain(1.0, 1.0, Complex(0.5, 0), 1.0, 2), TooFewSites);
    CHECK_THROWS_AS(build_qsh_cylinder(1.0, -1.0, 0.5, 0.8, 3, 0.0), TooFewSites);
}
