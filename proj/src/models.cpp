#include "nhtop/models.hpp"

#include <cmath>

namespace nhtop {

namespace {

ComplexMatrix two_band(Complex h0, Complex hx, Complex hy, Complex hz) {
    ComplexMatrix h(2, 2);
    h(0, 0) = h0 + hz;
    h(0, 1) = hx - I_UNIT * hy;
    h(1, 0) = hx + I_UNIT * hy;
    h(1, 1) = h0 - hz;
    return h;
}

void check_sites(int sites) {
    if (sites < 4) throw TooFewSites("chain builders require at least 4 sites");
}

// Block assembly of a 1D chain with per-bond hop blocks and per-site on-site
// blocks. hop_right(b) sits at (cell b, cell b+1) and is multiplied by
// e^{+ik} under the Fourier convention used throughout.
ComplexMatrix assemble_chain(int cells, int internal, Boundary bc,
                             const std::function<ComplexMatrix(int)>& onsite,
                             const std::function<ComplexMatrix(int)>& hop_right,
                             const std::function<ComplexMatrix(int)>& hop_left) {
    const int dim = cells * internal;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int j = 0; j < cells; ++j)
        m.block(j * internal, j * internal, internal, internal) = onsite(j);
    const int bonds = (bc == Boundary::Periodic) ? cells : cells - 1;
    for (int b = 0; b < bonds; ++b) {
        int j = b, jn = (b + 1) % cells;
        m.block(j * internal, jn * internal, internal, internal) += hop_right(b);
        m.block(jn * internal, j * internal, internal, internal) += hop_left(b);
    }
    return m;
}

} // namespace

ModelParams nhti_params(double t, Complex delta, double gamma, int sites) {
    ModelParams p;
    p.kind = "nhti";
    p.values = {{"t", t},
                {"delta_re", delta.real()},
                {"delta_im", delta.imag()},
                {"gamma", gamma},
                {"sites", static_cast<double>(sites)}};
    return p;
}

ModelParams majorana_params(double t_left, double t_right, Complex pairing, double mu, int sites) {
    ModelParams p;
    p.kind = "majorana";
    p.values = {{"t_left", t_left},
                {"t_right", t_right},
                {"delta_re", pairing.real()},
                {"delta_im", pairing.imag()},
                {"mu", mu},
                {"sites", static_cast<double>(sites)}};
    return p;
}

ModelParams qsh_params(double t, double m, double lambda, double gamma, int lx, int ly, double ky) {
    ModelParams p;
    p.kind = "qsh";
    p.values = {{"t", t},       {"m", m},
                {"lambda", lambda}, {"gamma", gamma},
                {"lx", static_cast<double>(lx)}, {"ly", static_cast<double>(ly)},
                {"ky", ky}};
    return p;
}

// ---------------------------------------------------------------------------
// non-Hermitian two-band insulator chain

BlochHamiltonian build_nhti(double t, Complex delta, double gamma) {
    if (t <= 0.0) throw NonPositiveHopping("build_nhti: t must be positive");
    BlochHamiltonian bh;
    bh.spatial_dim = 1;
    bh.band_count = 2;
    bh.params = nhti_params(t, delta, gamma, 0);
    bh.evaluate = [t, delta, gamma](const KPoint& k) {
        Complex hx = -2.0 * I_UNIT * delta.imag() * std::sin(k.kx);
        Complex hy = 2.0 * I_UNIT * delta.real() * std::sin(k.kx);
        Complex hz = I_UNIT * (gamma + 2.0 * t * std::cos(k.kx));
        return two_band(0.0, hx, hy, hz);
    };
    bh.analytic_dispersion = [t, delta, gamma](const KPoint& k) {
        double s = std::sin(k.kx);
        double f = std::pow(gamma + 2.0 * t * std::cos(k.kx), 2) + 4.0 * std::norm(delta) * s * s;
        Complex e = I_UNIT * std::sqrt(f);
        return std::vector<Complex>{e, -e};
    };
    return bh;
}

namespace {

// Cell blocks of the chain read term by term from the second-quantized
// Hamiltonian, basis (a_j, b_j):
//   on-site      diag(+i gamma_j, -i gamma_j)
//   (j -> j+1)   [[ i t_b, -i conj(delta_b)], [ i delta_b, -i t_b]]
//   (j+1 -> j)   [[ i t_b,  i conj(delta_b)], [-i delta_b, -i t_b]]
// with t_b, delta_b attached to bond b = (j, j+1).
RealSpaceModel nhti_chain_impl(const std::vector<double>& t_bond,
                               const std::vector<Complex>& delta_bond,
                               const std::vector<double>& gamma_site, int sites, Boundary bc,
                               const ModelParams& params) {
    check_sites(sites);
    RealSpaceModel m;
    m.geometry = RealSpaceModel::Geometry::Chain;
    m.lx = sites;
    m.internal_dim = 2;
    m.bc_x = bc;
    m.params = params;
    auto onsite = [&](int j) {
        ComplexMatrix o = ComplexMatrix::Zero(2, 2);
        o(0, 0) = I_UNIT * gamma_site[j];
        o(1, 1) = -I_UNIT * gamma_site[j];
        return o;
    };
    auto right = [&](int b) {
        ComplexMatrix r(2, 2);
        r << I_UNIT * t_bond[b], -I_UNIT * std::conj(delta_bond[b]), I_UNIT * delta_bond[b],
            -I_UNIT * t_bond[b];
        return r;
    };
    auto left = [&](int b) {
        ComplexMatrix l(2, 2);
        l << I_UNIT * t_bond[b], I_UNIT * std::conj(delta_bond[b]), -I_UNIT * delta_bond[b],
            -I_UNIT * t_bond[b];
        return l;
    };
    m.matrix = assemble_chain(sites, 2, bc, onsite, right, left);
    return m;
}

} // namespace

RealSpaceModel build_nhti_chain(double t, Complex delta, double gamma, int sites, Boundary bc) {
    if (t <= 0.0) throw NonPositiveHopping("build_nhti_chain: t must be positive");
    std::vector<double> ts(sites, t), gs(sites, gamma);
    std::vector<Complex> ds(sites, delta);
    return nhti_chain_impl(ts, ds, gs, sites, bc, nhti_params(t, delta, gamma, sites));
}

// ---------------------------------------------------------------------------
// BdG chain with asymmetric hopping

BlochHamiltonian build_majorana(double t_left, double t_right, Complex pairing, double mu) {
    if (t_left <= 0.0 || t_right <= 0.0)
        throw NonPositiveHopping("build_majorana: hopping amplitudes must be positive");
    BlochHamiltonian bh;
    bh.spatial_dim = 1;
    bh.band_count = 2;
    bh.params = majorana_params(t_left, t_right, pairing, mu, 0);
    bh.evaluate = [=](const KPoint& k) {
        double s = std::sin(k.kx), c = std::cos(k.kx);
        Complex h0 = I_UNIT * (t_left - t_right) * s;
        Complex hx = 2.0 * pairing.imag() * s;
        Complex hy = -2.0 * pairing.real() * s;
        Complex hz = mu + (t_left + t_right) * c;
        return two_band(h0, hx, hy, hz);
    };
    bh.analytic_dispersion = [=](const KPoint& k) {
        double s = std::sin(k.kx), c = std::cos(k.kx);
        Complex h0 = I_UNIT * (t_left - t_right) * s;
        double root =
            std::sqrt(std::pow(mu + (t_left + t_right) * c, 2) + 4.0 * std::norm(pairing) * s * s);
        return std::vector<Complex>{h0 + root, h0 - root};
    };
    return bh;
}

namespace {

// Inverse Fourier transform of h0 I + h.sigma: on-site mu_j sigma_z, bond
// blocks
//   (j -> j+1)  (tL-tR)/2 I + (tL+tR)/2 sz - i Im[pair] sx + i Re[pair] sy
//   (j+1 -> j)  the e^{-ik} partner with flipped odd terms.
RealSpaceModel majorana_chain_impl(const std::vector<double>& tl_bond,
                                   const std::vector<double>& tr_bond, Complex pairing,
                                   const std::vector<double>& mu_site, int sites, Boundary bc,
                                   const ModelParams& params) {
    check_sites(sites);
    RealSpaceModel m;
    m.geometry = RealSpaceModel::Geometry::Chain;
    m.lx = sites;
    m.internal_dim = 2;
    m.bc_x = bc;
    m.params = params;
    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = id2();
    auto onsite = [&](int j) { return ComplexMatrix(mu_site[j] * sz); };
    auto right = [&](int b) {
        return ComplexMatrix(0.5 * (tl_bond[b] - tr_bond[b]) * id +
                             0.5 * (tl_bond[b] + tr_bond[b]) * sz -
                             I_UNIT * pairing.imag() * sx + I_UNIT * pairing.real() * sy);
    };
    auto left = [&](int b) {
        return ComplexMatrix(-0.5 * (tl_bond[b] - tr_bond[b]) * id +
                             0.5 * (tl_bond[b] + tr_bond[b]) * sz +
                             I_UNIT * pairing.imag() * sx - I_UNIT * pairing.real() * sy);
    };
    m.matrix = assemble_chain(sites, 2, bc, onsite, right, left);
    return m;
}

} // namespace

RealSpaceModel build_majorana_chain(double t_left, double t_right, Complex pairing, double mu,
                                    int sites, Boundary bc) {
    if (t_left <= 0.0 || t_right <= 0.0)
        throw NonPositiveHopping("build_majorana_chain: hopping amplitudes must be positive");
    std::vector<double> tl(sites, t_left), tr(sites, t_right), mus(sites, mu);
    return majorana_chain_impl(tl, tr, pairing, mus, sites, bc,
                               majorana_params(t_left, t_right, pairing, mu, sites));
}

// ---------------------------------------------------------------------------
// Dirac algebra

DiracAlgebra build_dirac_algebra() {
    DiracAlgebra d;
    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = id2();
    d.gamma[0] = kron(sz, id);
    d.gamma[1] = kron(sy, id);
    d.gamma[2] = kron(sx, sx);
    d.gamma[3] = kron(sx, sy);
    d.gamma[4] = kron(sx, sz);
    d.inversion = d.gamma[0];
    d.time_reversal_unitary = I_UNIT * kron(id, sy);
    const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            ComplexMatrix anti = d.gamma[i] * d.gamma[j] + d.gamma[j] * d.gamma[i];
            double expect = (i == j) ? 2.0 : 0.0;
            if (max_norm(ComplexMatrix(anti - expect * id4)) > 1e-14)
                throw std::logic_error("DiracAlgebra: Clifford relation violated");
            if (i < j)
                d.gamma_comm[i][j] =
                    (d.gamma[i] * d.gamma[j] - d.gamma[j] * d.gamma[i]) / (2.0 * I_UNIT);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// four-band model on the square lattice

BlochHamiltonian build_qsh(double t, double m, double lambda, double gamma) {
    static const DiracAlgebra alg = build_dirac_algebra();
    BlochHamiltonian bh;
    bh.spatial_dim = 2;
    bh.band_count = 4;
    bh.params = qsh_params(t, m, lambda, gamma, 0, 0, 0.0);
    bh.evaluate = [=](const KPoint& k) {
        double d1 = m + t * std::cos(k.kx) + t * std::cos(k.ky);
        double d2 = t * std::sin(k.ky);
        double d3 = lambda * (std::sin(k.kx) + std::sin(k.ky));
        double d5 = t * std::sin(k.kx);
        return ComplexMatrix(d1 * alg.gamma[0] + d2 * alg.gamma[1] + d3 * alg.gamma[2] +
                             d5 * alg.gamma[4] + I_UNIT * gamma * alg.gamma_comm[1][4]);
    };
    bh.analytic_dispersion = [=](const KPoint& k) {
        double d1 = m + t * std::cos(k.kx) + t * std::cos(k.ky);
        double d2 = t * std::sin(k.ky);
        double d3 = lambda * (std::sin(k.kx) + std::sin(k.ky));
        double d5 = t * std::sin(k.kx);
        double big = d1 * d1 + d2 * d2 + d3 * d3 + d5 * d5 - gamma * gamma;
        double s = std::sqrt(d1 * d1 + d3 * d3);
        Complex ep = std::sqrt(Complex(big, 2.0 * gamma * s));
        Complex em = std::sqrt(Complex(big, -2.0 * gamma * s));
        return std::vector<Complex>{ep, em, -ep, -em};
    };
    return bh;
}

namespace {

struct QshBlocks {
    ComplexMatrix sz_id, sy_id, sx_sx, sx_sz, sz_sz;
    QshBlocks() {
        sz_id = kron(pauli_z(), id2());
        sy_id = kron(pauli_y(), id2());
        sx_sx = kron(pauli_x(), pauli_x());
        sx_sz = kron(pauli_x(), pauli_z());
        sz_sz = kron(pauli_z(), pauli_z());
    }
};

const QshBlocks& qsh_blocks() {
    static const QshBlocks b;
    return b;
}

ComplexMatrix qsh_hop_x(double t, double lambda) {
    const auto& b = qsh_blocks();
    return 0.5 * (t * (b.sz_id - I_UNIT * b.sx_sz) - I_UNIT * lambda * b.sx_sx);
}

ComplexMatrix qsh_hop_y(double t, double lambda) {
    const auto& b = qsh_blocks();
    return 0.5 * (t * (b.sz_id - I_UNIT * b.sy_id) - I_UNIT * lambda * b.sx_sx);
}

RealSpaceModel qsh_cylinder_impl(double t, const std::vector<double>& m_site,
                                 const std::vector<double>& lam_site,
                                 const std::vector<double>& gam_site, int lx, double ky,
                                 Boundary bc, const ModelParams& params) {
    check_sites(lx);
    const auto& b = qsh_blocks();
    RealSpaceModel m;
    m.geometry = RealSpaceModel::Geometry::Cylinder;
    m.lx = lx;
    m.internal_dim = 4;
    m.bc_x = bc;
    m.bc_y = Boundary::Periodic;
    m.ky = ky;
    m.params = params;
    auto onsite = [&](int x) {
        return ComplexMatrix((m_site[x] + t * std::cos(ky)) * b.sz_id +
                             (t * std::sin(ky)) * b.sy_id + (lam_site[x] * std::sin(ky)) * b.sx_sx -
                             I_UNIT * gam_site[x] * b.sz_sz);
    };
    auto right = [&](int bond) { return qsh_hop_x(t, lam_site[bond]); };
    auto left = [&](int bond) { return ComplexMatrix(qsh_hop_x(t, lam_site[bond]).adjoint()); };
    m.matrix = assemble_chain(lx, 4, bc, onsite, right, left);
    return m;
}

RealSpaceModel qsh_rectangle_impl(double t, const std::vector<double>& m_site,
                                  const std::vector<double>& lam_site,
                                  const std::vector<double>& gam_site, int lx, int ly,
                                  const ModelParams& params) {
    check_sites(lx);
    check_sites(ly);
    const auto& blk = qsh_blocks();
    RealSpaceModel m;
    m.geometry = RealSpaceModel::Geometry::Rectangle;
    m.lx = lx;
    m.ly = ly;
    m.internal_dim = 4;
    m.params = params;
    const int dim = lx * ly * 4;
    m.matrix = ComplexMatrix::Zero(dim, dim);
    auto put = [&](int ci, int cj, const ComplexMatrix& blkm) {
        m.matrix.block(ci * 4, cj * 4, 4, 4) += blkm;
    };
    for (int x = 0; x < lx; ++x) {
        for (int y = 0; y < ly; ++y) {
            int c = m.cell_index(x, y);
            put(c, c, m_site[c] * blk.sz_id - I_UNIT * gam_site[c] * blk.sz_sz);
            if (x + 1 < lx) {
                ComplexMatrix hx = qsh_hop_x(t, lam_site[c]);
                put(c, m.cell_index(x + 1, y), hx);
                put(m.cell_index(x + 1, y), c, hx.adjoint());
            }
            if (y + 1 < ly) {
                ComplexMatrix hy = qsh_hop_y(t, lam_site[c]);
                put(c, m.cell_index(x, y + 1), hy);
                put(m.cell_index(x, y + 1), c, hy.adjoint());
            }
        }
    }
    return m;
}

} // namespace

RealSpaceModel build_qsh_rectangle(double t, double m, double lambda, double gamma, int lx,
                                   int ly) {
    std::vector<double> ms(lx * ly, m), ls(lx * ly, lambda), gs(lx * ly, gamma);
    return qsh_rectangle_impl(t, ms, ls, gs, lx, ly, qsh_params(t, m, lambda, gamma, lx, ly, 0.0));
}

RealSpaceModel build_qsh_cylinder(double t, double m, double lambda, double gamma, int lx,
                                  double ky, Boundary bc) {
    std::vector<double> ms(lx, m), ls(lx, lambda), gs(lx, gamma);
    return qsh_cylinder_impl(t, ms, ls, gs, lx, ky, bc, qsh_params(t, m, lambda, gamma, lx, 1, ky));
}

// ---------------------------------------------------------------------------
// continuum Dirac model and three-level system

ComplexMatrix dirac_continuum(double k, const DiracRegion& region) {
    ComplexMatrix h(2, 2);
    Complex kk(k, region.g);
    Complex mm(region.m, region.delta);
    h << 0, kk - I_UNIT * mm, kk + I_UNIT * mm, 0;
    return h;
}

ComplexMatrix build_three_level(double omega, double gamma1, double gamma2) {
    if (gamma1 < 0.0 || gamma2 < 0.0)
        throw std::invalid_argument("build_three_level: decay rates must be non-negative");
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    h(0, 0) = Complex(0, -gamma1) / 2.0;
    h(2, 2) = Complex(0, -gamma2) / 2.0;
    h(0, 1) = h(1, 0) = omega / 2.0;
    h(1, 2) = h(2, 1) = omega / 2.0;
    return h;
}

// ---------------------------------------------------------------------------
// disorder

namespace {

uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

double disorder_eps(uint64_t seed, uint64_t realization, uint64_t site, uint64_t slot) {
    uint64_t h = mix64(seed);
    h = mix64(h ^ realization);
    h = mix64(h ^ site);
    h = mix64(h ^ slot);
    return static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5;
}

RealSpaceModel build_disordered(const std::string& kind, const ModelParams& base,
                                const DisorderSpec& spec, uint64_t seed, uint64_t realization) {
    auto eps = [&](uint64_t site, uint64_t slot) {
        return disorder_eps(seed, realization, site, slot);
    };

    if (kind == "nhti") {
        int sites = static_cast<int>(base.at("sites"));
        Complex delta(base.at("delta_re"), base.at("delta_im"));
        std::vector<double> ts(sites), gs(sites);
        std::vector<Complex> ds(sites);
        for (int j = 0; j < sites; ++j) {
            ts[j] = base.at("t") + spec.get("t") * eps(j, 0);
            ds[j] = delta + spec.get("delta") * eps(j, 1);
            gs[j] = base.at("gamma") + spec.get("gamma") * eps(j, 2);
        }
        ModelParams p = base;
        p.kind = "nhti";
        RealSpaceModel m = nhti_chain_impl(ts, ds, gs, sites, Boundary::Open, p);
        m.disorder_seed = seed;
        return m;
    }
    if (kind == "majorana") {
        int sites = static_cast<int>(base.at("sites"));
        Complex pairing(base.at("delta_re"), base.at("delta_im"));
        std::vector<double> tl(sites), tr(sites), mus(sites);
        for (int j = 0; j < sites; ++j) {
            tl[j] = base.at("t_left") + spec.get("t_left") * eps(j, 0);
            tr[j] = base.at("t_right") + spec.get("t_right") * eps(j, 1);
            mus[j] = base.at("mu") + spec.get("mu") * eps(j, 2);
        }
        ModelParams p = base;
        p.kind = "majorana";
        RealSpaceModel m = majorana_chain_impl(tl, tr, pairing, mus, sites, Boundary::Open, p);
        m.disorder_seed = seed;
        return m;
    }
    if (kind == "qsh_cylinder") {
        int lx = static_cast<int>(base.at("lx"));
        std::vector<double> ms(lx), ls(lx), gs(lx);
        for (int x = 0; x < lx; ++x) {
            ms[x] = base.at("m") + spec.get("m") * eps(x, 0);
            ls[x] = base.at("lambda") + spec.get("lambda") * eps(x, 1);
            gs[x] = base.at("gamma") + spec.get("gamma") * eps(x, 2);
        }
        ModelParams p = base;
        p.kind = "qsh";
        RealSpaceModel m = qsh_cylinder_impl(base.at("t"), ms, ls, gs, lx, base.get("ky", 0.0),
                                             Boundary::Open, p);
        m.disorder_seed = seed;
        return m;
    }
    if (kind == "qsh_rectangle") {
        int lx = static_cast<int>(base.at("lx"));
        int ly = static_cast<int>(base.at("ly"));
        std::vector<double> ms(lx * ly), ls(lx * ly), gs(lx * ly);
        for (int c = 0; c < lx * ly; ++c) {
            ms[c] = base.at("m") + spec.get("m") * eps(c, 0);
            ls[c] = base.at("lambda") + spec.get("lambda") * eps(c, 1);
            gs[c] = base.at("gamma") + spec.get("gamma") * eps(c, 2);
        }
        ModelParams p = base;
        p.kind = "qsh";
        RealSpaceModel m = qsh_rectangle_impl(base.at("t"), ms, ls, gs, lx, ly, p);
        m.disorder_seed = seed;
        return m;
    }
    throw UnknownModelKind("build_disordered: unknown kind '" + kind + "'");
}

} // namespace nhtop
