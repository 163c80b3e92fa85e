#pragma once

#include <array>

#include "nhtop/lattice.hpp"

namespace nhtop {

// --- lattice models -------------------------------------------------------

// Two-band chain with asymmetric hopping it (sublattice a) / -it (sublattice
// b), staggered couplings i*delta, and balanced gain/loss i*gamma:
//   h_x = -2i Im[delta] sin k,  h_y = 2i Re[delta] sin k,
//   h_z = i (gamma + 2 t cos k),
// dispersion E = +/- i sqrt((gamma+2t cos k)^2 + 4|delta|^2 sin^2 k).
BlochHamiltonian build_nhti(double t, Complex delta, double gamma);
RealSpaceModel build_nhti_chain(double t, Complex delta, double gamma, int sites,
                                Boundary bc = Boundary::Open);

// BdG chain with asymmetric hopping t_left/t_right, p-wave pairing and
// chemical potential mu:
//   h_0 = i (tL - tR) sin k, h_x = 2 Im[pair] sin k,
//   h_y = -2 Re[pair] sin k, h_z = mu + (tL + tR) cos k.
BlochHamiltonian build_majorana(double t_left, double t_right, Complex pairing, double mu);
RealSpaceModel build_majorana_chain(double t_left, double t_right, Complex pairing, double mu,
                                    int sites, Boundary bc = Boundary::Open);

// Four-band model H = d1 G1 + d2 G2 + d3 G3 + d5 G5 + i*gamma*G25 on the
// square lattice with d1 = m + t cos kx + t cos ky, d2 = t sin ky,
// d3 = lambda (sin kx + sin ky), d5 = t sin kx.
BlochHamiltonian build_qsh(double t, double m, double lambda, double gamma);
RealSpaceModel build_qsh_cylinder(double t, double m, double lambda, double gamma, int lx,
                                  double ky, Boundary bc = Boundary::Open);
RealSpaceModel build_qsh_rectangle(double t, double m, double lambda, double gamma, int lx, int ly);

// --- Dirac algebra ---------------------------------------------------------

// G1 = sz x I, G2 = sy x I, G3 = sx x sx, G4 = sx x sy, G5 = sx x sz and the
// commutators G_ij = [G_i, G_j]/2i; P = G1; unitary part of time reversal
// T = i (I x s_y) K. All Clifford relations are verified at construction.
struct DiracAlgebra {
    std::array<ComplexMatrix, 5> gamma;
    std::array<std::array<ComplexMatrix, 5>, 5> gamma_comm; // [i][j], i<j populated
    ComplexMatrix inversion;
    ComplexMatrix time_reversal_unitary;
};
DiracAlgebra build_dirac_algebra();

// --- continuum model -------------------------------------------------------

struct DiracRegion {
    double g = 0.0;
    double m = 0.0;
    double delta = 0.0;
    bool gapped() const { return std::abs(m) > std::abs(g); }
};

// H(k) = (k + i g) sx + (m + i delta) sy; chiral partner S = sz.
ComplexMatrix dirac_continuum(double k, const DiracRegion& region);

// --- three-level system ----------------------------------------------------

// (1/2) [[-i g1, Om, 0], [Om, 0, Om], [0, Om, -i g2]] in basis (e1, g, e2).
ComplexMatrix build_three_level(double omega, double gamma1, double gamma2);

// --- disorder ---------------------------------------------------------------

// Counter-based uniform variate on [-0.5, 0.5], keyed by (seed, realization,
// site, slot); reproducible independently of evaluation order.
double disorder_eps(uint64_t seed, uint64_t realization, uint64_t site, uint64_t slot);

// Per-parameter disorder amplitudes; each disordered value is
// base + amplitude * eps. Keys follow the model parameter names; hopping
// amplitudes are drawn per bond, on-site ones per site.
struct DisorderSpec {
    std::map<std::string, double> amplitude;
    double get(const std::string& key) const {
        auto it = amplitude.find(key);
        return it == amplitude.end() ? 0.0 : it->second;
    }
};

// kind: "nhti" | "majorana" | "qsh_cylinder" | "qsh_rectangle".
RealSpaceModel build_disordered(const std::string& kind, const ModelParams& base,
                                const DisorderSpec& spec, uint64_t seed, uint64_t realization = 0);

// Convenience constructors for the parameter records.
ModelParams nhti_params(double t, Complex delta, double gamma, int sites);
ModelParams majorana_params(double t_left, double t_right, Complex pairing, double mu, int sites);
ModelParams qsh_params(double t, double m, double lambda, double gamma, int lx, int ly, double ky);

} // namespace nhtop
