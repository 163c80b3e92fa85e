#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "nhtop/bloch.hpp"
#include "nhtop/spectrum.hpp"

namespace nhtop {

// Anti-unitary (or plain unitary) symmetry candidate A = U K^c with phase
// relation A H A^-1 = e^{i phi} H. For Bogoliubov-de Gennes models built from
// fermions the particle-hole relation holds with a transpose instead of the
// complex conjugation (U H(-k)^T U^-1 = -H(k)); set `bdg_transpose` to check
// that form. square_sign caches U U* = +/- I for anti-unitary candidates.
struct AntiUnitarySymmetry {
    ComplexMatrix unitary_part;
    bool conjugates = true;
    double phase_phi = 0.0;
    std::optional<int> square_sign;
    bool bdg_transpose = false;
};

// Validating constructor: checks unitarity and, when given, the square sign.
AntiUnitarySymmetry make_antiunitary(const ComplexMatrix& u, double phi,
                                     std::optional<int> square_sign = std::nullopt,
                                     bool bdg_transpose = false);
std::optional<int> detect_square_sign(const ComplexMatrix& u, double tol = 1e-10);

enum class AzClass { A, AI, AII, AIII, BDI, CII, D, DIII, C, CI, Unclassified };
enum class UnifiedClass { A, AIII, AI_D, AII_C, BDI_DIII, CII_CI, Unclassified };

const char* to_string(AzClass c);
const char* to_string(UnifiedClass c);

// Merge table for the non-Hermitian unification of the real classes:
// AI ~ D, AII ~ C, BDI ~ DIII, CII ~ CI; AIII and A map to themselves.
UnifiedClass unify(AzClass c);
UnifiedClass unify(UnifiedClass c);

struct SymmetryReport {
    double relation_residual = 0.0;
    bool holds = false;
    AzClass az_class = AzClass::Unclassified;
    UnifiedClass unified_class = UnifiedClass::Unclassified;
    // classification extras
    std::optional<int> t_square;
    std::optional<int> c_square;
    bool has_chiral = false;
    bool has_inversion = false;
};

// Residual of U H* U^-1 - e^{i phi} H (anti-unitary) or U H U^-1 - e^{i phi} H
// (unitary) in the max-norm; holds iff residual <= tol * max_norm(H).
SymmetryReport check_generalized_symmetry(const ComplexMatrix& H, const AntiUnitarySymmetry& A,
                                          double tol = 1e-8);

// Same relation momentum-resolved over a BZ grid symmetric about k = 0:
// U H*(-k) U^-1 = e^{i phi} H(k), transpose variant when bdg_transpose.
SymmetryReport check_bloch_symmetry(const BlochHamiltonian& Hk, const AntiUnitarySymmetry& A,
                                    const BzGrid& grid, double tol = 1e-8);
// Explicit k-point list; throws AsymmetricGrid when not closed under k -> -k.
SymmetryReport check_bloch_symmetry(const BlochHamiltonian& Hk, const AntiUnitarySymmetry& A,
                                    const std::vector<KPoint>& kpts, double tol = 1e-8);

// Candidates for classification: anti-unitary operators are tried in the
// time-reversal (phi = 0) and particle-hole (phi = pi) roles, unitary ones as
// chiral (S H(k) S^-1 = -H(k)) and as inversion (U H(-k) U^-1 = H(k)).
using SymmetryCandidate = std::variant<AntiUnitarySymmetry, ComplexMatrix>;

SymmetryReport classify_az(const BlochHamiltonian& Hk,
                           const std::vector<SymmetryCandidate>& candidates,
                           const BzGrid& grid = BzGrid{101, 0}, double tol = 1e-8);

// Eigenvalue pairing constraints implied by A H A^-1 = e^{i phi} H: each
// eigenvalue is either self-symmetric (E = E* e^{-i phi}) or belongs to an
// (E, E* e^{-i phi}) pair.
struct PairingReport {
    std::vector<int> self_symmetric;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> violations;
    double max_pair_distance = 0.0;
    bool holds() const { return violations.empty(); }
};
PairingReport verify_spectral_constraints(const Spectrum& spec, const AntiUnitarySymmetry& A,
                                          double tol);
PairingReport verify_spectral_constraints(const ComplexVector& eigenvalues, double phi, double tol);

// Generalized Kramers theorem for A^2 = -1: self-symmetric eigenvalues are
// two-fold degenerate with A-orthogonal partners; for phi = 0 all real parts
// of the spectrum pair up.
struct KramersReport {
    bool applicable = false;        // any self-symmetric eigenvalue found
    bool degeneracy_ok = true;      // each self-symmetric eigenvalue appears twice
    double orthogonality_max = 0.0; // max |<psi|A psi>|
    bool realpart_pairing_ok = true;
    double realpart_residual = 0.0;
};
KramersReport kramers_check(const ComplexMatrix& H, const AntiUnitarySymmetry& A, double tol);

// H_phi = e^{-i phi/2} H: rigid rotation of the spectrum by -phi/2,
// eigenvectors untouched.
ComplexMatrix deform_phase(const ComplexMatrix& H, double phi);
BlochHamiltonian deform_phase(const BlochHamiltonian& Hk, double phi);

} // namespace nhtop
