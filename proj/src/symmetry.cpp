#include "nhtop/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace nhtop {

namespace {

double wrap_to_pi(double k) {
    double w = std::remainder(k, 2.0 * M_PI);
    return w;
}

bool same_momentum(const KPoint& a, const KPoint& b, double tol = 1e-9) {
    return std::abs(wrap_to_pi(a.kx - b.kx)) < tol && std::abs(wrap_to_pi(a.ky - b.ky)) < tol;
}

// residual of the symmetry relation on a fixed pair (H(-k), H(k))
double relation_residual(const ComplexMatrix& h_minus_k, const ComplexMatrix& h_k,
                         const AntiUnitarySymmetry& a) {
    const ComplexMatrix& u = a.unitary_part;
    Complex phase = std::polar(1.0, a.phase_phi);
    ComplexMatrix lhs;
    if (a.bdg_transpose)
        lhs = u * h_minus_k.transpose() * u.adjoint();
    else if (a.conjugates)
        lhs = u * h_minus_k.conjugate() * u.adjoint();
    else
        lhs = u * h_minus_k * u.adjoint();
    return max_norm(ComplexMatrix(lhs - phase * h_k));
}

// operators equal up to a global phase?
bool phase_equivalent(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-8) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index i0 = 0, j0 = 0;
    a.cwiseAbs().maxCoeff(&i0, &j0);
    if (std::abs(b(i0, j0)) < 1e-12) return false;
    Complex phase = a(i0, j0) / b(i0, j0);
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    return max_norm(ComplexMatrix(a - phase * b)) <= tol * std::max(1.0, max_norm(a));
}

} // namespace

std::optional<int> detect_square_sign(const ComplexMatrix& u, double tol) {
    ComplexMatrix sq = u * u.conjugate();
    ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
    if (max_norm(ComplexMatrix(sq - id)) <= tol) return 1;
    if (max_norm(ComplexMatrix(sq + id)) <= tol) return -1;
    return std::nullopt;
}

AntiUnitarySymmetry make_antiunitary(const ComplexMatrix& u, double phi,
                                     std::optional<int> square_sign, bool bdg_transpose) {
    require_square_finite(u, "make_antiunitary");
    ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
    if (max_norm(ComplexMatrix(u.adjoint() * u - id)) > 1e-10)
        throw std::invalid_argument("make_antiunitary: unitary_part is not unitary");
    AntiUnitarySymmetry a;
    a.unitary_part = u;
    a.conjugates = true;
    a.phase_phi = phi;
    a.bdg_transpose = bdg_transpose;
    a.square_sign = square_sign ? square_sign : detect_square_sign(u);
    if (square_sign) {
        auto detected = detect_square_sign(u);
        if (!detected || *detected != *square_sign)
            throw WrongSquareSign("make_antiunitary: U U* does not equal the requested sign");
    }
    return a;
}

const char* to_string(AzClass c) {
    switch (c) {
        case AzClass::A: return "A";
        case AzClass::AI: return "AI";
        case AzClass::AII: return "AII";
        case AzClass::AIII: return "AIII";
        case AzClass::BDI: return "BDI";
        case AzClass::CII: return "CII";
        case AzClass::D: return "D";
        case AzClass::DIII: return "DIII";
        case AzClass::C: return "C";
        case AzClass::CI: return "CI";
        default: return "unclassified";
    }
}

const char* to_string(UnifiedClass c) {
    switch (c) {
        case UnifiedClass::A: return "A";
        case UnifiedClass::AIII: return "AIII";
        case UnifiedClass::AI_D: return "AI+D";
        case UnifiedClass::AII_C: return "AII+C";
        case UnifiedClass::BDI_DIII: return "BDI+DIII";
        case UnifiedClass::CII_CI: return "CII+CI";
        default: return "unclassified";
    }
}

UnifiedClass unify(AzClass c) {
    switch (c) {
        case AzClass::A: return UnifiedClass::A;
        case AzClass::AIII: return UnifiedClass::AIII;
        case AzClass::AI:
        case AzClass::D: return UnifiedClass::AI_D;
        case AzClass::AII:
        case AzClass::C: return UnifiedClass::AII_C;
        case AzClass::BDI:
        case AzClass::DIII: return UnifiedClass::BDI_DIII;
        case AzClass::CII:
        case AzClass::CI: return UnifiedClass::CII_CI;
        default: return UnifiedClass::Unclassified;
    }
}

UnifiedClass unify(UnifiedClass c) { return c; }

SymmetryReport check_generalized_symmetry(const ComplexMatrix& H, const AntiUnitarySymmetry& A,
                                          double tol) {
    require_square_finite(H, "check_generalized_symmetry");
    if (A.unitary_part.rows() != H.rows())
        throw DimensionMismatch("check_generalized_symmetry: operator/matrix dimensions differ");
    SymmetryReport rep;
    rep.relation_residual = relation_residual(H, H, A);
    rep.holds = rep.relation_residual <= tol * max_norm(H);
    return rep;
}

SymmetryReport check_bloch_symmetry(const BlochHamiltonian& Hk, const AntiUnitarySymmetry& A,
                                    const BzGrid& grid, double tol) {
    SymmetryReport rep;
    double residual = 0.0, scale = 0.0;
    if (Hk.spatial_dim == 1) {
        auto ks = BzGrid::axis(grid.n1);
        std::vector<ComplexMatrix> cache(ks.size());
        for (size_t j = 0; j < ks.size(); ++j) cache[j] = Hk.evaluate(KPoint(ks[j]));
        if (cache[0].rows() != A.unitary_part.rows())
            throw DimensionMismatch("check_bloch_symmetry: operator/matrix dimensions differ");
        for (size_t j = 0; j < ks.size(); ++j) {
            size_t neg = BzGrid::negate_index(static_cast<int>(j), grid.n1);
            residual = std::max(residual, relation_residual(cache[neg], cache[j], A));
            scale = std::max(scale, max_norm(cache[j]));
        }
    } else {
        int n2 = grid.n2 > 1 ? grid.n2 : grid.n1;
        auto kx = BzGrid::axis(grid.n1);
        auto ky = BzGrid::axis(n2);
        for (int jx = 0; jx < grid.n1; ++jx) {
            for (int jy = 0; jy < n2; ++jy) {
                ComplexMatrix hk = Hk.evaluate(KPoint(kx[jx], ky[jy]));
                ComplexMatrix hmk = Hk.evaluate(
                    KPoint(kx[BzGrid::negate_index(jx, grid.n1)], ky[BzGrid::negate_index(jy, n2)]));
                if (hk.rows() != A.unitary_part.rows())
                    throw DimensionMismatch("check_bloch_symmetry: operator/matrix dimensions differ");
                residual = std::max(residual, relation_residual(hmk, hk, A));
                scale = std::max(scale, max_norm(hk));
            }
        }
    }
    rep.relation_residual = residual;
    rep.holds = residual <= tol * scale;
    return rep;
}

SymmetryReport check_bloch_symmetry(const BlochHamiltonian& Hk, const AntiUnitarySymmetry& A,
                                    const std::vector<KPoint>& kpts, double tol) {
    // explicit grids must be closed under k -> -k
    std::vector<int> neg_index(kpts.size(), -1);
    for (size_t i = 0; i < kpts.size(); ++i) {
        KPoint minus(-kpts[i].kx, -kpts[i].ky);
        for (size_t j = 0; j < kpts.size(); ++j) {
            if (same_momentum(kpts[j], minus)) {
                neg_index[i] = static_cast<int>(j);
                break;
            }
        }
        if (neg_index[i] < 0)
            throw AsymmetricGrid("check_bloch_symmetry: grid not symmetric about k = 0");
    }
    SymmetryReport rep;
    double residual = 0.0, scale = 0.0;
    for (size_t i = 0; i < kpts.size(); ++i) {
        ComplexMatrix hk = Hk.evaluate(kpts[i]);
        ComplexMatrix hmk = Hk.evaluate(kpts[neg_index[i]]);
        if (hk.rows() != A.unitary_part.rows())
            throw DimensionMismatch("check_bloch_symmetry: operator/matrix dimensions differ");
        residual = std::max(residual, relation_residual(hmk, hk, A));
        scale = std::max(scale, max_norm(hk));
    }
    rep.relation_residual = residual;
    rep.holds = residual <= tol * scale;
    return rep;
}

namespace {

// chiral test S H(k) S^-1 = -H(k) at the same momentum
double chiral_residual(const BlochHamiltonian& Hk, const ComplexMatrix& s, const BzGrid& grid,
                       double& scale) {
    double residual = 0.0;
    for (const KPoint& k : grid.points(Hk.spatial_dim)) {
        ComplexMatrix h = Hk.evaluate(k);
        residual = std::max(residual, max_norm(ComplexMatrix(s * h * s.adjoint() + h)));
        scale = std::max(scale, max_norm(h));
    }
    return residual;
}

} // namespace

SymmetryReport classify_az(const BlochHamiltonian& Hk,
                           const std::vector<SymmetryCandidate>& candidates, const BzGrid& grid,
                           double tol) {
    SymmetryReport rep;
    std::optional<ComplexMatrix> t_op, c_op, s_op, p_op;
    double accepted_residual = 0.0;
    double best_rejected = std::numeric_limits<double>::infinity();

    auto accept = [&](std::optional<ComplexMatrix>& slot, const ComplexMatrix& u, double res,
                      const char* role) {
        if (slot && !phase_equivalent(*slot, u))
            throw ConflictingCandidates(std::string("classify_az: two distinct operators satisfy the ") +
                                        role + " role");
        slot = u;
        accepted_residual = std::max(accepted_residual, res);
    };

    for (const auto& cand : candidates) {
        if (std::holds_alternative<AntiUnitarySymmetry>(cand)) {
            AntiUnitarySymmetry a = std::get<AntiUnitarySymmetry>(cand);
            for (double phi : {0.0, M_PI}) {
                a.phase_phi = phi;
                SymmetryReport r = check_bloch_symmetry(Hk, a, grid, tol);
                if (r.holds) {
                    if (phi == 0.0) {
                        accept(t_op, a.unitary_part, r.relation_residual, "time-reversal");
                        rep.t_square = detect_square_sign(a.unitary_part);
                    } else {
                        accept(c_op, a.unitary_part, r.relation_residual, "particle-hole");
                        rep.c_square = detect_square_sign(a.unitary_part);
                    }
                } else {
                    best_rejected = std::min(best_rejected, r.relation_residual);
                }
            }
        } else {
            const ComplexMatrix& u = std::get<ComplexMatrix>(cand);
            double scale = 0.0;
            double rs = chiral_residual(Hk, u, grid, scale);
            if (rs <= tol * scale) {
                accept(s_op, u, rs, "chiral");
                rep.has_chiral = true;
            } else {
                best_rejected = std::min(best_rejected, rs);
            }
            AntiUnitarySymmetry inv;
            inv.unitary_part = u;
            inv.conjugates = false;
            inv.phase_phi = 0.0;
            SymmetryReport ri = check_bloch_symmetry(Hk, inv, grid, tol);
            if (ri.holds) {
                if (p_op && !phase_equivalent(*p_op, u))
                    throw ConflictingCandidates("classify_az: two distinct inversion operators");
                p_op = u;
                rep.has_inversion = true;
                accepted_residual = std::max(accepted_residual, ri.relation_residual);
            }
        }
    }

    const bool has_t = t_op.has_value() && rep.t_square.has_value();
    const bool has_c = c_op.has_value() && rep.c_square.has_value();
    const bool has_s = s_op.has_value();
    if ((t_op && !rep.t_square) || (c_op && !rep.c_square)) {
        rep.az_class = AzClass::Unclassified;
    } else if (!has_t && !has_c) {
        rep.az_class = has_s ? AzClass::AIII : AzClass::A;
    } else if (has_t && !has_c) {
        rep.az_class = (*rep.t_square == 1) ? AzClass::AI : AzClass::AII;
    } else if (!has_t && has_c) {
        rep.az_class = (*rep.c_square == 1) ? AzClass::D : AzClass::C;
    } else {
        if (*rep.t_square == 1)
            rep.az_class = (*rep.c_square == 1) ? AzClass::BDI : AzClass::CI;
        else
            rep.az_class = (*rep.c_square == 1) ? AzClass::DIII : AzClass::CII;
    }
    rep.unified_class = unify(rep.az_class);
    rep.holds = has_t || has_c || has_s || rep.has_inversion;
    rep.relation_residual = rep.holds ? accepted_residual
                                      : (std::isfinite(best_rejected) ? best_rejected : 0.0);
    return rep;
}

PairingReport verify_spectral_constraints(const ComplexVector& eigenvalues, double phi,
                                          double tol) {
    const int n = static_cast<int>(eigenvalues.size());
    Complex rot = std::polar(1.0, -phi);
    auto image = [&](Complex e) { return std::conj(e) * rot; };

    PairingReport rep;
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
        if (std::abs(eigenvalues(i) - image(eigenvalues(i))) <= tol)
            rep.self_symmetric.push_back(i);
        else
            open.push_back(i);
    }
    struct Cand {
        double d;
        int i, j;
    };
    std::vector<Cand> cands;
    for (size_t a = 0; a < open.size(); ++a)
        for (size_t b = a + 1; b < open.size(); ++b)
            cands.push_back({std::abs(eigenvalues(open[a]) - image(eigenvalues(open[b]))), open[a],
                             open[b]});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d < y.d; });
    std::vector<bool> used(n, false);
    for (const Cand& c : cands) {
        if (c.d > tol) break;
        if (used[c.i] || used[c.j]) continue;
        used[c.i] = used[c.j] = true;
        rep.pairs.emplace_back(c.i, c.j);
        rep.max_pair_distance = std::max(rep.max_pair_distance, c.d);
    }
    for (int i : open)
        if (!used[i]) rep.violations.push_back(i);
    return rep;
}

PairingReport verify_spectral_constraints(const Spectrum& spec, const AntiUnitarySymmetry& A,
                                          double tol) {
    return verify_spectral_constraints(spec.eigenvalues, A.phase_phi, tol);
}

KramersReport kramers_check(const ComplexMatrix& H, const AntiUnitarySymmetry& A, double tol) {
    if (!A.conjugates)
        throw WrongSquareSign("kramers_check: operator must be anti-unitary");
    auto sq = detect_square_sign(A.unitary_part);
    if (!sq || *sq != -1)
        throw WrongSquareSign("kramers_check: requires A^2 = -1");

    Spectrum spec = eigendecompose(H);
    const int n = static_cast<int>(spec.dim());
    Complex rot = std::polar(1.0, -A.phase_phi);
    KramersReport rep;

    std::vector<int> selfsym;
    for (int i = 0; i < n; ++i)
        if (std::abs(spec.eigenvalues(i) - std::conj(spec.eigenvalues(i)) * rot) <= tol)
            selfsym.push_back(i);
    rep.applicable = !selfsym.empty();

    // each self-symmetric eigenvalue must come with a degenerate partner
    std::vector<bool> paired(selfsym.size(), false);
    for (size_t a = 0; a < selfsym.size(); ++a) {
        if (paired[a]) continue;
        bool found = false;
        for (size_t b = a + 1; b < selfsym.size(); ++b) {
            if (paired[b]) continue;
            if (std::abs(spec.eigenvalues(selfsym[a]) - spec.eigenvalues(selfsym[b])) <= tol) {
                paired[a] = paired[b] = true;
                found = true;
                break;
            }
        }
        if (!found) rep.degeneracy_ok = false;
    }

    for (int i : selfsym) {
        ComplexVector psi = spec.right_vectors.col(i);
        ComplexVector apsi = A.unitary_part * psi.conjugate();
        rep.orthogonality_max = std::max(rep.orthogonality_max, std::abs(psi.dot(apsi)));
    }

    if (std::abs(A.phase_phi) <= 1e-12) {
        // T^2 = -1 at phi = 0: all real parts pair up two-fold
        std::vector<double> re(n);
        for (int i = 0; i < n; ++i) re[i] = spec.eigenvalues(i).real();
        std::sort(re.begin(), re.end());
        double scale = std::max(1.0, max_norm(H));
        for (int i = 0; i + 1 < n; i += 2)
            rep.realpart_residual = std::max(rep.realpart_residual, std::abs(re[i] - re[i + 1]));
        rep.realpart_pairing_ok = (n % 2 == 0) && rep.realpart_residual <= tol * scale;
    }
    return rep;
}

ComplexMatrix deform_phase(const ComplexMatrix& H, double phi) {
    return std::polar(1.0, -phi / 2.0) * H;
}

BlochHamiltonian deform_phase(const BlochHamiltonian& Hk, double phi) {
    BlochHamiltonian out = Hk;
    Complex factor = std::polar(1.0, -phi / 2.0);
    auto base_eval = Hk.evaluate;
    out.evaluate = [base_eval, factor](const KPoint& k) {
        return ComplexMatrix(factor * base_eval(k));
    };
    if (Hk.analytic_dispersion) {
        auto base_disp = Hk.analytic_dispersion;
        out.analytic_dispersion = [base_disp, factor](const KPoint& k) {
            auto es = base_disp(k);
            for (auto& e : es) e *= factor;
            return es;
        };
    }
    out.params.values["deform_phi"] = Hk.params.get("deform_phi", 0.0) + phi;
    return out;
}

} // namespace nhtop
