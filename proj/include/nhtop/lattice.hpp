#pragma once

#include <optional>

#include "nhtop/bloch.hpp"

namespace nhtop {

enum class Boundary { Open, Periodic };

// Finite lattice Hamiltonian. Geometry is a chain (lx cells), a cylinder
// (open x, transverse momentum ky) or a rectangle (open x and y). Cell
// ordering is x-major, (x, y) -> x*ly + y, with internal_dim components per
// cell; the chain sublattice order is (a_1, b_1, a_2, b_2, ...).
struct RealSpaceModel {
    enum class Geometry { Chain, Cylinder, Rectangle };

    Geometry geometry = Geometry::Chain;
    int lx = 0;
    int ly = 1;
    double ky = 0.0; // cylinder transverse momentum
    int internal_dim = 1;
    Boundary bc_x = Boundary::Open;
    Boundary bc_y = Boundary::Open;
    ComplexMatrix matrix;
    ModelParams params;
    std::optional<uint64_t> disorder_seed;

    int site_count() const { return lx * ly; }
    int dim() const { return site_count() * internal_dim; }
    int cell_index(int x, int y = 0) const { return x * ly + y; }
};

} // namespace nhtop
