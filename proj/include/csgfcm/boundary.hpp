#pragma once

#include "csgfcm/assembly.hpp"
#include "csgfcm/material.hpp"
#include "csgfcm/patch.hpp"

#include <array>
#include <optional>

namespace csgfcm {

/// Weak Dirichlet data enforced by the penalty method on a patch.
struct DirichletSpec {
    SurfacePatch patch;
    std::array<std::optional<double>, 3> displacement; ///< constrained components only
    std::optional<double> penalty;                      ///< default: default_penalty()
};

/// Prescribed traction on a patch (force per unit area).
struct NeumannSpec {
    SurfacePatch patch;
    Vec3 traction = Vec3::Zero();
};

/// beta = 1e8 * E / h_min.
double default_penalty(const Material& material, const CellGrid& grid);

/// f += integral over the patch of t·N, exact for the polynomial integrand.
/// Returns the resultant force added. Throws GeometryError if no quadrature
/// point of the patch falls into an active cell.
Vec3 neumann_load(const NeumannSpec& spec, GlobalSystem& system);

/// K += beta * integral N_c N_c^T, f += beta * integral u_c N_c for each
/// constrained component c.
void apply_penalty_dirichlet(const DirichletSpec& spec, double penalty, GlobalSystem& system);

} // namespace csgfcm
