#pragma once

// Small systems shared by several test files.

#include "csgfcm/assembly.hpp"
#include "csgfcm/boundary.hpp"
#include "csgfcm/csg.hpp"
#include "csgfcm/field.hpp"

#include <optional>

namespace fixture {

using namespace csgfcm;

inline PlanarRect face(const Point3& center, const Vec3& normal, double a, double b, int resolution = 4)
{
    return {Frame::from_axes(center, normal), a, b, resolution};
}

// Unit cube on symmetry planes x = 0, y = 0, z = 0 with a uniform traction
// (0, 0, sigma) on the top face. Exact solution: uniaxial stress sigma_zz = sigma.
struct PatchTest {
    Material material{1.0, 0.3};
    double sigma = 1.0;
    CsgTree tree{make_leaf(Cuboid({0, 0, 0}, {1, 1, 1}))};

    GlobalSystem build(int degree, std::array<int, 3> cells, std::optional<double> penalty = std::nullopt) const
    {
        const CellGrid grid({{0, 0, 0}, {1, 1, 1}}, cells);
        AssemblyOptions opts;
        opts.quadrature = {0, degree + 1, 8.0};
        GlobalSystem sys = assemble(grid, tree, material, BasisSpec(degree), opts);
        neumann_load({face({0.5, 0.5, 1}, {0, 0, 1}, 1, 1), {0, 0, sigma}}, sys);
        const double beta = penalty.value_or(default_penalty(material, grid));
        const auto fix = [&](const Point3& c, const Vec3& n, int component) {
            DirichletSpec d{face(c, n, 1, 1), {}, std::nullopt};
            d.displacement[component] = 0.0;
            apply_penalty_dirichlet(d, beta, sys);
        };
        fix({0.5, 0.5, 0}, {0, 0, -1}, 2);
        fix({0, 0.5, 0.5}, {-1, 0, 0}, 0);
        fix({0.5, 0, 0.5}, {0, -1, 0}, 1);
        return sys;
    }

    // Exact displacement of the uniaxial state.
    Vec3 displacement(const Point3& p) const
    {
        const double e = material.youngs_modulus(), nu = material.poisson_ratio();
        return {-nu * sigma / e * p.x(), -nu * sigma / e * p.y(), sigma / e * p.z()};
    }

    // Strain energy of the exact solution: sigma^2 / (2E) times the volume.
    double energy() const { return sigma * sigma / (2.0 * material.youngs_modulus()); }
};

inline SolverOptions tight(SolverMethod method = SolverMethod::Pcg)
{
    SolverOptions o;
    o.method = method;
    o.tolerance = 1e-12;
    return o;
}

} // namespace fixture
