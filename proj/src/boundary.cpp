#include "csgfcm/boundary.hpp"

#include "csgfcm/errors.hpp"
#include "csgfcm/legendre.hpp"

#include <spdlog/spdlog.h>

#include <unordered_map>

namespace csgfcm {

namespace {

// Collapsed Gauss rule with n points per direction, exact to total degree 2n - 1.
template <typename F>
void for_each_collapsed_point(const Triangle& t, int n, F&& f)
{
    const double area = t.area();
    if (area == 0.0) return;
    const GaussRule& g = gauss_legendre(n);
    for (int i = 0; i < n; ++i) {
        const double u = 0.5 * (g.points[i] + 1.0);
        for (int j = 0; j < n; ++j) {
            const double v = 0.5 * (g.points[j] + 1.0);
            const Point3 x = (1.0 - u) * t.vertices[0] + u * (1.0 - v) * t.vertices[1] + u * v * t.vertices[2];
            f(x, 0.25 * g.weights[i] * g.weights[j] * 2.0 * area * u);
        }
    }
}

// Active cell containing p; points within a round-off shell outside the grid
// box are pulled onto it.
std::optional<int> locate_active(const GlobalSystem& system, const Point3& p)
{
    const Aabb& box = system.grid.bbox();
    const double tol = 1e-9 * box.extent().maxCoeff();
    if (!box.inflated(tol).contains(p)) return std::nullopt;
    const Point3 q = p.cwiseMax(box.lo).cwiseMin(box.hi);
    const auto cell = system.grid.locate(q);
    if (!cell || !system.dofs.is_active(*cell)) return std::nullopt;
    return cell;
}

} // namespace

double default_penalty(const Material& material, const CellGrid& grid)
{
    return 1e8 * material.youngs_modulus() / grid.cell_size().minCoeff();
}

Vec3 neumann_load(const NeumannSpec& spec, GlobalSystem& system)
{
    const auto triangles = triangulate_patch(spec.patch);
    const Vec3 h = system.grid.cell_size();
    ModeTable table;
    Vec3 resultant = Vec3::Zero();
    long long used = 0;
    long long skipped = 0;
    // t·N on a face has total degree 2p.
    const int points = system.dofs.spec().degree + 1;
    for (const auto& t : triangles) {
        for_each_collapsed_point(t, points, [&](const Point3& x, double w) {
            const auto cell = locate_active(system, x);
            if (!cell) {
                ++skipped;
                return;
            }
            ++used;
            evaluate_modes(system.dofs.spec(), system.grid.to_local(*cell, x), h, table);
            const auto modes = system.dofs.cell_modes(*cell);
            for (std::size_t a = 0; a < modes.size(); ++a)
                for (int c = 0; c < 3; ++c) system.load[3 * modes[a] + c] += w * spec.traction[c] * table.values[a];
            resultant += w * spec.traction;
        });
    }
    if (used == 0) throw GeometryError("boundary-conditions", "Neumann patch outside model");
    if (skipped > 0) spdlog::warn("Neumann patch: {} quadrature points outside active cells ignored", skipped);
    return resultant;
}

void apply_penalty_dirichlet(const DirichletSpec& spec, double penalty, GlobalSystem& system)
{
    if (!(penalty > 0.0) || !std::isfinite(penalty))
        throw InputError("boundary-conditions", "penalty", "penalty parameter must be positive");
    const auto triangles = triangulate_patch(spec.patch);
    const Vec3 h = system.grid.cell_size();
    ModeTable table;
    long long used = 0;
    long long skipped = 0;
    // N_a N_b on a face has total degree 4p; a weaker rule leaves the penalty term rank deficient.
    const int points = 2 * system.dofs.spec().degree + 1;
    std::unordered_map<int, std::vector<long long>> block_index;
    for (const auto& t : triangles) {
        for_each_collapsed_point(t, points, [&](const Point3& x, double w) {
            const auto cell = locate_active(system, x);
            if (!cell) {
                ++skipped;
                return;
            }
            ++used;
            evaluate_modes(system.dofs.spec(), system.grid.to_local(*cell, x), h, table);
            const auto modes = system.dofs.cell_modes(*cell);
            const std::size_t n = modes.size();
            auto& blocks = block_index[*cell];
            if (blocks.empty()) {
                blocks.resize(n * n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) blocks[a * n + b] = system.stiffness.find(modes[a], modes[b]);
            }
            const double bw = penalty * w;
            for (std::size_t a = 0; a < n; ++a) {
                const double na = table.values[a];
                if (na == 0.0) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    const double nb = table.values[b];
                    if (nb == 0.0) continue;
                    double* blk = system.stiffness.block(blocks[a * n + b]);
                    for (int c = 0; c < 3; ++c)
                        if (spec.displacement[c]) blk[4 * c] += bw * na * nb;
                }
                for (int c = 0; c < 3; ++c)
                    if (spec.displacement[c]) system.load[3 * modes[a] + c] += bw * (*spec.displacement[c]) * na;
            }
        });
    }
    if (used == 0) throw GeometryError("boundary-conditions", "Dirichlet patch outside model");
    if (skipped > 0) spdlog::warn("Dirichlet patch: {} quadrature points outside active cells ignored", skipped);
}

} // namespace csgfcm
