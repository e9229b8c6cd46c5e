#include "csgfcm/assembly.hpp"

#include "csgfcm/errors.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <memory>
#include <thread>

namespace csgfcm {

namespace {

BlockSparseMatrix build_pattern(const DofMap& dofs)
{
    std::vector<std::vector<int>> columns(dofs.scalar_count());
    // Row r couples to every mode of every active cell containing r.
    for (int cell : dofs.active_cells()) {
        const auto modes = dofs.cell_modes(cell);
        for (int r : modes) columns[r].insert(columns[r].end(), modes.begin(), modes.end());
    }
    return BlockSparseMatrix(columns);
}

struct CellResult {
    std::shared_ptr<const ElementMatrix> stiffness;
    ElementVector load;
    bool cut = false;
    std::size_t leaves = 0;
    std::size_t points = 0;
};

} // namespace

GlobalSystem::GlobalSystem(CellGrid g, DofMap d)
    : grid(std::move(g)), dofs(std::move(d)), stiffness(build_pattern(dofs)), load(Eigen::VectorXd::Zero(dofs.dof_count()))
{
}

void GlobalSystem::add_element(int cell, const ElementMatrix& ke, const ElementVector* fe)
{
    const auto modes = dofs.cell_modes(cell);
    const int n = static_cast<int>(modes.size());
    if (ke.rows() != 3 * n || ke.cols() != 3 * n) throw Error("fcm-discretization", "element matrix size mismatch");
    for (int a = 0; a < n; ++a) {
        const int r = modes[a];
        for (int b = 0; b < n; ++b) {
            const long long blk = stiffness.find(r, modes[b]);
            double* v = stiffness.block(blk);
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) v[3 * c + d] += ke(3 * a + c, 3 * b + d);
        }
        if (fe != nullptr)
            for (int c = 0; c < 3; ++c) load[3 * r + c] += (*fe)[3 * a + c];
    }
}

GlobalSystem assemble(const CellGrid& grid, const CsgTree& tree, const Material& material, const BasisSpec& spec,
                      const AssemblyOptions& options)
{
    options.quadrature.validate();
    std::vector<int> active = active_cells(grid, tree, options.active_samples);
    if (active.empty()) throw GeometryError("fcm-discretization", "empty model: no cell intersects the physical domain");

    GlobalSystem system(grid, DofMap(grid, spec, active));
    system.stats.active_cells = static_cast<int>(active.size());
    system.stats.total_cells = grid.cell_count();
    spdlog::debug("active cells {}/{}, dofs {} (full grid {})", active.size(), grid.cell_count(),
                  system.dofs.dof_count(), system.dofs.full_dof_count());

    const Vec3 h = grid.cell_size();
    const auto full = std::make_shared<const ElementMatrix>(
        full_cell_stiffness(h, material, spec, options.quadrature.gauss));
    const auto empty =
        std::make_shared<const ElementMatrix>(options.quadrature.fictitious_alpha() * (*full));

    auto compute = [&](int cell, CellResult& out) {
        const CellQuadrature quad = octree_leaves(grid, cell, tree, options.quadrature);
        out.leaves = quad.leaves.size();
        out.points = quad.points.size();
        if (quad.fully_physical()) out.stiffness = full;
        else if (quad.fully_fictitious()) out.stiffness = empty;
        else {
            out.stiffness = std::make_shared<const ElementMatrix>(element_stiffness(quad, h, material, spec));
            out.cut = true;
        }
        out.load = element_body_load(quad, h, options.body_load, spec);
    };

    const int threads = std::max(1, options.threads);
    const std::size_t batch = static_cast<std::size_t>(threads) * 4;
    std::vector<CellResult> results;
    for (std::size_t start = 0; start < active.size(); start += batch) {
        const std::size_t count = std::min(batch, active.size() - start);
        results.assign(count, {});
        if (threads == 1) {
            for (std::size_t i = 0; i < count; ++i) compute(active[start + i], results[i]);
        } else {
            std::vector<std::exception_ptr> errors(threads);
            std::vector<std::jthread> workers;
            for (int t = 0; t < threads; ++t) {
                workers.emplace_back([&, t] {
                    try {
                        for (std::size_t i = t; i < count; i += threads) compute(active[start + i], results[i]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            workers.clear();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        // Accumulate in cell order so the result does not depend on the thread count.
        for (std::size_t i = 0; i < count; ++i) {
            system.add_element(active[start + i], *results[i].stiffness, &results[i].load);
            system.stats.cut_cells += results[i].cut ? 1 : 0;
            system.stats.leaves += static_cast<long long>(results[i].leaves);
            system.stats.quadrature_points += static_cast<long long>(results[i].points);
        }
    }
    return system;
}

} // namespace csgfcm
