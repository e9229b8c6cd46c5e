#include "csgfcm/pipeline.hpp"

#include "csgfcm/errors.hpp"
#include "csgfcm/marching_cubes.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <random>

namespace csgfcm {

ClassifyReport classify_throughput(const Scene& scene, long long points, unsigned seed)
{
    const CsgTree tree = scene.tree();
    const Aabb box = tree_bounding_box(tree);
    if (box.is_empty()) throw GeometryError("geometry", "model bounds are empty");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(box.lo.x(), box.hi.x()), uy(box.lo.y(), box.hi.y()),
        uz(box.lo.z(), box.hi.z());
    std::vector<Point3> pts(static_cast<std::size_t>(points));
    for (auto& p : pts) p = {ux(rng), uy(rng), uz(rng)};

    ClassifyReport report;
    report.points = points;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& p : pts) report.inside += tree.contains(p) ? 1 : 0;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

DryRunReport dry_run(const Scene& scene)
{
    const CsgTree tree = scene.tree();
    const CellGrid grid = scene.grid();
    const DofMap dofs(grid, BasisSpec(scene.degree), active_cells(grid, tree, scene.active_samples));
    return {static_cast<int>(dofs.active_cells().size()), grid.cell_count(), dofs.dof_count(), dofs.full_dof_count()};
}

GlobalSystem build_system(const Scene& scene, int threads)
{
    const CsgTree tree = scene.tree();
    const CellGrid grid = scene.grid();
    const Material material = scene.material();
    AssemblyOptions opts;
    opts.quadrature = scene.quadrature();
    opts.body_load = scene.body_load;
    opts.active_samples = scene.active_samples;
    opts.threads = threads;

    GlobalSystem system = assemble(grid, tree, material, BasisSpec(scene.degree), opts);
    spdlog::info("assembled {} dofs on {}/{} active cells ({} cut)", system.dimension(), system.stats.active_cells,
                 system.stats.total_cells, system.stats.cut_cells);

    for (const auto& n : scene.neumann) {
        const Vec3 r = neumann_load(n, system);
        spdlog::debug("traction resultant ({}, {}, {})", r.x(), r.y(), r.z());
    }
    const double beta_default = default_penalty(material, grid);
    for (const auto& d : scene.dirichlet) apply_penalty_dirichlet(d, d.penalty.value_or(beta_default), system);
    return system;
}

RunResult run_scene(const Scene& scene, const RunOptions& options)
{
    std::filesystem::create_directories(options.output_dir);
    const GlobalSystem system = build_system(scene, options.threads);
    const SolutionField sol = solve(system, scene.solver);
    spdlog::info("solver converged in {} iterations, residual {:.3e}", sol.report().iterations, sol.report().residual);

    RunResult result;
    result.summary.dofs = system.dimension();
    result.summary.active_cells = system.stats.active_cells;
    result.summary.total_cells = system.stats.total_cells;
    result.summary.strain_energy = strain_energy(system.stiffness, sol.coefficients());
    result.summary.solver_iterations = sol.report().iterations;
    result.summary.residual = sol.report().residual;

    const CsgTree tree = scene.tree();
    const Material material = scene.material();
    result.vtk_path = options.output_dir / scene.post.vtk_file;
    if (options.volumetric || scene.post.volumetric) {
        export_volumetric(sol, material, tree, scene.post.volumetric_samples, result.vtk_path);
    } else {
        MarchingCubesOptions mc;
        mc.resolution = options.mc_resolution.value_or(scene.post.mc_resolution);
        mc.bisection_steps = scene.post.mc_bisection_steps;
        mc.threads = options.threads;
        Aabb box = scene.post.mc_box.value_or(Aabb{});
        if (!scene.post.mc_box) {
            const Aabb g = sol.grid().bbox();
            box = g.inflated(g.extent().maxCoeff() / mc.resolution);
        }
        TriMesh mesh = marching_cubes(tree, box, mc);
        spdlog::info("surface mesh: {} vertices, {} triangles", mesh.vertices.size(), mesh.triangles.size());
        result.zero_filled_vertices = export_results(sol, material, std::move(mesh), result.vtk_path);
    }
    result.summary_path = options.output_dir / scene.post.summary_file;
    write_summary(result.summary, result.summary_path);
    return result;
}

} // namespace csgfcm
