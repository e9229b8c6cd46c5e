#include "csgfcm/errors.hpp"
#include "csgfcm/pipeline.hpp"

#include <CLI11.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <thread>

namespace {

enum ExitCode { Success = 0, UsageError = 1, NumericalFailure = 2, GeometryFailure = 3 };

} // namespace

int main(int argc, char** argv)
{
    spdlog::cfg::load_env_levels();

    CLI::App app{"Finite cell analysis of CSG models"};
    app.require_subcommand(1);
    auto* run = app.add_subcommand("run", "Run a scene");

    std::string scene_path;
    std::string out_dir = ".";
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool dry = false;
    bool classify_only = false;
    bool volumetric = false;
    std::optional<int> mc_res;
    long long classify_points = 100000;

    run->add_option("scene", scene_path, "Scene file (JSON)")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--dry-run", dry, "Stop after active-cell counting");
    run->add_flag("--classify-only", classify_only, "Benchmark membership classification and stop");
    run->add_option("--classify-points", classify_points, "Points for --classify-only")->check(CLI::PositiveNumber);
    run->add_option("--mc-res", mc_res, "Marching-cubes resolution")->check(CLI::Range(2, 4096));
    run->add_flag("--volumetric", volumetric, "Write sampled volume points instead of a surface mesh");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Success : UsageError;
    }

    try {
        const csgfcm::Scene scene = csgfcm::parse_scene_file(scene_path);

        if (classify_only) {
            const auto r = csgfcm::classify_throughput(scene, classify_points);
            std::printf("points=%lld\ninside=%lld\nseconds=%.6f\npoints_per_second=%.6g\n", r.points, r.inside,
                        r.seconds, r.points_per_second());
            return Success;
        }
        if (dry) {
            const auto r = csgfcm::dry_run(scene);
            std::printf("active_cells=%d\ntotal_cells=%d\ndofs=%lld\nfull_dofs=%lld\ndof_fraction=%.6f\n",
                        r.active_cells, r.total_cells, r.dofs, r.full_dofs, r.dof_fraction());
            return Success;
        }

        csgfcm::RunOptions opts;
        opts.output_dir = out_dir;
        opts.threads = threads;
        opts.mc_resolution = mc_res;
        opts.volumetric = volumetric;
        const auto result = csgfcm::run_scene(scene, opts);
        std::printf("dofs=%lld\nstrain_energy=%.17g\nsolver_iterations=%d\nvtk=%s\nsummary=%s\n",
                    result.summary.dofs, result.summary.strain_energy, result.summary.solver_iterations,
                    result.vtk_path.string().c_str(), result.summary_path.string().c_str());
        return Success;
    } catch (const csgfcm::InputError& e) {
        spdlog::error("{}", e.what());
        return UsageError;
    } catch (const csgfcm::NumericalError& e) {
        spdlog::error("{}", e.what());
        return NumericalFailure;
    } catch (const csgfcm::GeometryError& e) {
        spdlog::error("{}", e.what());
        return GeometryFailure;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return UsageError;
    }
}
