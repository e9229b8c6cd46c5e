#pragma once

#include "csgfcm/scene.hpp"
#include "csgfcm/vtk_io.hpp"

#include <filesystem>

namespace csgfcm {

struct RunOptions {
    std::filesystem::path output_dir = ".";
    int threads = 1;
    std::optional<int> mc_resolution;
    bool volumetric = false;
};

struct ClassifyReport {
    long long points = 0;
    long long inside = 0;
    double seconds = 0.0;
    double points_per_second() const { return seconds > 0.0 ? points / seconds : 0.0; }
};

struct DryRunReport {
    int active_cells = 0;
    int total_cells = 0;
    long long dofs = 0;
    long long full_dofs = 0;
    double dof_fraction() const { return full_dofs > 0 ? static_cast<double>(dofs) / full_dofs : 0.0; }
};

struct RunResult {
    RunSummary summary;
    std::filesystem::path vtk_path;
    std::filesystem::path summary_path;
    std::size_t zero_filled_vertices = 0;
};

/// Classifies uniformly random points in the model bounds.
ClassifyReport classify_throughput(const Scene& scene, long long points, unsigned seed = 1);

/// Culling and dof count without integration.
DryRunReport dry_run(const Scene& scene);

/// Assembles the system with all boundary conditions applied.
GlobalSystem build_system(const Scene& scene, int threads = 1);

/// Full analysis: assemble, solve, post-process, write VTK and summary.
RunResult run_scene(const Scene& scene, const RunOptions& options);

} // namespace csgfcm
