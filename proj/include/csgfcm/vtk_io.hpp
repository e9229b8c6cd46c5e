#pragma once

#include "csgfcm/field.hpp"
#include "csgfcm/marching_cubes.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace csgfcm {

/// Writes a legacy ASCII VTK unstructured grid of triangles with the mesh's
/// point data channels. Throws IoError if the file cannot be written.
void write_vtk(const TriMesh& mesh, const std::filesystem::path& path);

/// Reads back a file produced by write_vtk or export_volumetric (vertex
/// cells are skipped).
TriMesh read_vtk(const std::filesystem::path& path);

/// Attaches "displacement" and "von_mises" point data evaluated from the
/// solution and writes the mesh. Vertices outside active cells get zeros
/// (a warning reports how many). Returns the number of zero-filled vertices.
std::size_t export_results(const SolutionField& sol, const Material& material, TriMesh mesh,
                           const std::filesystem::path& path);

/// Volumetric alternative: samples `per_cell`^3 points in every active cell,
/// keeps those inside the model and writes them as VTK vertices with the
/// same data channels.
void export_volumetric(const SolutionField& sol, const Material& material, const CsgTree& tree, int per_cell,
                       const std::filesystem::path& path);

/// Ordered key/value run summary.
struct RunSummary {
    long long dofs = 0;
    int active_cells = 0;
    int total_cells = 0;
    double strain_energy = 0.0;
    int solver_iterations = 0;
    double residual = 0.0;
};

void write_summary(const RunSummary& summary, const std::filesystem::path& path);
std::map<std::string, std::string> read_summary(const std::filesystem::path& path);

} // namespace csgfcm
