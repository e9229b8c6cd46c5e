#pragma once

#include "csgfcm/block_sparse.hpp"
#include "csgfcm/dof_map.hpp"
#include "csgfcm/element.hpp"

#include <Eigen/Core>

namespace csgfcm {

struct AssemblyStats {
    int active_cells = 0;
    int total_cells = 0;
    int cut_cells = 0;        ///< cells integrated with the octree (not a cached full/empty cell)
    long long leaves = 0;
    long long quadrature_points = 0;
};

/// Assembled linear system of the extended weak form on the active cells.
struct GlobalSystem {
    CellGrid grid;
    DofMap dofs;
    BlockSparseMatrix stiffness;
    Eigen::VectorXd load;
    AssemblyStats stats;

    GlobalSystem(CellGrid g, DofMap d);

    int dimension() const noexcept { return dofs.dof_count(); }

    /// Scatter-adds an element matrix/vector (interleaved local dofs) of an active cell.
    void add_element(int cell, const ElementMatrix& ke, const ElementVector* fe = nullptr);
};

struct AssemblyOptions {
    QuadratureOctree quadrature;
    Vec3 body_load = Vec3::Zero();
    int active_samples = 5;
    int threads = 1;
};

/// Culls cells, integrates every active cell and assembles K and f.
/// Throws GeometryError("empty model") when no cell is active.
GlobalSystem assemble(const CellGrid& grid, const CsgTree& tree, const Material& material, const BasisSpec& spec,
                      const AssemblyOptions& options);

} // namespace csgfcm
