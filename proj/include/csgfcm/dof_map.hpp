#pragma once

#include "csgfcm/basis.hpp"
#include "csgfcm/grid.hpp"

#include <span>
#include <vector>

namespace csgfcm {

/// Global numbering of scalar modes on the active cells.
///
/// Along each axis the 1D modes form a global sequence of `cells * p + 1`
/// slots: vertex mode of grid node i at slot i*p, bubble mode k >= 3 of cell c
/// at slot c*p + k - 2. A 3D scalar mode is a triple of slots, so modes on
/// shared vertices, edges and faces are identified by construction with one
/// orientation (the global axes). Only modes touching an active cell are kept,
/// numbered in increasing slot order.
class DofMap {
public:
    DofMap(const CellGrid& grid, const BasisSpec& spec, std::vector<int> active_cells);

    const BasisSpec& spec() const noexcept { return spec_; }
    const std::vector<int>& active_cells() const noexcept { return active_; }

    /// Scalar modes on active cells; vector dofs are 3x this.
    int scalar_count() const noexcept { return scalar_count_; }
    int dof_count() const noexcept { return 3 * scalar_count_; }

    /// Scalar modes of the full grid (no culling).
    long long full_scalar_count() const noexcept { return static_cast<long long>(slots_[0]) * slots_[1] * slots_[2]; }
    long long full_dof_count() const noexcept { return 3 * full_scalar_count(); }

    bool is_active(int cell) const noexcept { return active_index_[cell] >= 0; }
    int active_index(int cell) const noexcept { return active_index_[cell]; }

    /// Compact scalar ids of the local modes of an active cell, in
    /// BasisSpec::mode_index order.
    std::span<const int> cell_modes(int cell) const;

    int slot(int cell_coord, int mode_1d) const noexcept
    {
        if (mode_1d == 1) return cell_coord * spec_.degree;
        if (mode_1d == 2) return (cell_coord + 1) * spec_.degree;
        return cell_coord * spec_.degree + mode_1d - 2;
    }

private:
    BasisSpec spec_;
    std::vector<int> active_;
    std::vector<int> active_index_;
    std::array<int, 3> slots_{};
    int scalar_count_ = 0;
    std::vector<int> cell_modes_; // active cell index * n + local mode
};

} // namespace csgfcm
