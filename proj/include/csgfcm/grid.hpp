#pragma once

#include "csgfcm/csg.hpp"
#include "csgfcm/types.hpp"

#include <array>
#include <optional>
#include <vector>

namespace csgfcm {

/// Uniform Cartesian grid of cells over the embedding domain.
class CellGrid {
public:
    CellGrid(const Aabb& bbox, std::array<int, 3> counts);

    /// Grid around a model: the tree bounds inflated by `relative_margin`
    /// times the largest extent.
    static CellGrid around(const CsgTree& tree, std::array<int, 3> counts, double relative_margin = 1e-6);

    const Aabb& bbox() const noexcept { return bbox_; }
    const std::array<int, 3>& counts() const noexcept { return counts_; }
    const Vec3& cell_size() const noexcept { return h_; }
    int cell_count() const noexcept { return counts_[0] * counts_[1] * counts_[2]; }

    int cell_id(int ix, int iy, int iz) const noexcept { return ix + counts_[0] * (iy + counts_[1] * iz); }
    std::array<int, 3> cell_coords(int id) const noexcept
    {
        return {id % counts_[0], (id / counts_[0]) % counts_[1], id / (counts_[0] * counts_[1])};
    }
    Aabb cell_box(int id) const;

    Point3 to_global(int id, const Vec3& local) const;
    Vec3 to_local(int id, const Point3& p) const;

    /// Cell containing p (points on interior faces go to the upper cell,
    /// points on the outer faces to the boundary cell); nullopt outside bbox.
    std::optional<int> locate(const Point3& p) const;

    /// Throws InputError unless bbox contains `model` up to 1e-6 of the largest extent.
    void check_contains(const Aabb& model) const;

private:
    Aabb bbox_;
    std::array<int, 3> counts_;
    Vec3 h_;
};

/// Cells with at least one Inside sample on a `samples`^3 lattice spanning
/// the closed cell (faces included). Sorted by cell id.
std::vector<int> active_cells(const CellGrid& grid, const CsgTree& tree, int samples = 5);

} // namespace csgfcm
