#include "csgfcm/dof_map.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

DofMap::DofMap(const CellGrid& grid, const BasisSpec& spec, std::vector<int> active_cells)
    : spec_(spec), active_(std::move(active_cells)), active_index_(grid.cell_count(), -1)
{
    if (active_.empty()) throw GeometryError("fcm-discretization", "empty model: no active cells");
    for (int a = 0; a < 3; ++a) slots_[a] = grid.counts()[a] * spec_.degree + 1;

    const int m = spec_.modes_1d();
    const int n = spec_.modes_3d();
    const long long total = full_scalar_count();
    std::vector<int> compact(static_cast<std::size_t>(total), -1);

    auto linear = [&](int sx, int sy, int sz) {
        return static_cast<long long>(sx) + static_cast<long long>(slots_[0]) * (sy + static_cast<long long>(slots_[1]) * sz);
    };

    cell_modes_.resize(active_.size() * n);
    for (std::size_t ai = 0; ai < active_.size(); ++ai) {
        const int cell = active_[ai];
        if (cell < 0 || cell >= grid.cell_count()) throw InputError("fcm-discretization", "", "active cell id out of range");
        active_index_[cell] = static_cast<int>(ai);
        const auto c = grid.cell_coords(cell);
        for (int k = 1; k <= m; ++k)
            for (int j = 1; j <= m; ++j)
                for (int i = 1; i <= m; ++i) {
                    const long long id = linear(slot(c[0], i), slot(c[1], j), slot(c[2], k));
                    compact[id] = 0; // mark
                    cell_modes_[ai * n + spec_.mode_index(i, j, k)] = static_cast<int>(id);
                }
    }
    int next = 0;
    for (auto& v : compact)
        if (v == 0) v = next++;
    scalar_count_ = next;
    for (auto& id : cell_modes_) id = compact[id];
}

std::span<const int> DofMap::cell_modes(int cell) const
{
    const int ai = active_index_.at(cell);
    if (ai < 0) throw GeometryError("fcm-discretization", "cell is not active");
    const std::size_t n = spec_.modes_3d();
    return {cell_modes_.data() + ai * n, n};
}

} // namespace csgfcm
