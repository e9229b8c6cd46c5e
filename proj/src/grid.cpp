#include "csgfcm/grid.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

CellGrid::CellGrid(const Aabb& bbox, std::array<int, 3> counts) : bbox_(bbox), counts_(counts)
{
    for (int n : counts_)
        if (n < 1) throw InputError("fcm-discretization", "", "grid cell counts must be >= 1");
    if (bbox_.is_empty() || !is_finite(bbox_.lo) || !is_finite(bbox_.hi) || !(bbox_.extent().array() > 0.0).all())
        throw InputError("fcm-discretization", "", "grid bounding box must be finite with positive extent");
    h_ = (bbox_.extent().array() / Eigen::Array3d(counts_[0], counts_[1], counts_[2])).matrix();
}

CellGrid CellGrid::around(const CsgTree& tree, std::array<int, 3> counts, double relative_margin)
{
    const Aabb box = tree_bounding_box(tree);
    if (box.is_empty()) throw GeometryError("fcm-discretization", "empty model");
    return CellGrid(box.inflated(relative_margin * box.extent().maxCoeff()), counts);
}

Aabb CellGrid::cell_box(int id) const
{
    const auto c = cell_coords(id);
    const Vec3 lo = bbox_.lo + Vec3(c[0] * h_.x(), c[1] * h_.y(), c[2] * h_.z());
    return {lo, lo + h_};
}

Point3 CellGrid::to_global(int id, const Vec3& local) const
{
    const Aabb box = cell_box(id);
    return box.lo + (0.5 * (local.array() + 1.0) * h_.array()).matrix();
}

Vec3 CellGrid::to_local(int id, const Point3& p) const
{
    const Aabb box = cell_box(id);
    return (2.0 * (p - box.lo).array() / h_.array() - 1.0).matrix();
}

std::optional<int> CellGrid::locate(const Point3& p) const
{
    if (!bbox_.contains(p)) return std::nullopt;
    std::array<int, 3> c{};
    for (int a = 0; a < 3; ++a) {
        const int i = static_cast<int>(std::floor((p[a] - bbox_.lo[a]) / h_[a]));
        c[a] = std::clamp(i, 0, counts_[a] - 1);
    }
    return cell_id(c[0], c[1], c[2]);
}

void CellGrid::check_contains(const Aabb& model) const
{
    if (model.is_empty()) throw GeometryError("fcm-discretization", "empty model");
    const double tol = 1e-6 * std::max(bbox_.extent().maxCoeff(), model.extent().maxCoeff());
    if (!bbox_.contains(model, tol))
        throw InputError("fcm-discretization", "grid.bbox", "grid bounding box does not contain the model bounds");
}

std::vector<int> active_cells(const CellGrid& grid, const CsgTree& tree, int samples)
{
    if (samples < 2) throw InputError("fcm-discretization", "", "active-cell sampling needs >= 2 samples per axis");
    std::vector<int> active;
    for (int id = 0; id < grid.cell_count(); ++id) {
        bool hit = false;
        for (int k = 0; k < samples && !hit; ++k) {
            for (int j = 0; j < samples && !hit; ++j) {
                for (int i = 0; i < samples && !hit; ++i) {
                    const Vec3 local(-1.0 + 2.0 * i / (samples - 1), -1.0 + 2.0 * j / (samples - 1),
                                     -1.0 + 2.0 * k / (samples - 1));
                    hit = tree.contains(grid.to_global(id, local));
                }
            }
        }
        if (hit) active.push_back(id);
    }
    return active;
}

} // namespace csgfcm
