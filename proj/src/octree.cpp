#include "csgfcm/octree.hpp"

#include "csgfcm/errors.hpp"
#include "csgfcm/legendre.hpp"

namespace csgfcm {

void QuadratureOctree::validate() const
{
    if (max_depth < 0) throw InputError("fcm-discretization", "quadrature.depth", "octree depth must be >= 0");
    if (gauss < 1) throw InputError("fcm-discretization", "quadrature.gauss", "Gauss order must be >= 1");
    if (!(alpha_exponent > 0.0) || !std::isfinite(alpha_exponent))
        throw InputError("fcm-discretization", "quadrature.alpha_exponent", "alpha exponent must be positive");
}

bool CellQuadrature::fully_physical() const
{
    return leaves.size() == 1 && std::all_of(points.begin(), points.end(), [](const auto& q) { return q.alpha == 1.0; });
}

bool CellQuadrature::fully_fictitious() const
{
    return leaves.size() == 1 && std::all_of(points.begin(), points.end(), [](const auto& q) { return q.alpha != 1.0; });
}

namespace {

struct Builder {
    const CellGrid& grid;
    int cell;
    const CsgTree& tree;
    const QuadratureOctree& settings;
    const GaussRule& rule;
    double eps_alpha;
    double cell_volume;
    CellQuadrature out;

    bool inside(const Vec3& local) const { return tree.contains(grid.to_global(cell, local)); }

    bool is_cut(const Aabb& leaf) const
    {
        const bool first = inside(leaf.lo);
        for (int c = 1; c < 8; ++c) {
            const Vec3 corner((c & 1) ? leaf.hi.x() : leaf.lo.x(), (c & 2) ? leaf.hi.y() : leaf.lo.y(),
                              (c & 4) ? leaf.hi.z() : leaf.lo.z());
            if (inside(corner) != first) return true;
        }
        return inside(leaf.center()) != first;
    }

    void recurse(const Aabb& leaf, int depth)
    {
        if (depth < settings.max_depth && is_cut(leaf)) {
            const Vec3 mid = leaf.center();
            for (int c = 0; c < 8; ++c) {
                Aabb child;
                for (int a = 0; a < 3; ++a) {
                    const bool upper = (c >> a) & 1;
                    child.lo[a] = upper ? mid[a] : leaf.lo[a];
                    child.hi[a] = upper ? leaf.hi[a] : mid[a];
                }
                recurse(child, depth + 1);
            }
            return;
        }
        out.leaves.push_back(leaf);
        const Vec3 half = 0.5 * leaf.extent();
        const Vec3 center = leaf.center();
        // Leaf volume fraction of the reference cube [-1,1]^3 (volume 8).
        const double jac = half.prod() / 8.0 * cell_volume;
        const int g = settings.gauss;
        for (int k = 0; k < g; ++k) {
            for (int j = 0; j < g; ++j) {
                for (int i = 0; i < g; ++i) {
                    QuadraturePoint q;
                    q.local = center + Vec3(half.x() * rule.points[i], half.y() * rule.points[j], half.z() * rule.points[k]);
                    q.global = grid.to_global(cell, q.local);
                    q.weight = rule.weights[i] * rule.weights[j] * rule.weights[k] * jac;
                    q.alpha = tree.contains(q.global) ? 1.0 : eps_alpha;
                    out.points.push_back(q);
                }
            }
        }
    }
};

} // namespace

CellQuadrature octree_leaves(const CellGrid& grid, int cell, const CsgTree& tree, const QuadratureOctree& settings)
{
    settings.validate();
    Builder b{grid, cell, tree, settings, gauss_legendre(settings.gauss), settings.fictitious_alpha(),
              grid.cell_size().prod(), {}};
    b.recurse(Aabb{Vec3::Constant(-1.0), Vec3::Constant(1.0)}, 0);
    return std::move(b.out);
}

} // namespace csgfcm
