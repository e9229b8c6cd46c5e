#include "csgfcm/patch.hpp"

#include "csgfcm/errors.hpp"

#include <numbers>

namespace csgfcm {

void validate_patch(const SurfacePatch& patch)
{
    const std::string mod = "boundary-conditions";
    if (const auto* r = std::get_if<PlanarRect>(&patch)) {
        if (!(r->extent_a > 0.0) || !(r->extent_b > 0.0)) throw InputError(mod, "extents", "rectangle extents must be positive");
        if (r->resolution < 1) throw InputError(mod, "resolution", "resolution must be >= 1");
    } else if (const auto* d = std::get_if<Disk>(&patch)) {
        if (!(d->radius > 0.0)) throw InputError(mod, "radius", "disk radius must be positive");
        if (d->resolution < 1) throw InputError(mod, "resolution", "resolution must be >= 1");
    } else {
        const auto& s = std::get<TriangleSoup>(patch);
        if (s.triangles.empty()) throw InputError(mod, "triangles", "triangle list is empty");
        for (const auto& t : s.triangles)
            for (int i : t)
                if (i < 0 || i >= static_cast<int>(s.vertices.size()))
                    throw InputError(mod, "triangles", "triangle vertex index out of range");
    }
}

std::vector<Triangle> triangulate_patch(const SurfacePatch& patch)
{
    validate_patch(patch);
    std::vector<Triangle> out;
    if (const auto* r = std::get_if<PlanarRect>(&patch)) {
        const int m = r->resolution;
        auto at = [&](int i, int j) {
            const double x = -0.5 * r->extent_a + r->extent_a * i / m;
            const double y = -0.5 * r->extent_b + r->extent_b * j / m;
            return r->frame.to_global(Vec3(x, y, 0.0));
        };
        out.reserve(2 * m * m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) {
                out.push_back({{at(i, j), at(i + 1, j), at(i + 1, j + 1)}});
                out.push_back({{at(i, j), at(i + 1, j + 1), at(i, j + 1)}});
            }
    } else if (const auto* d = std::get_if<Disk>(&patch)) {
        const int rings = d->resolution;
        const int sectors = std::max(8, 4 * rings);
        auto at = [&](int ring, int sector) {
            const double rad = d->radius * ring / rings;
            const double phi = 2.0 * std::numbers::pi * sector / sectors;
            return d->frame.to_global(Vec3(rad * std::cos(phi), rad * std::sin(phi), 0.0));
        };
        const Point3 center = d->frame.origin();
        for (int s = 0; s < sectors; ++s) out.push_back({{center, at(1, s), at(1, s + 1)}});
        for (int ring = 1; ring < rings; ++ring)
            for (int s = 0; s < sectors; ++s) {
                out.push_back({{at(ring, s), at(ring + 1, s), at(ring + 1, s + 1)}});
                out.push_back({{at(ring, s), at(ring + 1, s + 1), at(ring, s + 1)}});
            }
    } else {
        const auto& soup = std::get<TriangleSoup>(patch);
        for (const auto& t : soup.triangles)
            out.push_back({{soup.vertices[t[0]], soup.vertices[t[1]], soup.vertices[t[2]]}});
    }
    return out;
}

} // namespace csgfcm
