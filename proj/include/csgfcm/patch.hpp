#pragma once

#include "csgfcm/frame.hpp"

#include <array>
#include <variant>
#include <vector>

namespace csgfcm {

/// Rectangle [-a/2, a/2] x [-b/2, b/2] in the (A_1, A_2) plane of `frame`,
/// split into resolution x resolution squares of two triangles each.
struct PlanarRect {
    Frame frame;
    double extent_a;
    double extent_b;
    int resolution = 1;
};

/// Disk of `radius` centered at the frame origin in its (A_1, A_2) plane,
/// triangulated with `resolution` rings and 4*resolution sectors (at least 8).
struct Disk {
    Frame frame;
    double radius;
    int resolution = 16;
};

/// Raw triangle list for boundaries that are not planar rectangles or disks.
struct TriangleSoup {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
};

using SurfacePatch = std::variant<PlanarRect, Disk, TriangleSoup>;

struct Triangle {
    std::array<Point3, 3> vertices;

    double area() const { return 0.5 * (vertices[1] - vertices[0]).cross(vertices[2] - vertices[0]).norm(); }
    Point3 centroid() const { return (vertices[0] + vertices[1] + vertices[2]) / 3.0; }
    Vec3 normal() const { return (vertices[1] - vertices[0]).cross(vertices[2] - vertices[0]).normalized(); }
};

/// Throws InputError for non-positive extents/radius, resolution < 1 or
/// out-of-range triangle indices.
void validate_patch(const SurfacePatch& patch);

std::vector<Triangle> triangulate_patch(const SurfacePatch& patch);

} // namespace csgfcm
