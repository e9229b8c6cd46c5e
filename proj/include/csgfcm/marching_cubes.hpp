#pragma once

#include "csgfcm/csg.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace csgfcm {

struct TriMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<std::string, std::vector<double>>> scalar_data;
    std::vector<std::pair<std::string, std::vector<Vec3>>> vector_data;

    double area() const;
};

/// Every undirected edge is shared by exactly two triangles and every
/// directed edge occurs once (closed, consistently oriented surface).
bool is_watertight(const TriMesh& mesh);

struct MarchingCubesOptions {
    int resolution = 64;       ///< cubes per axis
    int bisection_steps = 12;  ///< 0 places edge vertices at midpoints
    int threads = 1;
};

/// Isosurface of the membership field (Inside = 1, Outside = 0) sampled on
/// a (r+1)^3 lattice over `box`. Edge vertices are located by bisecting the
/// membership test along the lattice edge. Triangles are oriented with
/// normals pointing out of the solid.
TriMesh marching_cubes(const CsgTree& tree, const Aabb& box, const MarchingCubesOptions& options);

} // namespace csgfcm
