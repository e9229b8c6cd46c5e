#pragma once

#include "csgfcm/grid.hpp"

#include <vector>

namespace csgfcm {

/// Settings of the per-cell integration octree.
struct QuadratureOctree {
    int max_depth = 3;
    int gauss = 2;          ///< Gauss points per leaf and direction
    double alpha_exponent = 8.0; ///< alpha = 10^-q in the fictitious domain

    double fictitious_alpha() const { return std::pow(10.0, -alpha_exponent); }
    void validate() const;
};

struct QuadraturePoint {
    Vec3 local;    ///< cell-local coordinates in [-1, 1]^3
    Point3 global;
    double weight; ///< includes the cell Jacobian: sums to the cell volume
    double alpha;
};

struct CellQuadrature {
    std::vector<Aabb> leaves; ///< leaf boxes in cell-local coordinates
    std::vector<QuadraturePoint> points;

    bool fully_physical() const;
    bool fully_fictitious() const;
};

/// Adaptive octree quadrature of one cell. A leaf is split while its 8
/// corners and center disagree on membership and the depth is below
/// max_depth; every leaf carries a gauss^3 tensor Gauss rule and every point
/// the indicator alpha.
CellQuadrature octree_leaves(const CellGrid& grid, int cell, const CsgTree& tree, const QuadratureOctree& settings);

} // namespace csgfcm
