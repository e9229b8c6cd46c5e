#pragma once

#include "csgfcm/basis.hpp"
#include "csgfcm/material.hpp"
#include "csgfcm/octree.hpp"

#include <Eigen/Core>

namespace csgfcm {

/// Element matrices use interleaved local dofs: index 3*mode + component.
using ElementMatrix = Eigen::MatrixXd;
using ElementVector = Eigen::VectorXd;

/// K_e = sum over points of w * alpha * B^T C B.
ElementMatrix element_stiffness(const CellQuadrature& quad, const Vec3& cell_size, const Material& material,
                                const BasisSpec& spec);

/// f_e = sum over points of w * alpha * b N.
ElementVector element_body_load(const CellQuadrature& quad, const Vec3& cell_size, const Vec3& body_load,
                                const BasisSpec& spec);

/// Stiffness of a cell entirely inside the physical domain (single leaf,
/// gauss^3 points, alpha = 1).
ElementMatrix full_cell_stiffness(const Vec3& cell_size, const Material& material, const BasisSpec& spec, int gauss);

} // namespace csgfcm
