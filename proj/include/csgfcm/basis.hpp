#pragma once

#include "csgfcm/types.hpp"

#include <Eigen/Core>

namespace csgfcm {

/// Full tensor-product space of integrated Legendre modes of degree p.
struct BasisSpec {
    int degree = 1;

    explicit BasisSpec(int p = 1);

    int modes_1d() const noexcept { return degree + 1; }
    int modes_3d() const noexcept { return modes_1d() * modes_1d() * modes_1d(); }

    /// Local mode index for 1-based 1D mode indices (i, j, k); i runs fastest.
    int mode_index(int i, int j, int k) const noexcept { return (i - 1) + modes_1d() * ((j - 1) + modes_1d() * (k - 1)); }
};

struct ShapeValue {
    double value;
    Vec3 gradient; // with respect to the local coordinates (xi, eta, zeta)
};

/// N_ijk(xi, eta, zeta) = N_i(xi) N_j(eta) N_k(zeta) and its local gradient.
ShapeValue shape_3d(const BasisSpec& spec, int i, int j, int k, const Vec3& local);

/// Map a local gradient to global coordinates for an axis-aligned cell with
/// edge lengths `h` (Jacobian diag(h/2)).
inline Vec3 to_global_gradient(const Vec3& local_gradient, const Vec3& h)
{
    return (2.0 * local_gradient.array() / h.array()).matrix();
}

/// All modes of a cell at one point: values (n) and global gradients (n x 3).
struct ModeTable {
    Eigen::VectorXd values;
    Eigen::Matrix<double, Eigen::Dynamic, 3> gradients;
};

void evaluate_modes(const BasisSpec& spec, const Vec3& local, const Vec3& h, ModeTable& out);

} // namespace csgfcm
