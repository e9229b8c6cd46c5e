#pragma once

#include <Eigen/Core>

namespace csgfcm {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Isotropic linear elastic material.
///
/// Voigt order: xx, yy, zz, yz, xz, xy with engineering shear strains.
class Material {
public:
    Material(double youngs_modulus, double poisson_ratio);

    double youngs_modulus() const noexcept { return e_; }
    double poisson_ratio() const noexcept { return nu_; }
    double lame_lambda() const noexcept { return e_ * nu_ / ((1.0 + nu_) * (1.0 - 2.0 * nu_)); }
    double shear_modulus() const noexcept { return e_ / (2.0 * (1.0 + nu_)); }

    const Matrix6& voigt() const noexcept { return c_; }

    /// Fourth-order tensor component C_ijkl.
    double tensor(int i, int j, int k, int l) const noexcept { return c_(voigt_index(i, j), voigt_index(k, l)); }

    static int voigt_index(int i, int j) noexcept
    {
        if (i == j) return i;
        const int s = i + j; // 1 -> xy, 2 -> xz, 3 -> yz
        return s == 3 ? 3 : (s == 2 ? 4 : 5);
    }

private:
    double e_;
    double nu_;
    Matrix6 c_;
};

} // namespace csgfcm
