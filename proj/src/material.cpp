#include "csgfcm/material.hpp"

#include "csgfcm/errors.hpp"

#include <cmath>

namespace csgfcm {

Material::Material(double youngs_modulus, double poisson_ratio) : e_(youngs_modulus), nu_(poisson_ratio)
{
    if (!(e_ > 0.0) || !std::isfinite(e_))
        throw InputError("fcm-discretization", "material.youngs_modulus", "Young's modulus must be positive");
    if (!(nu_ > -1.0 && nu_ < 0.5))
        throw InputError("fcm-discretization", "material.poisson_ratio", "Poisson ratio must lie in (-1, 0.5)");
    const double lambda = lame_lambda();
    const double mu = shear_modulus();
    c_.setZero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) c_(i, j) = lambda;
        c_(i, i) = lambda + 2.0 * mu;
        c_(i + 3, i + 3) = mu;
    }
}

} // namespace csgfcm
