#include "csgfcm/basis.hpp"

#include "csgfcm/errors.hpp"
#include "csgfcm/legendre.hpp"

namespace csgfcm {

BasisSpec::BasisSpec(int p) : degree(p)
{
    if (p < 1 || p > 30) throw InputError("fcm-discretization", "", "polynomial degree must be in [1, 30]");
}

ShapeValue shape_3d(const BasisSpec& spec, int i, int j, int k, const Vec3& local)
{
    const int m = spec.modes_1d();
    if (i < 1 || j < 1 || k < 1 || i > m || j > m || k > m)
        throw InputError("fcm-discretization", "", "mode index out of range");
    const double nx = integrated_legendre_1d(i, local.x());
    const double ny = integrated_legendre_1d(j, local.y());
    const double nz = integrated_legendre_1d(k, local.z());
    const double dx = integrated_legendre_1d_deriv(i, local.x());
    const double dy = integrated_legendre_1d_deriv(j, local.y());
    const double dz = integrated_legendre_1d_deriv(k, local.z());
    return {nx * ny * nz, Vec3(dx * ny * nz, nx * dy * nz, nx * ny * dz)};
}

void evaluate_modes(const BasisSpec& spec, const Vec3& local, const Vec3& h, ModeTable& out)
{
    const int m = spec.modes_1d();
    double v[3][32];
    double d[3][32];
    for (int a = 0; a < 3; ++a) integrated_legendre_all(spec.degree, local[a], v[a], d[a]);
    const Vec3 scale = (2.0 / h.array()).matrix();
    out.values.resize(spec.modes_3d());
    out.gradients.resize(spec.modes_3d(), 3);
    int idx = 0;
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
            const double vjk = v[1][j] * v[2][k];
            const double djk = d[1][j] * v[2][k];
            const double vjdk = v[1][j] * d[2][k];
            for (int i = 0; i < m; ++i, ++idx) {
                out.values[idx] = v[0][i] * vjk;
                out.gradients(idx, 0) = d[0][i] * vjk * scale.x();
                out.gradients(idx, 1) = v[0][i] * djk * scale.y();
                out.gradients(idx, 2) = v[0][i] * vjdk * scale.z();
            }
        }
    }
}

} // namespace csgfcm
