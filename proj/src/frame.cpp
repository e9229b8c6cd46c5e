#include "csgfcm/frame.hpp"

#include "csgfcm/errors.hpp"

#include <Eigen/Geometry>

namespace csgfcm {

namespace {

constexpr double kOrthoTol = 1e-12;

// Orthonormality is checked with a tolerance scaled for rounding in user
// supplied axes; frames are built from normalized vectors so the defect
// stays within a few ulps.
void check_basis(const Mat3& basis)
{
    if (!basis.allFinite()) throw GeometryError("geometry", "frame basis has non-finite entries");
    if (Frame::orthonormality_defect(basis) > 16 * kOrthoTol)
        throw GeometryError("geometry", "frame basis is not orthonormal and right-handed");
}

} // namespace

double Frame::orthonormality_defect(const Mat3& basis)
{
    const Mat3 gram = basis.transpose() * basis;
    const double ortho = (gram - Mat3::Identity()).cwiseAbs().maxCoeff();
    return ortho + std::abs(basis.determinant() - 1.0);
}

Frame Frame::from_translation(const Mat3& basis, const Vec3& translation)
{
    check_basis(basis);
    if (!is_finite(translation)) throw GeometryError("geometry", "frame translation is not finite");
    return Frame(basis, translation);
}

Frame Frame::placed_at(const Point3& origin, const Mat3& basis)
{
    check_basis(basis);
    if (!is_finite(origin)) throw GeometryError("geometry", "frame origin is not finite");
    return Frame(basis, -(basis.transpose() * origin));
}

Frame Frame::from_axes(const Point3& origin, const Vec3& z_axis, const Vec3* x_hint)
{
    const double zn = z_axis.norm();
    if (!(zn > 0.0) || !std::isfinite(zn)) throw GeometryError("geometry", "frame z axis has zero length");
    const Vec3 a3 = z_axis / zn;

    Vec3 x;
    if (x_hint != nullptr) {
        x = *x_hint - x_hint->dot(a3) * a3;
        if (x.norm() < 1e-12 * std::max(1.0, x_hint->norm()))
            throw GeometryError("geometry", "frame x axis is parallel to the z axis");
    } else {
        // Pick the global axis least aligned with z.
        Eigen::Index k;
        a3.cwiseAbs().minCoeff(&k);
        const Vec3 e = Vec3::Unit(k);
        x = e - e.dot(a3) * a3;
    }
    const Vec3 a1 = x.normalized();
    const Vec3 a2 = a3.cross(a1);

    Mat3 q;
    q.col(0) = a1;
    q.col(1) = a2;
    q.col(2) = a3;
    return placed_at(origin, q);
}

} // namespace csgfcm
