#pragma once

#include "csgfcm/types.hpp"

namespace csgfcm {

/// Local orthonormal coordinate system A.
///
/// `basis` holds the base vectors A_1, A_2, A_3 as columns. Local coordinates
/// of a global point are its projections onto the base vectors plus the
/// translation `translation`:
///
///     P_A = (A_1·P_E, A_2·P_E, A_3·P_E) + v
///
/// A frame placed at a global point o (the usual case: a cylinder base, a
/// point on a sweep path) carries v = -Qᵀo, so that o maps to the local origin.
class Frame {
public:
    Frame() = default;

    /// Basis plus raw translation vector v. Throws GeometryError if the
    /// basis is not orthonormal and right-handed to 1e-12.
    static Frame from_translation(const Mat3& basis, const Vec3& translation);

    /// Frame whose local origin sits at the global point `origin`.
    static Frame placed_at(const Point3& origin, const Mat3& basis);

    /// Frame at `origin` with third axis along `z_axis`. The first axis is
    /// `x_hint` made orthogonal to z; without a hint a deterministic
    /// perpendicular is chosen.
    static Frame from_axes(const Point3& origin, const Vec3& z_axis, const Vec3* x_hint = nullptr);

    static Frame identity() { return {}; }

    const Mat3& basis() const noexcept { return basis_; }
    const Vec3& translation() const noexcept { return translation_; }
    Vec3 axis(int i) const { return basis_.col(i); }

    /// Global position of the local origin.
    Point3 origin() const { return -(basis_ * translation_); }

    Point3 to_local(const Point3& p) const { return basis_.transpose() * p + translation_; }
    Point3 to_global(const Point3& q) const { return basis_ * (q - translation_); }

    /// Max deviation of QᵀQ from identity plus |det - 1|.
    static double orthonormality_defect(const Mat3& basis);

private:
    Frame(const Mat3& basis, const Vec3& translation) : basis_(basis), translation_(translation) {}

    Mat3 basis_{Mat3::Identity()};
    Vec3 translation_{Vec3::Zero()};
};

inline Point3 to_local(const Frame& frame, const Point3& p) { return frame.to_local(p); }

} // namespace csgfcm
