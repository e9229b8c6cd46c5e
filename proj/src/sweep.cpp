#include "csgfcm/sweep.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

namespace {

constexpr double kFrenetCurvatureTol = 1e-10;

} // namespace

SweepSolid::SweepSolid(ParamCurve path, Profile2D profile, FrameRule rule, int newton_seeds,
                       double axial_tolerance_factor)
    : path_(std::move(path)), profile_(std::move(profile)), rule_(std::move(rule)), seeds_(newton_seeds),
      axial_factor_(axial_tolerance_factor)
{
    if (seeds_ < 1) throw InputError("swept-solids", "", "sweep needs at least one Newton seed");
    if (!(axial_factor_ >= 0.0)) throw InputError("swept-solids", "", "axial tolerance must be non-negative");
    if (const auto* r = std::get_if<ReferenceParallelRule>(&rule_)) {
        if (!(r->reference_normal.norm() > 0.0) || !is_finite(r->reference_normal))
            throw InputError("swept-solids", "", "reference normal must be a nonzero vector");
    }
    length_ = curve_length(path_);
    if (!(length_ > 0.0)) throw GeometryError("swept-solids", "sweep path has zero length");
    // Reject degenerate tangents up front at the path ends and a sample of interior points.
    for (int k = 0; k <= 64; ++k) {
        if (!(curve_deriv1(path_, k / 64.0).norm() > 0.0))
            throw GeometryError("swept-solids", "sweep path has a vanishing tangent");
    }
}

Aabb SweepSolid::bounds() const { return curve_bounds(path_).inflated(profile_.radius()); }

SweepSolid make_extrusion(const Profile2D& profile, const Point3& from, const Point3& to, const Vec3& reference_normal)
{
    return SweepSolid(Segment{from, to}, profile, ReferenceParallelRule{reference_normal});
}

Frame frame_at(const SweepSolid& s, double xi)
{
    const Vec3 d1 = curve_deriv1(s.path(), xi);
    const double speed = d1.norm();
    if (!(speed > 0.0)) throw GeometryError("swept-solids", "degenerate frame: zero path tangent");
    const Vec3 t = d1 / speed;

    Vec3 a1;
    if (std::holds_alternative<FrenetRule>(s.frame_rule())) {
        const Vec3 d2 = curve_deriv2(s.path(), xi);
        const Vec3 normal = d2 - d2.dot(t) * t;
        if (normal.norm() < kFrenetCurvatureTol)
            throw GeometryError("swept-solids",
                                "degenerate frame: Frenet normal undefined at zero curvature; use the "
                                "reference_parallel frame rule for this path");
        a1 = normal.normalized();
    } else {
        const Vec3& n = std::get<ReferenceParallelRule>(s.frame_rule()).reference_normal;
        const Vec3 c = n.cross(t);
        if (c.norm() < 1e-12 * n.norm())
            throw GeometryError("swept-solids", "degenerate frame: path tangent parallel to the reference normal");
        a1 = c.normalized();
    }
    Mat3 q;
    q.col(0) = a1;
    q.col(1) = t.cross(a1);
    q.col(2) = t;
    return Frame::placed_at(curve_eval(s.path(), xi), q);
}

Classification sweep_contains(const SweepSolid& s, const Point3& p, double eps)
{
    ClosestPointOptions opt;
    opt.seeds = s.newton_seeds();
    const double xi = closest_point(s.path(), p, opt);
    const Frame frame = frame_at(s, xi);
    const Point3 local = frame.to_local(p);
    if (std::abs(local.z()) > s.axial_tolerance() + eps) return Classification::Outside;
    return ray_cast_2d(s.profile(), local.head<2>(), std::max(1e-12, eps));
}

} // namespace csgfcm
