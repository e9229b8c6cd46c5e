#pragma once

#include "csgfcm/curve.hpp"
#include "csgfcm/frame.hpp"
#include "csgfcm/profile.hpp"

#include <variant>

namespace csgfcm {

/// Frenet frame: first base vector is the principal normal.
struct FrenetRule {};

/// First base vector = normalize(reference_normal × tangent), i.e. it always
/// lies in a plane parallel to the reference plane.
struct ReferenceParallelRule {
    Vec3 reference_normal;
};

using FrameRule = std::variant<FrenetRule, ReferenceParallelRule>;

/// Closed 2D profile moved along a path. The profile lives in the (A_1, A_2)
/// plane of the moving frame; A_3 follows the path tangent.
class SweepSolid {
public:
    /// `axial_tolerance_factor` scales the path length to give the end-cap
    /// tolerance on the local axial coordinate.
    SweepSolid(ParamCurve path, Profile2D profile, FrameRule rule, int newton_seeds = 8,
               double axial_tolerance_factor = 1e-9);

    const ParamCurve& path() const noexcept { return path_; }
    const Profile2D& profile() const noexcept { return profile_; }
    const FrameRule& frame_rule() const noexcept { return rule_; }
    int newton_seeds() const noexcept { return seeds_; }
    double axial_tolerance_factor() const noexcept { return axial_factor_; }
    double path_length() const noexcept { return length_; }
    double axial_tolerance() const noexcept { return axial_factor_ * length_; }

    Aabb bounds() const;

private:
    ParamCurve path_;
    Profile2D profile_;
    FrameRule rule_;
    int seeds_;
    double axial_factor_;
    double length_;
};

/// Profile swept along the straight segment from -> to, with the profile's
/// first axis fixed by `reference_normal` (ReferenceParallel rule).
SweepSolid make_extrusion(const Profile2D& profile, const Point3& from, const Point3& to, const Vec3& reference_normal);

/// Moving frame at xi: origin C(xi), third axis along the unit tangent.
/// Throws GeometryError for a degenerate tangent, a Frenet frame at a point of
/// vanishing curvature, or a tangent parallel to the reference normal.
Frame frame_at(const SweepSolid& s, double xi);

Classification sweep_contains(const SweepSolid& s, const Point3& p, double eps = 0.0);

} // namespace csgfcm
