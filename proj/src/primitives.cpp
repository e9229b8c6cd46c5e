#include "csgfcm/primitives.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

Sphere::Sphere(const Point3& center, double radius) : center_(center), radius_(radius)
{
    if (!is_finite(center)) throw GeometryError("geometry", "sphere center is not finite");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw GeometryError("geometry", "sphere radius must be positive");
}

Cuboid::Cuboid(const Point3& p_start, const Point3& p_end) : start_(p_start), end_(p_end)
{
    if (!is_finite(p_start) || !is_finite(p_end)) throw GeometryError("geometry", "cuboid corners are not finite");
    if ((p_start.array() > p_end.array()).any())
        throw GeometryError("geometry", "cuboid p_start must be componentwise <= p_end");
}

Cylinder::Cylinder(const Frame& frame, double radius, double height) : frame_(frame), radius_(radius), height_(height)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw GeometryError("geometry", "cylinder radius must be positive");
    if (!(height > 0.0) || !std::isfinite(height)) throw GeometryError("geometry", "cylinder height must be positive");
}

Aabb Cylinder::bounds() const
{
    // Each end disk spans radius * sqrt(1 - axis_i^2) along global axis i.
    const Vec3 axis = frame_.axis(2);
    const Vec3 reach = radius_ * (Vec3::Ones() - axis.cwiseAbs2()).cwiseMax(0.0).cwiseSqrt();
    const Point3 base = frame_.origin();
    const Point3 top = base + height_ * axis;
    Aabb box = Aabb::from_corners(base - reach, base + reach);
    box = hull(box, Aabb::from_corners(top - reach, top + reach));
    return box;
}

Classification sphere_contains(const Sphere& s, const Point3& p, double eps)
{
    return to_classification((p - s.center()).norm() <= s.radius() + eps);
}

Classification cuboid_contains(const Cuboid& c, const Point3& p, double eps)
{
    const bool inside = (p.array() >= c.p_start().array() - eps).all() && (p.array() <= c.p_end().array() + eps).all();
    return to_classification(inside);
}

Classification cylinder_contains(const Cylinder& c, const Point3& p, double eps)
{
    const Point3 local = c.frame().to_local(p);
    const double radial = local.head<2>().norm();
    return to_classification(radial <= c.radius() + eps && local.z() >= -eps && local.z() <= c.height() + eps);
}

} // namespace csgfcm
