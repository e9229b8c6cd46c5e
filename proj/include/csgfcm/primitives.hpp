#pragma once

#include "csgfcm/frame.hpp"
#include "csgfcm/types.hpp"

namespace csgfcm {

// Analytic primitives. Every primitive is a closed body: boundary points
// classify Inside. `eps` inflates the comparisons (0 = exact).

class Sphere {
public:
    Sphere(const Point3& center, double radius);

    const Point3& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

    Aabb bounds() const { return {center_.array() - radius_, center_.array() + radius_}; }

private:
    Point3 center_;
    double radius_;
};

class Cuboid {
public:
    Cuboid(const Point3& p_start, const Point3& p_end);

    const Point3& p_start() const noexcept { return start_; }
    const Point3& p_end() const noexcept { return end_; }

    Aabb bounds() const { return {start_, end_}; }

private:
    Point3 start_;
    Point3 end_;
};

/// Cylinder in a local frame: axis along the third base vector, base disk
/// centered at the local origin, extending to local z = height.
class Cylinder {
public:
    Cylinder(const Frame& frame, double radius, double height);

    const Frame& frame() const noexcept { return frame_; }
    double radius() const noexcept { return radius_; }
    double height() const noexcept { return height_; }

    Aabb bounds() const;

private:
    Frame frame_;
    double radius_;
    double height_;
};

Classification sphere_contains(const Sphere& s, const Point3& p, double eps = 0.0);
Classification cuboid_contains(const Cuboid& c, const Point3& p, double eps = 0.0);
Classification cylinder_contains(const Cylinder& c, const Point3& p, double eps = 0.0);

} // namespace csgfcm
