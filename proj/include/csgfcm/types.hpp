#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>

namespace csgfcm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class Classification { Inside, Outside };

inline constexpr Classification to_classification(bool inside) noexcept
{
    return inside ? Classification::Inside : Classification::Outside;
}

inline bool is_finite(const Vec3& v) noexcept
{
    return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

/// Axis-aligned box. An empty box has lo > hi in at least one component.
struct Aabb {
    Vec3 lo{Vec3::Constant(std::numeric_limits<double>::infinity())};
    Vec3 hi{Vec3::Constant(-std::numeric_limits<double>::infinity())};

    static Aabb empty() { return {}; }
    static Aabb from_corners(const Vec3& a, const Vec3& b) { return {a.cwiseMin(b), a.cwiseMax(b)}; }

    bool is_empty() const { return (lo.array() > hi.array()).any(); }
    Vec3 extent() const { return hi - lo; }
    Vec3 center() const { return 0.5 * (lo + hi); }

    bool contains(const Vec3& p) const { return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all(); }

    /// True if `other` fits inside this box up to `tol` in every direction.
    bool contains(const Aabb& other, double tol = 0.0) const
    {
        if (other.is_empty()) return true;
        return (other.lo.array() >= lo.array() - tol).all() && (other.hi.array() <= hi.array() + tol).all();
    }

    void expand(const Vec3& p)
    {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }

    Aabb inflated(double margin) const
    {
        if (is_empty()) return *this;
        return {lo.array() - margin, hi.array() + margin};
    }

    friend Aabb hull(const Aabb& a, const Aabb& b)
    {
        if (a.is_empty()) return b;
        if (b.is_empty()) return a;
        return {a.lo.cwiseMin(b.lo), a.hi.cwiseMax(b.hi)};
    }

    friend Aabb intersection(const Aabb& a, const Aabb& b)
    {
        if (a.is_empty() || b.is_empty()) return empty();
        Aabb r{a.lo.cwiseMax(b.lo), a.hi.cwiseMin(b.hi)};
        return r.is_empty() ? empty() : r;
    }
};

} // namespace csgfcm
