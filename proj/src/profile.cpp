#include "csgfcm/profile.hpp"

#include "csgfcm/errors.hpp"

#include <algorithm>

namespace csgfcm {

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

int orientation(const Vec2& a, const Vec2& b, const Vec2& c)
{
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p)
{
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= p.y() &&
           p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2)
{
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

double segment_distance(const Vec2& a, const Vec2& b, const Vec2& p)
{
    const Vec2 ab = b - a;
    const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    return (a + t * ab - p).norm();
}

} // namespace

Profile2D::Profile2D(std::vector<Vec2> vertices) : vertices_(std::move(vertices))
{
    const std::string mod = "swept-solids";
    const std::size_t n = vertices_.size();
    if (n < 3) throw InputError(mod, "", "profile needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (!vertices_[i].allFinite()) throw InputError(mod, "", "profile vertex is not finite");
        if (vertices_[i] == vertices_[(i + 1) % n]) throw InputError(mod, "", "profile has repeated consecutive vertices");
    }
    // Non-adjacent edge pairs must not touch.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j], vertices_[(j + 1) % n]))
                throw InputError(mod, "", "profile is self-intersecting");
        }
    }
    // Adjacent edges folding back onto each other also self-intersect.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        const Vec2& c = vertices_[(i + 2) % n];
        if (orientation(a, b, c) == 0 && (c - b).dot(a - b) > 0.0)
            throw InputError(mod, "", "profile is self-intersecting");
    }
}

double Profile2D::radius() const
{
    double r = 0.0;
    for (const auto& v : vertices_) r = std::max(r, v.norm());
    return r;
}

Classification ray_cast_2d(const Profile2D& profile, const Vec2& q, double edge_tol)
{
    const auto& v = profile.vertices();
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = v[j];
        const Vec2& b = v[i];
        if (segment_distance(a, b, q) <= edge_tol) return Classification::Inside;
        // Half-open rule: one endpoint strictly above the ray, the other at or below.
        if ((a.y() > q.y()) != (b.y() > q.y())) {
            const double x_cross = a.x() + (q.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
            if (x_cross > q.x()) inside = !inside;
        }
    }
    return to_classification(inside);
}

} // namespace csgfcm
