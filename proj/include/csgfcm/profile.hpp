#pragma once

#include "csgfcm/types.hpp"

#include <vector>

namespace csgfcm {

/// Closed polyline in a sketch plane. The last vertex connects back to the
/// first. Construction rejects fewer than 3 vertices, repeated consecutive
/// vertices and self-intersections.
class Profile2D {
public:
    explicit Profile2D(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    /// Largest distance of a vertex from the sketch origin.
    double radius() const;

private:
    std::vector<Vec2> vertices_;
};

/// Crossing-parity test with a ray in +x from q. Points within `edge_tol`
/// of an edge are Inside.
Classification ray_cast_2d(const Profile2D& profile, const Vec2& q, double edge_tol = 1e-12);

} // namespace csgfcm
