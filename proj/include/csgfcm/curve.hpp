#pragma once

#include "csgfcm/types.hpp"

#include <span>
#include <variant>
#include <vector>

namespace csgfcm {

/// Straight segment a -> b, parametrized over [0, 1].
struct Segment {
    Point3 a;
    Point3 b;
};

/// Clamped, non-rational B-spline curve. Knots are normalized to [0, 1] on
/// construction so that the parameter domain is always the unit interval.
class BSpline {
public:
    BSpline(int degree, std::vector<double> knots, std::vector<Point3> control_points);

    /// Uniform clamped knot vector for the given control-point count.
    static std::vector<double> uniform_knots(int degree, std::size_t n_control);

    int degree() const noexcept { return degree_; }
    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<Point3>& control_points() const noexcept { return ctrl_; }

    /// Derivative of order 0, 1 or 2 at xi.
    Vec3 evaluate(double xi, int order = 0) const;

private:
    std::size_t find_span(double xi, int degree, std::span<const double> knots, std::size_t n_ctrl) const;

    int degree_;
    std::vector<double> knots_;
    std::vector<Point3> ctrl_;
    // Derivative curves: control points and knots (knots trimmed at both ends).
    std::vector<Point3> d1_ctrl_;
    std::vector<Point3> d2_ctrl_;
};

using ParamCurve = std::variant<Segment, BSpline>;

/// Throws InputError if xi is outside [0, 1].
Point3 curve_eval(const ParamCurve& c, double xi);
Vec3 curve_deriv1(const ParamCurve& c, double xi);
Vec3 curve_deriv2(const ParamCurve& c, double xi);

/// Arc length by composite Gauss-Legendre quadrature of |C'|.
double curve_length(const ParamCurve& c);

/// Conservative bounds: segment endpoints or the control-point hull.
Aabb curve_bounds(const ParamCurve& c);

struct ClosestPointOptions {
    int seeds = 8;
    int max_iterations = 50;
    double step_tolerance = 1e-12;
};

/// Parameter of the point on `c` closest to `p`.
///
/// Multi-start Newton on f(xi) = C'(xi)·(P - C(xi)) seeded at the midpoints of
/// `seeds` uniform subintervals, iterates clamped to [0, 1]. Both endpoints are
/// always candidates; the candidate with the smallest distance wins, ties go
/// to the smallest parameter.
double closest_point(const ParamCurve& c, const Point3& p, const ClosestPointOptions& options = {});
double closest_point(const ParamCurve& c, const Point3& p, int seeds);

} // namespace csgfcm
