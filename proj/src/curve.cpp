#include "csgfcm/curve.hpp"

#include "csgfcm/errors.hpp"

#include <algorithm>
#include <array>

namespace csgfcm {

namespace {

std::vector<Point3> derivative_points(int degree, std::span<const double> knots, std::span<const Point3> ctrl)
{
    std::vector<Point3> out;
    if (degree < 1 || ctrl.size() < 2) return out;
    out.reserve(ctrl.size() - 1);
    for (std::size_t i = 0; i + 1 < ctrl.size(); ++i) {
        const double du = knots[i + degree + 1] - knots[i + 1];
        out.push_back(du > 0.0 ? Vec3(degree / du * (ctrl[i + 1] - ctrl[i])) : Vec3::Zero());
    }
    return out;
}

// de Boor's algorithm on the span containing xi.
Point3 de_boor(int degree, std::span<const double> knots, std::span<const Point3> ctrl, std::size_t span, double xi)
{
    std::array<Point3, 16> d{};
    std::vector<Point3> heap;
    Point3* dp = d.data();
    if (degree + 1 > static_cast<int>(d.size())) {
        heap.resize(degree + 1);
        dp = heap.data();
    }
    const std::size_t base = span - degree;
    for (int j = 0; j <= degree; ++j) dp[j] = ctrl[base + j];
    for (int r = 1; r <= degree; ++r) {
        for (int j = degree; j >= r; --j) {
            const double left = knots[base + j];
            const double right = knots[base + j + 1 + degree - r];
            const double alpha = right > left ? (xi - left) / (right - left) : 0.0;
            dp[j] = (1.0 - alpha) * dp[j - 1] + alpha * dp[j];
        }
    }
    return dp[degree];
}

void check_param(double xi)
{
    if (!(xi >= 0.0 && xi <= 1.0)) throw InputError("swept-solids", "", "curve parameter outside [0, 1]");
}

} // namespace

BSpline::BSpline(int degree, std::vector<double> knots, std::vector<Point3> control_points)
    : degree_(degree), knots_(std::move(knots)), ctrl_(std::move(control_points))
{
    const std::string mod = "swept-solids";
    if (degree_ < 1) throw InputError(mod, "", "B-spline degree must be >= 1");
    const std::size_t n = ctrl_.size();
    if (n < static_cast<std::size_t>(degree_) + 1) throw InputError(mod, "", "B-spline needs at least degree+1 control points");
    for (const auto& c : ctrl_)
        if (!is_finite(c)) throw InputError(mod, "", "B-spline control point is not finite");
    if (knots_.size() != n + degree_ + 1) throw InputError(mod, "", "knot vector length must equal control points + degree + 1");
    if (!std::is_sorted(knots_.begin(), knots_.end())) throw InputError(mod, "", "knot vector must be non-decreasing");
    for (int i = 1; i <= degree_; ++i) {
        if (knots_[i] != knots_[0] || knots_[knots_.size() - 1 - i] != knots_.back())
            throw InputError(mod, "", "knot vector must be clamped (end multiplicity degree+1)");
    }
    const double a = knots_.front();
    const double b = knots_.back();
    if (!(b > a)) throw InputError(mod, "", "knot vector spans an empty interval");
    for (double& u : knots_) u = (u - a) / (b - a);
    knots_.front() = 0.0;
    knots_.back() = 1.0;

    d1_ctrl_ = derivative_points(degree_, knots_, ctrl_);
    const std::span<const double> d1_knots(knots_.data() + 1, knots_.size() - 2);
    d2_ctrl_ = derivative_points(degree_ - 1, d1_knots, d1_ctrl_);
}

std::vector<double> BSpline::uniform_knots(int degree, std::size_t n_control)
{
    const std::size_t m = n_control + degree + 1;
    const std::size_t interior = n_control - degree - 1;
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (i <= static_cast<std::size_t>(degree)) u[i] = 0.0;
        else if (i >= n_control) u[i] = 1.0;
        else u[i] = static_cast<double>(i - degree) / static_cast<double>(interior + 1);
    }
    return u;
}

std::size_t BSpline::find_span(double xi, int degree, std::span<const double> knots, std::size_t n_ctrl) const
{
    const auto first = knots.begin() + degree;
    const auto last = knots.begin() + n_ctrl + 1;
    auto it = std::upper_bound(first, last, xi);
    std::size_t span = static_cast<std::size_t>(it - knots.begin()) - 1;
    return std::min(span, n_ctrl - 1);
}

Vec3 BSpline::evaluate(double xi, int order) const
{
    switch (order) {
    case 0:
        return de_boor(degree_, knots_, ctrl_, find_span(xi, degree_, knots_, ctrl_.size()), xi);
    case 1: {
        const std::span<const double> k1(knots_.data() + 1, knots_.size() - 2);
        return de_boor(degree_ - 1, k1, d1_ctrl_, find_span(xi, degree_ - 1, k1, d1_ctrl_.size()), xi);
    }
    case 2: {
        if (degree_ < 2) return Vec3::Zero();
        const std::span<const double> k2(knots_.data() + 2, knots_.size() - 4);
        return de_boor(degree_ - 2, k2, d2_ctrl_, find_span(xi, degree_ - 2, k2, d2_ctrl_.size()), xi);
    }
    default:
        throw InputError("swept-solids", "", "unsupported derivative order");
    }
}

Point3 curve_eval(const ParamCurve& c, double xi)
{
    check_param(xi);
    if (const auto* s = std::get_if<Segment>(&c)) return (1.0 - xi) * s->a + xi * s->b;
    return std::get<BSpline>(c).evaluate(xi, 0);
}

Vec3 curve_deriv1(const ParamCurve& c, double xi)
{
    check_param(xi);
    if (const auto* s = std::get_if<Segment>(&c)) return s->b - s->a;
    return std::get<BSpline>(c).evaluate(xi, 1);
}

Vec3 curve_deriv2(const ParamCurve& c, double xi)
{
    check_param(xi);
    if (std::holds_alternative<Segment>(c)) return Vec3::Zero();
    return std::get<BSpline>(c).evaluate(xi, 2);
}

double curve_length(const ParamCurve& c)
{
    if (const auto* s = std::get_if<Segment>(&c)) return (s->b - s->a).norm();
    // 5-point Gauss-Legendre on 64 uniform pieces.
    static constexpr std::array<double, 5> x{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                             0.9061798459386640};
    static constexpr std::array<double, 5> w{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                             0.4786286704993665, 0.2369268850561891};
    constexpr int pieces = 64;
    double len = 0.0;
    for (int k = 0; k < pieces; ++k) {
        const double a = static_cast<double>(k) / pieces;
        const double h = 1.0 / pieces;
        for (std::size_t q = 0; q < x.size(); ++q)
            len += 0.5 * h * w[q] * curve_deriv1(c, a + 0.5 * h * (x[q] + 1.0)).norm();
    }
    return len;
}

Aabb curve_bounds(const ParamCurve& c)
{
    Aabb box;
    if (const auto* s = std::get_if<Segment>(&c)) {
        box.expand(s->a);
        box.expand(s->b);
        return box;
    }
    for (const auto& p : std::get<BSpline>(c).control_points()) box.expand(p);
    return box;
}

double closest_point(const ParamCurve& c, const Point3& p, const ClosestPointOptions& options)
{
    if (options.seeds < 1) throw InputError("swept-solids", "", "closest_point needs at least one seed");

    double best_xi = 0.0;
    double best_d2 = (p - curve_eval(c, 0.0)).squaredNorm();
    auto consider = [&](double xi) {
        const double d2 = (p - curve_eval(c, xi)).squaredNorm();
        if (d2 < best_d2 || (d2 == best_d2 && xi < best_xi)) {
            best_d2 = d2;
            best_xi = xi;
        }
    };
    consider(1.0);

    for (int s = 0; s < options.seeds; ++s) {
        double xi = (s + 0.5) / options.seeds;
        bool dropped = false;
        for (int it = 0; it < options.max_iterations; ++it) {
            const Vec3 diff = p - curve_eval(c, xi);
            const Vec3 d1 = curve_deriv1(c, xi);
            const Vec3 d2 = curve_deriv2(c, xi);
            const double f = d1.dot(diff);
            const double fp = d2.dot(diff) - d1.squaredNorm();
            if (fp == 0.0 || !std::isfinite(fp) || !std::isfinite(f)) {
                dropped = true;
                break;
            }
            const double next = std::clamp(xi - f / fp, 0.0, 1.0);
            if (!std::isfinite(next)) {
                dropped = true;
                break;
            }
            const double step = std::abs(next - xi);
            xi = next;
            if (step < options.step_tolerance) break;
        }
        if (!dropped) consider(xi);
    }
    return best_xi;
}

double closest_point(const ParamCurve& c, const Point3& p, int seeds)
{
    ClosestPointOptions opt;
    opt.seeds = seeds;
    return closest_point(c, p, opt);
}

} // namespace csgfcm
