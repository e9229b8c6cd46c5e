#include "csgfcm/legendre.hpp"

#include "csgfcm/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace csgfcm {

double legendre(int n, double x)
{
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double integrated_legendre_1d(int k, double x)
{
    if (k == 1) return 0.5 * (1.0 - x);
    if (k == 2) return 0.5 * (1.0 + x);
    if (k < 1) throw InputError("fcm-discretization", "", "shape function index must be >= 1");
    return (legendre(k - 1, x) - legendre(k - 3, x)) / std::sqrt(2.0 * (2 * k - 3));
}

double integrated_legendre_1d_deriv(int k, double x)
{
    if (k == 1) return -0.5;
    if (k == 2) return 0.5;
    if (k < 1) throw InputError("fcm-discretization", "", "shape function index must be >= 1");
    return std::sqrt(0.5 * (2 * k - 3)) * legendre(k - 2, x);
}

void integrated_legendre_all(int p, double x, double* values, double* derivs)
{
    values[0] = 0.5 * (1.0 - x);
    values[1] = 0.5 * (1.0 + x);
    derivs[0] = -0.5;
    derivs[1] = 0.5;
    if (p < 2) return;
    // Legendre P_0..P_p by recurrence.
    double leg[32];
    double* l = leg;
    std::vector<double> heap;
    if (p + 1 > 32) {
        heap.resize(p + 1);
        l = heap.data();
    }
    l[0] = 1.0;
    l[1] = x;
    for (int n = 2; n <= p; ++n) l[n] = ((2 * n - 1) * x * l[n - 1] - (n - 1) * l[n - 2]) / n;
    for (int k = 3; k <= p + 1; ++k) {
        values[k - 1] = (l[k - 1] - l[k - 3]) / std::sqrt(2.0 * (2 * k - 3));
        derivs[k - 1] = std::sqrt(0.5 * (2 * k - 3)) * l[k - 2];
    }
}

namespace {

GaussRule compute_gauss(int n)
{
    GaussRule rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n starting from the Chebyshev-like guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        rule.points[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n)
{
    if (n < 1) throw InputError("fcm-discretization", "", "Gauss rule needs at least one point");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

} // namespace csgfcm
