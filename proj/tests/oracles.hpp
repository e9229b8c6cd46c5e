#pragma once

// Reference computations used by the tests. They deliberately avoid the
// library's own code paths (recursive basis functions instead of de Boor,
// winding numbers instead of crossing parity, textbook trilinear hexahedra).

#include "csgfcm/types.hpp"

#include <cmath>
#include <vector>

namespace oracle {

using csgfcm::Mat3;
using csgfcm::Point3;
using csgfcm::Vec2;
using csgfcm::Vec3;

// Cox-de Boor basis function N_{i,p}(u) and its derivatives, by recursion.
// The last non-empty span is closed on the right so that u = 1 is covered.
inline double basis(const std::vector<double>& U, int i, int p, double u)
{
    if (p == 0) {
        const double a = U[i], b = U[i + 1];
        if (a < b && u >= a && u < b) return 1.0;
        if (a < b && u == b && b == U.back()) {
            // only the last non-empty interval owns the right end
            for (std::size_t k = i + 1; k + 1 < U.size(); ++k)
                if (U[k] < U[k + 1]) return 0.0;
            return 1.0;
        }
        return 0.0;
    }
    double left = 0.0, right = 0.0;
    if (U[i + p] > U[i]) left = (u - U[i]) / (U[i + p] - U[i]) * basis(U, i, p - 1, u);
    if (U[i + p + 1] > U[i + 1]) right = (U[i + p + 1] - u) / (U[i + p + 1] - U[i + 1]) * basis(U, i + 1, p - 1, u);
    return left + right;
}

inline double basis_deriv(const std::vector<double>& U, int i, int p, double u, int order)
{
    if (order == 0) return basis(U, i, p, u);
    double d = 0.0;
    if (U[i + p] > U[i]) d += p / (U[i + p] - U[i]) * basis_deriv(U, i, p - 1, u, order - 1);
    if (U[i + p + 1] > U[i + 1]) d -= p / (U[i + p + 1] - U[i + 1]) * basis_deriv(U, i + 1, p - 1, u, order - 1);
    return d;
}

struct Spline {
    int p;
    std::vector<double> U;
    std::vector<Point3> P;

    Vec3 eval(double u, int order = 0) const
    {
        Vec3 c = Vec3::Zero();
        for (std::size_t i = 0; i < P.size(); ++i) c += basis_deriv(U, static_cast<int>(i), p, u, order) * P[i];
        return c;
    }
};

inline std::vector<double> clamped_uniform(int p, std::size_t n)
{
    std::vector<double> U;
    const int spans = static_cast<int>(n) - p;
    for (int i = 0; i <= p; ++i) U.push_back(0.0);
    for (int i = 1; i < spans; ++i) U.push_back(static_cast<double>(i) / spans);
    for (int i = 0; i <= p; ++i) U.push_back(1.0);
    return U;
}

// Winding number of a closed polygon around q (nonzero means inside).
inline int winding_number(const std::vector<Vec2>& poly, const Vec2& q)
{
    int wn = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const double cross = (b.x() - a.x()) * (q.y() - a.y()) - (q.x() - a.x()) * (b.y() - a.y());
        if (a.y() <= q.y()) {
            if (b.y() > q.y() && cross > 0) ++wn;
        } else if (b.y() <= q.y() && cross < 0) {
            --wn;
        }
    }
    return wn;
}

// Frame columns (A1, A2, A3) of the moving frame.
inline Mat3 frenet_frame(const Vec3& d1, const Vec3& d2)
{
    const Vec3 t = d1.normalized();
    const Vec3 n = (d2 - d2.dot(t) * t).normalized();
    Mat3 q;
    q.col(0) = n;
    q.col(1) = t.cross(n);
    q.col(2) = t;
    return q;
}

inline Mat3 reference_parallel_frame(const Vec3& d1, const Vec3& normal)
{
    const Vec3 t = d1.normalized();
    const Vec3 a1 = normal.cross(t).normalized();
    Mat3 q;
    q.col(0) = a1;
    q.col(1) = t.cross(a1);
    q.col(2) = t;
    return q;
}

// 24x24 stiffness of a trilinear hexahedron [0,hx]x[0,hy]x[0,hz] by 2x2x2
// Gauss quadrature of B^T C B. Node (sx, sy, sz) in {-1,1}^3 is numbered
// a = (sx+1)/2 + 2 (sy+1)/2 + 4 (sz+1)/2, dof 3a + component.
inline Eigen::MatrixXd trilinear_hex_stiffness(const Vec3& h, double e, double nu)
{
    const double lam = e * nu / ((1 + nu) * (1 - 2 * nu));
    const double mu = e / (2 * (1 + nu));
    Eigen::Matrix<double, 6, 6> c = Eigen::Matrix<double, 6, 6>::Zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) c(i, j) = lam;
        c(i, i) = lam + 2 * mu;
        c(i + 3, i + 3) = mu;
    }
    const double g = 1.0 / std::sqrt(3.0);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(24, 24);
    for (double xi : {-g, g})
        for (double eta : {-g, g})
            for (double zeta : {-g, g}) {
                Eigen::Matrix<double, 6, 24> b = Eigen::Matrix<double, 6, 24>::Zero();
                for (int a = 0; a < 8; ++a) {
                    const double sx = (a & 1) ? 1 : -1, sy = (a & 2) ? 1 : -1, sz = (a & 4) ? 1 : -1;
                    const double dx = 0.125 * sx * (1 + sy * eta) * (1 + sz * zeta) * 2 / h.x();
                    const double dy = 0.125 * sy * (1 + sx * xi) * (1 + sz * zeta) * 2 / h.y();
                    const double dz = 0.125 * sz * (1 + sx * xi) * (1 + sy * eta) * 2 / h.z();
                    // Voigt rows: xx, yy, zz, yz, xz, xy
                    b(0, 3 * a) = dx;
                    b(1, 3 * a + 1) = dy;
                    b(2, 3 * a + 2) = dz;
                    b(3, 3 * a + 1) = dz;
                    b(3, 3 * a + 2) = dy;
                    b(4, 3 * a) = dz;
                    b(4, 3 * a + 2) = dx;
                    b(5, 3 * a) = dy;
                    b(5, 3 * a + 1) = dx;
                }
                k += b.transpose() * c * b * (h.x() * h.y() * h.z() / 8.0);
            }
    return k;
}

} // namespace oracle
