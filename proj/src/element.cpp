#include "csgfcm/element.hpp"

#include "csgfcm/legendre.hpp"

#include <array>

namespace csgfcm {

namespace {

constexpr int kChunk = 512;

// Weighted gradient moments M^{ij}_{ab} = sum_q w_q d_i N_a d_j N_b for i <= j,
// accumulated chunk-wise as dense products.
std::array<Eigen::MatrixXd, 6> gradient_moments(const CellQuadrature& quad, const Vec3& h, const BasisSpec& spec)
{
    const int n = spec.modes_3d();
    std::array<Eigen::MatrixXd, 6> m;
    for (auto& x : m) x = Eigen::MatrixXd::Zero(n, n);

    std::array<Eigen::MatrixXd, 3> g;
    std::array<Eigen::MatrixXd, 3> wg;
    ModeTable table;
    const std::size_t total = quad.points.size();
    for (std::size_t start = 0; start < total; start += kChunk) {
        const int rows = static_cast<int>(std::min<std::size_t>(kChunk, total - start));
        for (int a = 0; a < 3; ++a) {
            g[a].resize(rows, n);
            wg[a].resize(rows, n);
        }
        for (int r = 0; r < rows; ++r) {
            const auto& q = quad.points[start + r];
            evaluate_modes(spec, q.local, h, table);
            const double w = q.weight * q.alpha;
            for (int a = 0; a < 3; ++a) {
                g[a].row(r) = table.gradients.col(a).transpose();
                wg[a].row(r) = w * table.gradients.col(a).transpose();
            }
        }
        int slot = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m[slot++].noalias() += g[i].transpose() * wg[j];
    }
    return m;
}

int moment_slot(int i, int j)
{
    static constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return table[i][j];
}

} // namespace

ElementMatrix element_stiffness(const CellQuadrature& quad, const Vec3& cell_size, const Material& material,
                                const BasisSpec& spec)
{
    const int n = spec.modes_3d();
    const auto m = gradient_moments(quad, cell_size, spec);

    ElementMatrix k = ElementMatrix::Zero(3 * n, 3 * n);
    // K_{(a,c),(b,d)} = sum_{i,j} C_{c i d j} M^{ij}_{ab}
    for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const double cc = material.tensor(c, i, d, j);
                    if (cc == 0.0) continue;
                    const auto& mij = m[moment_slot(i, j)];
                    const bool transposed = i > j;
                    for (int b = 0; b < n; ++b)
                        for (int a = 0; a < n; ++a)
                            k(3 * a + c, 3 * b + d) += cc * (transposed ? mij(b, a) : mij(a, b));
                }
            }
        }
    }
    // Symmetrize away rounding differences between the two triangles.
    ElementMatrix sym = 0.5 * (k + k.transpose());
    return sym;
}

ElementVector element_body_load(const CellQuadrature& quad, const Vec3& cell_size, const Vec3& body_load,
                                const BasisSpec& spec)
{
    const int n = spec.modes_3d();
    ElementVector f = ElementVector::Zero(3 * n);
    if (body_load.isZero(0.0)) return f;
    ModeTable table;
    for (const auto& q : quad.points) {
        evaluate_modes(spec, q.local, cell_size, table);
        const double w = q.weight * q.alpha;
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < 3; ++c) f[3 * a + c] += w * body_load[c] * table.values[a];
    }
    return f;
}

ElementMatrix full_cell_stiffness(const Vec3& cell_size, const Material& material, const BasisSpec& spec, int gauss)
{
    CellQuadrature quad;
    quad.leaves.push_back(Aabb{Vec3::Constant(-1.0), Vec3::Constant(1.0)});
    const GaussRule& rule = gauss_legendre(gauss);
    const double jac = cell_size.prod() / 8.0;
    for (int k = 0; k < gauss; ++k)
        for (int j = 0; j < gauss; ++j)
            for (int i = 0; i < gauss; ++i)
                quad.points.push_back({Vec3(rule.points[i], rule.points[j], rule.points[k]), Vec3::Zero(),
                                       rule.weights[i] * rule.weights[j] * rule.weights[k] * jac, 1.0});
    return element_stiffness(quad, cell_size, material, spec);
}

} // namespace csgfcm
