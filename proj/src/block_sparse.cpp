#include "csgfcm/block_sparse.hpp"

#include "csgfcm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace csgfcm {

BlockSparseMatrix::BlockSparseMatrix(const std::vector<std::vector<int>>& columns)
{
    row_ptr_.assign(columns.size() + 1, 0);
    std::vector<int> tmp;
    for (std::size_t r = 0; r < columns.size(); ++r) {
        tmp = columns[r];
        std::sort(tmp.begin(), tmp.end());
        tmp.erase(std::unique(tmp.begin(), tmp.end()), tmp.end());
        cols_.insert(cols_.end(), tmp.begin(), tmp.end());
        row_ptr_[r + 1] = static_cast<long long>(cols_.size());
    }
    values_.assign(9 * cols_.size(), 0.0);
}

long long BlockSparseMatrix::find(int r, int s) const
{
    const auto begin = cols_.begin() + row_ptr_[r];
    const auto end = cols_.begin() + row_ptr_[r + 1];
    const auto it = std::lower_bound(begin, end, s);
    if (it == end || *it != s) return -1;
    return it - cols_.begin();
}

void BlockSparseMatrix::add(int i, int j, double value)
{
    const long long b = find(i / 3, j / 3);
    if (b < 0) throw Error("fcm-discretization", "matrix entry outside the sparsity pattern");
    block(b)[3 * (i % 3) + j % 3] += value;
}

void BlockSparseMatrix::multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const
{
    const int n = block_rows();
    y.setZero(3 * n);
    for (int r = 0; r < n; ++r) {
        double y0 = 0.0, y1 = 0.0, y2 = 0.0;
        for (long long b = row_ptr_[r]; b < row_ptr_[r + 1]; ++b) {
            const double* v = values_.data() + 9 * b;
            const double* xs = x.data() + 3 * cols_[b];
            y0 += v[0] * xs[0] + v[1] * xs[1] + v[2] * xs[2];
            y1 += v[3] * xs[0] + v[4] * xs[1] + v[5] * xs[2];
            y2 += v[6] * xs[0] + v[7] * xs[1] + v[8] * xs[2];
        }
        y[3 * r] = y0;
        y[3 * r + 1] = y1;
        y[3 * r + 2] = y2;
    }
}

Eigen::VectorXd BlockSparseMatrix::residual(const Eigen::VectorXd& x, const Eigen::VectorXd& f) const
{
    const int n = block_rows();
    Eigen::VectorXd r(3 * n);
    for (int row = 0; row < n; ++row) {
        long double acc[3] = {f[3 * row], f[3 * row + 1], f[3 * row + 2]};
        for (long long b = row_ptr_[row]; b < row_ptr_[row + 1]; ++b) {
            const double* v = values_.data() + 9 * b;
            const double* xs = x.data() + 3 * cols_[b];
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) acc[c] -= static_cast<long double>(v[3 * c + d]) * xs[d];
        }
        for (int c = 0; c < 3; ++c) r[3 * row + c] = static_cast<double>(acc[c]);
    }
    return r;
}

Eigen::VectorXd BlockSparseMatrix::diagonal() const
{
    const int n = block_rows();
    Eigen::VectorXd d = Eigen::VectorXd::Zero(3 * n);
    for (int r = 0; r < n; ++r) {
        const long long b = find(r, r);
        if (b < 0) continue;
        for (int c = 0; c < 3; ++c) d[3 * r + c] = block(b)[4 * c];
    }
    return d;
}

double BlockSparseMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

double BlockSparseMatrix::asymmetry() const
{
    double max_entry = 0.0;
    double max_diff = 0.0;
    for (int r = 0; r < block_rows(); ++r) {
        for (long long b = row_ptr_[r]; b < row_ptr_[r + 1]; ++b) {
            const int s = cols_[b];
            const long long bt = find(s, r);
            const double* v = block(b);
            for (int k = 0; k < 9; ++k) {
                max_entry = std::max(max_entry, std::abs(v[k]));
                const double vt = bt < 0 ? 0.0 : block(bt)[3 * (k % 3) + k / 3];
                max_diff = std::max(max_diff, std::abs(v[k] - vt));
            }
        }
    }
    return max_entry > 0.0 ? max_diff / max_entry : 0.0;
}

Eigen::SparseMatrix<double> BlockSparseMatrix::to_eigen() const
{
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(values_.size());
    for (int r = 0; r < block_rows(); ++r)
        for (long long b = row_ptr_[r]; b < row_ptr_[r + 1]; ++b)
            for (int k = 0; k < 9; ++k)
                if (values_[9 * b + k] != 0.0) t.emplace_back(3 * r + k / 3, 3 * cols_[b] + k % 3, values_[9 * b + k]);
    Eigen::SparseMatrix<double> m(rows(), rows());
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

} // namespace csgfcm
