#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <span>
#include <vector>

namespace csgfcm {

/// Sparse matrix of 3x3 blocks with a fixed, structurally symmetric pattern.
/// Block rows/columns are scalar modes; entry (3r+c, 3s+d) lives in block
/// (r, s) at position (c, d).
class BlockSparseMatrix {
public:
    BlockSparseMatrix() = default;

    /// `columns[r]` lists the block columns of row r (any order, may repeat).
    explicit BlockSparseMatrix(const std::vector<std::vector<int>>& columns);

    int block_rows() const noexcept { return static_cast<int>(row_ptr_.empty() ? 0 : row_ptr_.size() - 1); }
    int rows() const noexcept { return 3 * block_rows(); }
    std::size_t block_count() const noexcept { return cols_.size(); }

    /// Index of block (r, s); -1 if not in the pattern.
    long long find(int r, int s) const;

    double* block(long long index) { return values_.data() + 9 * index; }
    const double* block(long long index) const { return values_.data() + 9 * index; }

    /// Adds `value` to scalar entry (i, j); the block must exist.
    void add(int i, int j, double value);

    void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    /// f - K x accumulated in extended precision.
    Eigen::VectorXd residual(const Eigen::VectorXd& x, const Eigen::VectorXd& f) const;
    Eigen::VectorXd diagonal() const;
    double frobenius_norm() const;
    /// max |K_ij - K_ji| / max |K_ij|
    double asymmetry() const;

    Eigen::SparseMatrix<double> to_eigen() const;

    std::span<const int> row_columns(int r) const
    {
        return {cols_.data() + row_ptr_[r], static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r])};
    }
    long long row_begin(int r) const { return row_ptr_[r]; }

private:
    std::vector<long long> row_ptr_;
    std::vector<int> cols_;
    std::vector<double> values_;
};

} // namespace csgfcm
