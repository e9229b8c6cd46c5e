#include "csgfcm/solver.hpp"

#include "csgfcm/errors.hpp"

#include <Eigen/CholmodSupport>

#include <algorithm>
#include <fmt/ranges.h>
#include <spdlog/spdlog.h>

namespace csgfcm {

Eigen::VectorXd solve_pcg(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                          SolverReport& report)
{
    const Eigen::Index n = f.size();
    if (k.rows() != n) throw Error("solve-postprocess", "matrix and load vector sizes differ");
    report = {};
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    const double fnorm = f.norm();
    if (fnorm == 0.0) return u;

    const Eigen::VectorXd diag = k.diagonal();
    if ((diag.array() <= 0.0).any()) throw NumericalError("solve-postprocess", "stiffness diagonal is not positive");
    const Eigen::VectorXd inv_diag = diag.cwiseInverse();

    Eigen::VectorXd r = f;
    Eigen::VectorXd z = inv_diag.cwiseProduct(r);
    Eigen::VectorXd p = z;
    Eigen::VectorXd q(n);
    double rz = r.dot(z);
    double rel = 1.0;
    report.history.push_back(rel);
    int it = 0;
    int restarts = 0;
    while (it < options.max_iterations) {
        k.multiply(p, q);
        const double pq = p.dot(q);
        if (!(pq > 0.0)) throw NumericalError("solve-postprocess", "matrix is not positive definite", report.history);
        const double alpha = rz / pq;
        u.noalias() += alpha * p;
        r.noalias() -= alpha * q;
        ++it;
        rel = r.norm() / fnorm;
        report.history.push_back(rel);
        if (rel < options.tolerance) {
            // The recurrence residual drifts from the true one; restart from the true residual if needed.
            r = k.residual(u, f);
            rel = r.norm() / fnorm;
            if (rel < options.tolerance) break;
            ++restarts;
            z = inv_diag.cwiseProduct(r);
            p = z;
            rz = r.dot(z);
            continue;
        }
        z = inv_diag.cwiseProduct(r);
        const double rz_new = r.dot(z);
        p = z + (rz_new / rz) * p;
        rz = rz_new;
    }
    report.iterations = it;
    report.residual = k.residual(u, f).norm() / fnorm;
    rel = report.residual;
    spdlog::debug("pcg: {} iterations, {} restarts, residual {:.3e}", it, restarts, report.residual);
    if (!(rel < options.tolerance))
        throw NumericalError("solve-postprocess",
                             fmt::format("conjugate gradients did not converge in {} iterations (residual {:.3e})", it, rel),
                             report.history);
    return u;
}

namespace {

// Lower triangle in compressed-column form. Column j of the lower part is
// row j of the (symmetric) block matrix restricted to columns >= j.
Eigen::SparseMatrix<double> lower_triangle(const BlockSparseMatrix& k)
{
    const int n = k.rows();
    long long nnz = 0;
    for (int r = 0; r < k.block_rows(); ++r)
        for (int s : k.row_columns(r))
            if (s >= r) nnz += s > r ? 9 : 6;
    Eigen::SparseMatrix<double> lower(n, n);
    lower.reserve(nnz);
    for (int r = 0; r < k.block_rows(); ++r) {
        const auto cols = k.row_columns(r);
        for (int c = 0; c < 3; ++c) {
            const int j = 3 * r + c;
            lower.startVec(j);
            for (std::size_t e = 0; e < cols.size(); ++e) {
                const int s = cols[e];
                if (s < r) continue;
                const double* b = k.block(k.row_begin(r) + static_cast<long long>(e));
                for (int d = s == r ? c : 0; d < 3; ++d) lower.insertBack(3 * s + d, j) = b[3 * c + d];
            }
        }
    }
    lower.finalize();
    return lower;
}

} // namespace

Eigen::VectorXd solve_cholesky(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                               SolverReport& report)
{
    const Eigen::Index n = f.size();
    if (k.rows() != n) throw Error("solve-postprocess", "matrix and load vector sizes differ");
    report = {};
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    const double fnorm = f.norm();
    if (fnorm == 0.0) return u;

    Eigen::CholmodSupernodalLLT<Eigen::SparseMatrix<double>, Eigen::Lower> llt;
    {
        const Eigen::SparseMatrix<double> lower = lower_triangle(k);
        llt.compute(lower);
    }
    if (llt.info() != Eigen::Success) throw NumericalError("solve-postprocess", "Cholesky factorization failed");

    Eigen::VectorXd r = f;
    double rel = 1.0;
    report.history.push_back(rel);
    const int max_solves = std::clamp(options.max_iterations, 1, 10);
    for (int it = 0; it < max_solves; ++it) {
        u += llt.solve(r);
        ++report.iterations;
        r = k.residual(u, f);
        rel = r.norm() / fnorm;
        report.history.push_back(rel);
        if (rel < options.tolerance) break;
    }
    report.residual = rel;
    spdlog::debug("cholesky: {} solves, residual history {}", report.iterations, fmt::join(report.history, " "));
    if (!(rel < options.tolerance))
        throw NumericalError("solve-postprocess", fmt::format("Cholesky solve residual {:.3e} above tolerance", rel),
                             report.history);
    return u;
}

Eigen::VectorXd solve_linear(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                             SolverReport& report)
{
    return options.method == SolverMethod::Cholesky ? solve_cholesky(k, f, options, report)
                                                     : solve_pcg(k, f, options, report);
}

} // namespace csgfcm
