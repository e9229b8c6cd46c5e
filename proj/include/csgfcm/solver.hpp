#pragma once

#include "csgfcm/block_sparse.hpp"

#include <Eigen/Core>

#include <vector>

namespace csgfcm {

enum class SolverMethod { Pcg, Cholesky };

struct SolverOptions {
    SolverMethod method = SolverMethod::Pcg;
    double tolerance = 1e-10;   ///< on ||r|| / ||f||
    int max_iterations = 50000; ///< CG iterations, or refinement steps for Cholesky
};

struct SolverReport {
    int iterations = 0;
    double residual = 0.0; ///< final true relative residual ||Ku - f|| / ||f||
    std::vector<double> history;
};

/// Jacobi-preconditioned conjugate gradients. Throws NumericalError carrying
/// the residual history if the tolerance is not met within max_iterations.
Eigen::VectorXd solve_pcg(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                          SolverReport& report);

/// Sparse supernodal Cholesky followed by iterative refinement until the
/// true relative residual meets the tolerance. `iterations` counts solves.
Eigen::VectorXd solve_cholesky(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                               SolverReport& report);

/// Dispatches on options.method.
Eigen::VectorXd solve_linear(const BlockSparseMatrix& k, const Eigen::VectorXd& f, const SolverOptions& options,
                             SolverReport& report);

} // namespace csgfcm
