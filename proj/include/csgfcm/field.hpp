#pragma once

#include "csgfcm/assembly.hpp"
#include "csgfcm/material.hpp"
#include "csgfcm/solver.hpp"

namespace csgfcm {

/// Solved displacement coefficients together with the discretization they
/// belong to.
class SolutionField {
public:
    SolutionField(CellGrid grid, DofMap dofs, Eigen::VectorXd coefficients, SolverReport report = {});

    const CellGrid& grid() const noexcept { return grid_; }
    const DofMap& dofs() const noexcept { return dofs_; }
    const Eigen::VectorXd& coefficients() const noexcept { return u_; }
    const SolverReport& report() const noexcept { return report_; }

    /// Active cell containing p; throws GeometryError otherwise.
    int cell_of(const Point3& p) const;

private:
    CellGrid grid_;
    DofMap dofs_;
    Eigen::VectorXd u_;
    SolverReport report_;
};

/// Solves K u = f of an assembled system with preconditioned CG.
SolutionField solve(const GlobalSystem& system, const SolverOptions& options = {});

Vec3 eval_displacement(const SolutionField& sol, const Point3& p);
/// Symmetric gradient of the displacement.
Mat3 eval_strain(const SolutionField& sol, const Point3& p);
/// sigma = C : epsilon.
Mat3 eval_stress(const SolutionField& sol, const Point3& p, const Material& material);
Mat3 stress_from_strain(const Mat3& strain, const Material& material);
/// sqrt(3 J2) of the deviatoric part.
double von_mises(const Mat3& stress);

/// 1/2 u^T K u.
double strain_energy(const BlockSparseMatrix& k, const Eigen::VectorXd& u);

} // namespace csgfcm
