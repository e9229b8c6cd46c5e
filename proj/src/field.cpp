#include "csgfcm/field.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

SolutionField::SolutionField(CellGrid grid, DofMap dofs, Eigen::VectorXd coefficients, SolverReport report)
    : grid_(std::move(grid)), dofs_(std::move(dofs)), u_(std::move(coefficients)), report_(std::move(report))
{
    if (u_.size() != dofs_.dof_count()) throw Error("solve-postprocess", "coefficient vector length does not match the dof map");
}

int SolutionField::cell_of(const Point3& p) const
{
    const auto cell = grid_.locate(p);
    if (!cell || !dofs_.is_active(*cell)) throw GeometryError("solve-postprocess", "point outside computational domain");
    return *cell;
}

SolutionField solve(const GlobalSystem& system, const SolverOptions& options)
{
    SolverReport report;
    Eigen::VectorXd u = solve_linear(system.stiffness, system.load, options, report);
    return SolutionField(system.grid, system.dofs, std::move(u), std::move(report));
}

Vec3 eval_displacement(const SolutionField& sol, const Point3& p)
{
    const int cell = sol.cell_of(p);
    ModeTable table;
    evaluate_modes(sol.dofs().spec(), sol.grid().to_local(cell, p), sol.grid().cell_size(), table);
    const auto modes = sol.dofs().cell_modes(cell);
    Vec3 u = Vec3::Zero();
    for (std::size_t a = 0; a < modes.size(); ++a) u += table.values[a] * sol.coefficients().segment<3>(3 * modes[a]);
    return u;
}

Mat3 eval_strain(const SolutionField& sol, const Point3& p)
{
    const int cell = sol.cell_of(p);
    ModeTable table;
    evaluate_modes(sol.dofs().spec(), sol.grid().to_local(cell, p), sol.grid().cell_size(), table);
    const auto modes = sol.dofs().cell_modes(cell);
    Mat3 grad = Mat3::Zero(); // grad(i, j) = d u_i / d x_j
    for (std::size_t a = 0; a < modes.size(); ++a)
        grad += sol.coefficients().segment<3>(3 * modes[a]) * table.gradients.row(a);
    return 0.5 * (grad + grad.transpose());
}

Mat3 stress_from_strain(const Mat3& strain, const Material& material)
{
    const double lambda = material.lame_lambda();
    const double mu = material.shear_modulus();
    return lambda * strain.trace() * Mat3::Identity() + 2.0 * mu * strain;
}

Mat3 eval_stress(const SolutionField& sol, const Point3& p, const Material& material)
{
    return stress_from_strain(eval_strain(sol, p), material);
}

double von_mises(const Mat3& s)
{
    const Mat3 dev = s - s.trace() / 3.0 * Mat3::Identity();
    const double j2 = 0.5 * dev.cwiseAbs2().sum();
    return std::sqrt(3.0 * j2);
}

double strain_energy(const BlockSparseMatrix& k, const Eigen::VectorXd& u)
{
    Eigen::VectorXd ku;
    k.multiply(u, ku);
    return 0.5 * u.dot(ku);
}

} // namespace csgfcm
