#include "csgfcm/errors.hpp"
#include "csgfcm/marching_cubes.hpp"
#include "csgfcm/vtk_io.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <set>

using namespace csgfcm;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "csgfcm_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

// Undirected edge -> incident triangle count.
std::map<std::pair<int, int>, int> edge_counts(const TriMesh& m)
{
    std::map<std::pair<int, int>, int> e;
    for (const auto& t : m.triangles)
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            ++e[{std::min(a, b), std::max(a, b)}];
        }
    return e;
}

bool every_edge_twice(const TriMesh& m)
{
    for (const auto& [edge, n] : edge_counts(m))
        if (n != 2) return false;
    return !m.triangles.empty();
}

// Volume enclosed by an oriented closed mesh (divergence theorem).
double signed_volume(const TriMesh& m)
{
    double v = 0.0;
    for (const auto& t : m.triangles) v += m.vertices[t[0]].dot(m.vertices[t[1]].cross(m.vertices[t[2]])) / 6.0;
    return v;
}

BlockSparseMatrix block_diagonal(int n, double scale)
{
    std::vector<std::vector<int>> cols(n);
    for (int r = 0; r < n; ++r) cols[r] = {r};
    BlockSparseMatrix k(cols);
    for (int i = 0; i < 3 * n; ++i) k.add(i, i, scale);
    return k;
}

SolutionField patch_solution(int degree, std::array<int, 3> cells)
{
    const fixture::PatchTest pt;
    return solve(pt.build(degree, cells), fixture::tight());
}

} // namespace

TEST_SUITE("solve-postprocess") {

TEST_CASE("scaled identity system")
{
    const auto k = block_diagonal(5, 2.0);
    Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(15, -1.0, 3.0);
    for (auto m : {SolverMethod::Pcg, SolverMethod::Cholesky}) {
        SolverReport r;
        const Eigen::VectorXd u = solve_linear(k, f, fixture::tight(m), r);
        CHECK((u - 0.5 * f).norm() < 1e-15);
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("non-convergence carries the residual history")
{
    const fixture::PatchTest pt;
    const auto sys = pt.build(2, {2, 2, 2});
    SolverOptions o;
    o.max_iterations = 5;
    SolverReport r;
    try {
        solve_pcg(sys.stiffness, sys.load, o, r);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(e.residual_history().size() >= 5);
        CHECK(e.residual_history().back() > 1e-10);
    }
}

TEST_CASE("Cholesky and PCG agree")
{
    const fixture::PatchTest pt;
    const auto sys = pt.build(2, {2, 1, 3});
    SolverReport a, b;
    const Eigen::VectorXd u1 = solve_pcg(sys.stiffness, sys.load, fixture::tight(), a);
    const Eigen::VectorXd u2 = solve_cholesky(sys.stiffness, sys.load, fixture::tight(), b);
    CHECK((u1 - u2).norm() < 1e-8 * u2.norm());
    CHECK(a.residual < 1e-10);
    CHECK(b.residual < 1e-10);
}

TEST_CASE("patch test reproduces the linear displacement field")
{
    const fixture::PatchTest pt;
    for (std::array<int, 3> cells : {std::array<int, 3>{1, 1, 1}, std::array<int, 3>{2, 1, 1}}) {
        const auto sol = patch_solution(1, cells);
        CHECK(sol.report().residual < 1e-10);
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < 100; ++i) {
            const Point3 x(u(rng), u(rng), u(rng));
            CHECK((eval_displacement(sol, x) - pt.displacement(x)).norm() < 1e-7);
            CHECK((eval_strain(sol, x) - eval_strain(sol, Point3(0.5, 0.5, 0.5))).norm() < 1e-10);
        }
    }
}

TEST_CASE("strain energy equals the work of the loads")
{
    const fixture::PatchTest pt;
    const auto sys = pt.build(3, {2, 2, 1});
    const auto sol = solve(sys, fixture::tight(SolverMethod::Cholesky));
    const double e = strain_energy(sys.stiffness, sol.coefficients());
    CHECK(e == doctest::Approx(0.5 * sys.load.dot(sol.coefficients())).epsilon(1e-8));
    CHECK(e == doctest::Approx(pt.energy()).epsilon(1e-8));
}

TEST_CASE("zero and translation fields carry no stress")
{
    const CellGrid grid({{0, 0, 0}, {1, 1, 1}}, {2, 2, 2});
    const BasisSpec spec(3);
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    const DofMap dofs(grid, spec, all);
    const Material mat(1.0, 0.3);
    const SolutionField zero(grid, dofs, Eigen::VectorXd::Zero(dofs.dof_count()));
    Eigen::VectorXd t = Eigen::VectorXd::Zero(dofs.dof_count());
    for (int cell : all) {
        const auto modes = dofs.cell_modes(cell);
        for (int k = 1; k <= 2; ++k)
            for (int j = 1; j <= 2; ++j)
                for (int i = 1; i <= 2; ++i) t.segment<3>(3 * modes[spec.mode_index(i, j, k)]) = Vec3(0.3, -1.2, 2.0);
    }
    const SolutionField shift(grid, dofs, t);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 100; ++i) {
        const Point3 x(u(rng), u(rng), u(rng));
        CHECK(eval_displacement(zero, x).norm() == 0.0);
        CHECK(eval_stress(zero, x, mat).norm() == 0.0);
        CHECK((eval_displacement(shift, x) - Vec3(0.3, -1.2, 2.0)).norm() < 1e-14);
        CHECK(eval_stress(shift, x, mat).norm() < 1e-12);
    }
    CHECK_THROWS_AS(eval_displacement(zero, {2, 0, 0}), GeometryError);
    const DofMap partial(grid, spec, {0});
    const SolutionField one(grid, partial, Eigen::VectorXd::Zero(partial.dof_count()));
    CHECK_THROWS_AS(eval_stress(one, {0.9, 0.9, 0.9}, mat), GeometryError);
}

TEST_CASE("von Mises")
{
    CHECK(von_mises(3.0 * Mat3::Identity()) == doctest::Approx(0.0).scale(1.0));
    Mat3 uni = Mat3::Zero();
    uni(2, 2) = 2.5;
    CHECK(von_mises(uni) == doctest::Approx(2.5));
    Mat3 shear = Mat3::Zero();
    shear(0, 1) = shear(1, 0) = 1.0;
    CHECK(von_mises(shear) == doctest::Approx(std::sqrt(3.0)));
    const Material mat(2.0, 0.25);
    Mat3 eps = Mat3::Zero();
    eps(0, 0) = 1.0;
    const Mat3 s = stress_from_strain(eps, mat);
    CHECK(s(0, 0) == doctest::Approx(mat.lame_lambda() + 2 * mat.shear_modulus()));
    CHECK(s(1, 1) == doctest::Approx(mat.lame_lambda()));
}

TEST_CASE("marching cubes: empty region")
{
    const CsgTree tree(make_leaf(Sphere({10, 10, 10}, 1)));
    const auto m = marching_cubes(tree, {{-1, -1, -1}, {1, 1, 1}}, {16, 12, 1});
    CHECK(m.vertices.empty());
    CHECK(m.triangles.empty());
    CHECK_THROWS_AS(marching_cubes(tree, {{-1, -1, -1}, {1, 1, 1}}, {1, 12, 1}), InputError);
}

TEST_CASE("marching cubes: sphere is watertight, outward and accurate")
{
    const CsgTree tree(make_leaf(Sphere({0, 0, 0}, 1)));
    const auto m = marching_cubes(tree, {{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, {64, 12, 4});
    CHECK(every_edge_twice(m));
    CHECK(is_watertight(m));
    CHECK(std::abs(m.area() - 4 * std::numbers::pi) < 0.03 * 4 * std::numbers::pi);
    CHECK(signed_volume(m) == doctest::Approx(4 * std::numbers::pi / 3).epsilon(0.02));
    for (const auto& v : m.vertices) CHECK(std::abs(v.norm() - 1.0) < 3.0 / 64);

    const auto mid = marching_cubes(tree, {{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, {32, 0, 1});
    CHECK(every_edge_twice(mid));
}

TEST_CASE("marching cubes: output does not depend on the thread count")
{
    const CsgTree tree(make_difference(make_leaf(Cuboid({-1, -1, -1}, {1, 1, 1})), make_leaf(Sphere({0.3, 0, 0}, 0.8))));
    const Aabb box{{-1.2, -1.2, -1.2}, {1.2, 1.2, 1.2}};
    const auto a = marching_cubes(tree, box, {40, 8, 1});
    const auto b = marching_cubes(tree, box, {40, 8, 7});
    CHECK(a.vertices == b.vertices);
    CHECK(a.triangles == b.triangles);
}

TEST_CASE("marching cubes: cuboid is a genus-0 closed surface")
{
    const CsgTree tree(make_leaf(Cuboid({-0.61, -0.37, -0.23}, {0.52, 0.44, 0.71})));
    const auto m = marching_cubes(tree, {{-1, -1, -1}, {1, 1, 1}}, {24, 12, 1});
    REQUIRE(every_edge_twice(m));
    const auto edges = edge_counts(m);
    std::set<int> used;
    for (const auto& t : m.triangles) used.insert(t.begin(), t.end());
    const long long chi = static_cast<long long>(used.size()) - static_cast<long long>(edges.size()) +
                          static_cast<long long>(m.triangles.size());
    CHECK(chi == 2);
    CHECK(signed_volume(m) > 0.0);
}

TEST_CASE("VTK: empty mesh and round trip")
{
    const auto empty_path = scratch("empty.vtk");
    write_vtk(TriMesh{}, empty_path);
    const auto e = read_vtk(empty_path);
    CHECK(e.vertices.empty());
    CHECK(e.triangles.empty());
    std::ifstream in(empty_path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "# vtk DataFile Version 3.0");

    TriMesh m = marching_cubes(CsgTree(make_leaf(Sphere({0, 0, 0}, 1))), {{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, {12, 6, 1});
    std::vector<double> s(m.vertices.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = 0.5 * static_cast<double>(i);
    m.scalar_data = {{"von_mises", s}};
    m.vector_data = {{"displacement", m.vertices}};
    const auto path = scratch("round.vtk");
    write_vtk(m, path);
    const auto r = read_vtk(path);
    CHECK(r.vertices.size() == m.vertices.size());
    CHECK(r.triangles == m.triangles);
    REQUIRE(r.scalar_data.size() == 1);
    REQUIRE(r.vector_data.size() == 1);
    CHECK(r.scalar_data[0].second == s);
    CHECK(r.vector_data[0].second.size() == m.vertices.size());
    for (std::size_t i = 0; i < m.vertices.size(); ++i) CHECK(r.vertices[i] == m.vertices[i]);
    CHECK_THROWS_AS(write_vtk(m, "/nonexistent-dir/x.vtk"), IoError);
}

TEST_CASE("VTK export of the patch test")
{
    const fixture::PatchTest pt;
    const auto sol = patch_solution(1, {2, 2, 2});
    const auto mesh = marching_cubes(pt.tree, {{-0.1, -0.1, -0.1}, {1.1, 1.1, 1.1}}, {12, 12, 1});
    const auto path = scratch("patch.vtk");
    CHECK(export_results(sol, pt.material, mesh, path) == 0);
    const auto r = read_vtk(path);
    REQUIRE(r.scalar_data.size() == 1);
    CHECK(r.scalar_data[0].first == "von_mises");
    CHECK(r.vector_data[0].first == "displacement");
    for (double v : r.scalar_data[0].second) CHECK(std::abs(v - pt.sigma) < 1e-6 * pt.sigma);
    // Bisection leaves vertices up to one bisection step off the faces; data is taken on the cube.
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        const Point3 on_cube = r.vertices[i].cwiseMax(Vec3::Zero()).cwiseMin(Vec3::Ones());
        CHECK((r.vector_data[0].second[i] - pt.displacement(on_cube)).norm() < 1e-7);
    }

    const auto vol = scratch("patch_volume.vtk");
    export_volumetric(sol, pt.material, pt.tree, 2, vol);
    CHECK(read_vtk(vol).vertices.size() == 64);
}

TEST_CASE("run summary")
{
    RunSummary s{123, 7, 8, 0.5000000025, 34, 3.2e-14};
    const auto path = scratch("summary.txt");
    write_summary(s, path);
    const auto kv = read_summary(path);
    CHECK(kv.size() == 6);
    CHECK(kv.at("dofs") == "123");
    CHECK(kv.at("active_cells") == "7");
    CHECK(kv.at("total_cells") == "8");
    CHECK(std::stod(kv.at("strain_energy")) == 0.5000000025);
    CHECK(kv.at("solver_iterations") == "34");
    CHECK(std::stod(kv.at("residual")) == 3.2e-14);
}

} // TEST_SUITE
