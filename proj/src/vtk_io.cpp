#include "csgfcm/vtk_io.hpp"

#include "csgfcm/errors.hpp"

#include <spdlog/spdlog.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace csgfcm {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw IoError("solve-postprocess", "cannot write " + path.string());
    out << std::setprecision(17);
    return out;
}

void write_points(std::ostream& out, const std::vector<Point3>& pts)
{
    out << "POINTS " << pts.size() << " double\n";
    for (const auto& p : pts) out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
}

void write_point_data(std::ostream& out, const TriMesh& mesh)
{
    out << "POINT_DATA " << mesh.vertices.size() << '\n';
    for (const auto& [name, values] : mesh.vector_data) {
        out << "VECTORS " << name << " double\n";
        for (const auto& v : values) out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    }
    for (const auto& [name, values] : mesh.scalar_data) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (double v : values) out << v << '\n';
    }
}

void evaluate_channels(const SolutionField& sol, const Material& material, TriMesh& mesh, std::size_t& outside)
{
    std::vector<Vec3> disp(mesh.vertices.size(), Vec3::Zero());
    std::vector<double> vm(mesh.vertices.size(), 0.0);
    outside = 0;
    // Surface vertices come from bisection and may sit a hair outside the grid.
    const Aabb& box = sol.grid().bbox();
    const double snap = 1e-3 * sol.grid().cell_size().minCoeff();
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        Point3 p = mesh.vertices[i];
        const Point3 clamped = p.cwiseMax(box.lo).cwiseMin(box.hi);
        if ((clamped - p).norm() <= snap) p = clamped;
        const auto cell = sol.grid().locate(p);
        if (!cell || !sol.dofs().is_active(*cell)) {
            ++outside;
            continue;
        }
        disp[i] = eval_displacement(sol, p);
        vm[i] = von_mises(eval_stress(sol, p, material));
    }
    mesh.vector_data = {{"displacement", std::move(disp)}};
    mesh.scalar_data = {{"von_mises", std::move(vm)}};
}

} // namespace

void write_vtk(const TriMesh& mesh, const std::filesystem::path& path)
{
    auto out = open_for_write(path);
    out << "# vtk DataFile Version 3.0\ncsgfcm surface\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    write_points(out, mesh.vertices);
    out << "CELLS " << mesh.triangles.size() << ' ' << 4 * mesh.triangles.size() << '\n';
    for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << "CELL_TYPES " << mesh.triangles.size() << '\n';
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) out << "5\n";
    write_point_data(out, mesh);
    if (!out) throw IoError("solve-postprocess", "error while writing " + path.string());
}

TriMesh read_vtk(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("solve-postprocess", "cannot read " + path.string());
    TriMesh mesh;
    std::string line;
    for (int i = 0; i < 4; ++i) std::getline(in, line);
    std::string token;
    std::size_t npoints = 0;
    while (in >> token) {
        if (token == "POINTS") {
            std::string type;
            in >> npoints >> type;
            mesh.vertices.resize(npoints);
            for (auto& p : mesh.vertices) in >> p.x() >> p.y() >> p.z();
        } else if (token == "CELLS") {
            std::size_t n = 0, total = 0;
            in >> n >> total;
            mesh.triangles.reserve(n);
            for (std::size_t c = 0; c < n; ++c) {
                int k = 0;
                in >> k;
                if (k == 1) {
                    int vertex = 0;
                    in >> vertex;
                    continue;
                }
                if (k != 3) throw IoError("solve-postprocess", "unsupported cell in " + path.string());
                std::array<int, 3> t{};
                in >> t[0] >> t[1] >> t[2];
                mesh.triangles.push_back(t);
            }
        } else if (token == "CELL_TYPES") {
            std::size_t n = 0;
            in >> n;
            for (std::size_t i = 0; i < n; ++i) in >> token;
        } else if (token == "POINT_DATA") {
            in >> npoints;
        } else if (token == "VECTORS") {
            std::string name, type;
            in >> name >> type;
            std::vector<Vec3> v(npoints);
            for (auto& x : v) in >> x.x() >> x.y() >> x.z();
            mesh.vector_data.emplace_back(name, std::move(v));
        } else if (token == "SCALARS") {
            std::string name, type, lookup, table;
            int comps = 1;
            in >> name >> type >> comps >> lookup >> table;
            std::vector<double> v(npoints);
            for (auto& x : v) in >> x;
            mesh.scalar_data.emplace_back(name, std::move(v));
        } else {
            throw IoError("solve-postprocess", "unexpected token '" + token + "' in " + path.string());
        }
        if (in.fail()) throw IoError("solve-postprocess", "truncated file " + path.string());
    }
    return mesh;
}

std::size_t export_results(const SolutionField& sol, const Material& material, TriMesh mesh,
                           const std::filesystem::path& path)
{
    std::size_t outside = 0;
    evaluate_channels(sol, material, mesh, outside);
    if (outside > 0) spdlog::warn("{} surface vertices lie outside active cells; their data is zero-filled", outside);
    write_vtk(mesh, path);
    return outside;
}

void export_volumetric(const SolutionField& sol, const Material& material, const CsgTree& tree, int per_cell,
                       const std::filesystem::path& path)
{
    if (per_cell < 1) throw InputError("solve-postprocess", "", "volumetric sampling needs >= 1 point per cell axis");
    TriMesh cloud;
    for (int cell : sol.dofs().active_cells()) {
        for (int k = 0; k < per_cell; ++k)
            for (int j = 0; j < per_cell; ++j)
                for (int i = 0; i < per_cell; ++i) {
                    const Vec3 local(-1.0 + (2.0 * i + 1.0) / per_cell, -1.0 + (2.0 * j + 1.0) / per_cell,
                                     -1.0 + (2.0 * k + 1.0) / per_cell);
                    const Point3 p = sol.grid().to_global(cell, local);
                    if (tree.contains(p)) cloud.vertices.push_back(p);
                }
    }
    std::size_t outside = 0;
    evaluate_channels(sol, material, cloud, outside);

    auto out = open_for_write(path);
    const std::size_t n = cloud.vertices.size();
    out << "# vtk DataFile Version 3.0\ncsgfcm volume samples\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    write_points(out, cloud.vertices);
    out << "CELLS " << n << ' ' << 2 * n << '\n';
    for (std::size_t i = 0; i < n; ++i) out << "1 " << i << '\n';
    out << "CELL_TYPES " << n << '\n';
    for (std::size_t i = 0; i < n; ++i) out << "1\n";
    write_point_data(out, cloud);
    if (!out) throw IoError("solve-postprocess", "error while writing " + path.string());
}

void write_summary(const RunSummary& s, const std::filesystem::path& path)
{
    auto out = open_for_write(path);
    out << "dofs=" << s.dofs << '\n'
        << "active_cells=" << s.active_cells << '\n'
        << "total_cells=" << s.total_cells << '\n'
        << "strain_energy=" << s.strain_energy << '\n'
        << "solver_iterations=" << s.solver_iterations << '\n'
        << "residual=" << s.residual << '\n';
    if (!out) throw IoError("solve-postprocess", "error while writing " + path.string());
}

std::map<std::string, std::string> read_summary(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("solve-postprocess", "cannot read " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

} // namespace csgfcm
