#include "csgfcm/marching_cubes.hpp"

#include "csgfcm/errors.hpp"

#include <map>
#include <thread>

namespace csgfcm {

namespace {

Vec3 corner_position(int c) { return Vec3(c & 1, (c >> 1) & 1, (c >> 2) & 1); }

struct CubeEdge {
    int a;
    int b;
    int axis;
};

constexpr std::array<CubeEdge, 12> kEdges{{{0, 1, 0}, {2, 3, 0}, {4, 5, 0}, {6, 7, 0},
                                           {0, 2, 1}, {1, 3, 1}, {4, 6, 1}, {5, 7, 1},
                                           {0, 4, 2}, {1, 5, 2}, {2, 6, 2}, {3, 7, 2}}};

int edge_between(int a, int b)
{
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 12; ++e)
        if (kEdges[e].a == a && kEdges[e].b == b) return e;
    return -1;
}

Vec3 edge_midpoint(int e) { return 0.5 * (corner_position(kEdges[e].a) + corner_position(kEdges[e].b)); }

using Loop = std::vector<int>;

// Oriented boundary loops (cube edge ids) of the surface inside one cube for
// each of the 256 corner configurations. Faces are resolved on their own
// four corners only, separating diagonal Inside corners, so neighboring cubes
// always agree on the shared face.
std::array<std::vector<Loop>, 256> build_case_table()
{
    std::array<std::vector<Loop>, 256> table;
    for (int config = 0; config < 256; ++config) {
        auto inside = [&](int c) { return ((config >> c) & 1) != 0; };
        std::array<int, 12> next;
        next.fill(-1);
        auto add_segment = [&](int ea, int eb, int reference, const Vec3& normal) {
            const Vec3 a = edge_midpoint(ea);
            const Vec3 b = edge_midpoint(eb);
            const Vec3 mid = 0.5 * (a + b);
            if (normal.cross(b - a).dot(corner_position(reference) - mid) > 0.0) std::swap(ea, eb);
            if (next[ea] != -1) throw Error("solve-postprocess", "inconsistent marching cubes case table");
            next[ea] = eb;
        };
        for (int axis = 0; axis < 3; ++axis) {
            const int u = (axis + 1) % 3;
            const int v = (axis + 2) % 3;
            for (int side = 0; side < 2; ++side) {
                const Vec3 normal = (2.0 * side - 1.0) * Vec3::Unit(axis);
                std::array<int, 4> cyc{};
                const int uv[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
                for (int q = 0; q < 4; ++q) cyc[q] = (side << axis) | (uv[q][0] << u) | (uv[q][1] << v);
                std::array<int, 4> cross_edges{};
                int crossings = 0;
                for (int q = 0; q < 4; ++q)
                    if (inside(cyc[q]) != inside(cyc[(q + 1) % 4])) cross_edges[crossings++] = edge_between(cyc[q], cyc[(q + 1) % 4]);
                if (crossings == 2) {
                    int reference = -1;
                    for (int q = 0; q < 4; ++q)
                        if (inside(cyc[q])) reference = cyc[q];
                    add_segment(cross_edges[0], cross_edges[1], reference, normal);
                } else if (crossings == 4) {
                    for (int q = 0; q < 4; ++q) {
                        if (!inside(cyc[q])) continue;
                        add_segment(edge_between(cyc[(q + 3) % 4], cyc[q]), edge_between(cyc[q], cyc[(q + 1) % 4]), cyc[q],
                                    normal);
                    }
                }
            }
        }
        std::array<bool, 12> used{};
        for (int e = 0; e < 12; ++e) {
            if (next[e] == -1 || used[e]) continue;
            Loop loop;
            int cur = e;
            while (!used[cur]) {
                used[cur] = true;
                loop.push_back(cur);
                cur = next[cur];
                if (cur == -1) throw Error("solve-postprocess", "open loop in marching cubes case table");
            }
            if (cur != e) throw Error("solve-postprocess", "malformed loop in marching cubes case table");
            table[config].push_back(std::move(loop));
        }
    }
    return table;
}

const std::array<std::vector<Loop>, 256>& case_table()
{
    static const auto table = build_case_table();
    return table;
}

} // namespace

double TriMesh::area() const
{
    double a = 0.0;
    for (const auto& t : triangles)
        a += 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
    return a;
}

bool is_watertight(const TriMesh& mesh)
{
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : mesh.triangles)
        for (int e = 0; e < 3; ++e) ++directed[{t[e], t[(e + 1) % 3]}];
    for (const auto& [edge, count] : directed) {
        if (count != 1) return false;
        const auto it = directed.find({edge.second, edge.first});
        if (it == directed.end() || it->second != 1) return false;
    }
    return true;
}

TriMesh marching_cubes(const CsgTree& tree, const Aabb& box, const MarchingCubesOptions& options)
{
    const int r = options.resolution;
    if (r < 2) throw InputError("solve-postprocess", "post.mc_resolution", "marching cubes resolution must be >= 2");
    if (box.is_empty() || !(box.extent().array() > 0.0).all())
        throw InputError("solve-postprocess", "", "marching cubes box must have positive extent");
    const int np = r + 1;
    const Vec3 step = box.extent() / r;
    auto lattice_point = [&](int i, int j, int k) { return Point3(box.lo + Vec3(i * step.x(), j * step.y(), k * step.z())); };
    auto index = [&](int i, int j, int k) { return static_cast<std::size_t>(i) + np * (static_cast<std::size_t>(j) + np * static_cast<std::size_t>(k)); };

    std::vector<unsigned char> field(static_cast<std::size_t>(np) * np * np);
    auto fill_slabs = [&](int k0, int k1) {
        for (int k = k0; k < k1; ++k)
            for (int j = 0; j < np; ++j)
                for (int i = 0; i < np; ++i) field[index(i, j, k)] = tree.contains(lattice_point(i, j, k)) ? 1 : 0;
    };
    const int threads = std::clamp(options.threads, 1, np);
    if (threads == 1) fill_slabs(0, np);
    else {
        std::vector<std::jthread> workers;
        for (int t = 0; t < threads; ++t) workers.emplace_back(fill_slabs, np * t / threads, np * (t + 1) / threads);
    }

    TriMesh mesh;
    std::array<std::vector<int>, 3> edge_vertex;
    for (auto& v : edge_vertex) v.assign(field.size(), -1);

    auto vertex_on = [&](int i, int j, int k, int axis) {
        int& slot = edge_vertex[axis][index(i, j, k)];
        if (slot >= 0) return slot;
        const Point3 a = lattice_point(i, j, k);
        const Point3 b = a + step[axis] * Vec3::Unit(axis);
        const bool a_in = field[index(i, j, k)] != 0;
        double lo = 0.0;
        double hi = 1.0;
        for (int s = 0; s < options.bisection_steps; ++s) {
            const double mid = 0.5 * (lo + hi);
            if (tree.contains(a + mid * (b - a)) == a_in) lo = mid;
            else hi = mid;
        }
        slot = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(a + 0.5 * (lo + hi) * (b - a));
        return slot;
    };

    const auto& table = case_table();
    std::vector<int> ids;
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) {
                int config = 0;
                for (int c = 0; c < 8; ++c)
                    if (field[index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1))]) config |= 1 << c;
                if (config == 0 || config == 255) continue;
                for (const auto& loop : table[config]) {
                    ids.clear();
                    for (int e : loop) {
                        const int a = kEdges[e].a;
                        ids.push_back(vertex_on(i + (a & 1), j + ((a >> 1) & 1), k + ((a >> 2) & 1), kEdges[e].axis));
                    }
                    if (ids.size() == 3) {
                        mesh.triangles.push_back({ids[0], ids[1], ids[2]});
                        continue;
                    }
                    Point3 centroid = Point3::Zero();
                    for (int id : ids) centroid += mesh.vertices[id];
                    centroid /= static_cast<double>(ids.size());
                    const int c = static_cast<int>(mesh.vertices.size());
                    mesh.vertices.push_back(centroid);
                    for (std::size_t q = 0; q < ids.size(); ++q)
                        mesh.triangles.push_back({c, ids[q], ids[(q + 1) % ids.size()]});
                }
            }
    return mesh;
}

} // namespace csgfcm
