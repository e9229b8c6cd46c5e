#pragma once

#include "csgfcm/assembly.hpp"
#include "csgfcm/boundary.hpp"
#include "csgfcm/csg.hpp"
#include "csgfcm/solver.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace csgfcm {

struct PostSettings {
    int mc_resolution = 64;
    int mc_bisection_steps = 12;
    std::optional<Aabb> mc_box;   ///< default: grid bbox inflated by one lattice step
    std::string vtk_file = "result.vtk";
    std::string summary_file = "summary.txt";
    bool volumetric = false;
    int volumetric_samples = 4;
};

/// Everything one analysis run needs.
struct Scene {
    CsgNodePtr model;
    double classify_epsilon = 0.0;

    std::optional<Aabb> grid_bbox; ///< default: model bounds with a 1e-6 relative margin
    std::array<int, 3> cells{1, 1, 1};
    int degree = 1;

    int octree_depth = 3;
    std::optional<int> gauss;      ///< default: degree + 1
    double alpha_exponent = 8.0;
    int active_samples = 5;

    double youngs_modulus = 1.0;
    double poisson_ratio = 0.3;
    Vec3 body_load = Vec3::Zero();

    std::vector<DirichletSpec> dirichlet;
    std::vector<NeumannSpec> neumann;

    SolverOptions solver;
    PostSettings post;

    CsgTree tree() const { return CsgTree(model, classify_epsilon); }
    CellGrid grid() const;
    QuadratureOctree quadrature() const { return {octree_depth, gauss.value_or(degree + 1), alpha_exponent}; }
    Material material() const { return {youngs_modulus, poisson_ratio}; }
};

/// Parses and validates a scene document. Every error is an InputError whose
/// location is a path into the document, e.g. "model.children[1].radius".
Scene parse_scene(const nlohmann::json& doc);
Scene parse_scene_text(const std::string& text);
Scene parse_scene_file(const std::filesystem::path& path);

nlohmann::json serialize_scene(const Scene& scene);
nlohmann::json serialize_node(const CsgNode& node);
CsgNodePtr parse_node(const nlohmann::json& doc, const std::string& location = "model");

} // namespace csgfcm
