#include "csgfcm/scene.hpp"

#include "csgfcm/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace csgfcm {

using nlohmann::json;

namespace {

const std::string kModule = "cli";

[[noreturn]] void fail(const std::string& location, const std::string& what)
{
    throw InputError(kModule, location, what);
}

/// Strict view of a JSON object: every key must be consumed.
class Reader {
public:
    Reader(const json& j, std::string location) : j_(j), loc_(std::move(location))
    {
        if (!j_.is_object()) fail(loc_, "expected an object");
    }

    std::string at(const std::string& key) const { return loc_.empty() ? key : loc_ + "." + key; }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& required(const std::string& key)
    {
        if (!j_.contains(key)) fail(loc_, "missing required key '" + key + "'");
        used_.insert(key);
        return j_.at(key);
    }

    const json* optional(const std::string& key)
    {
        if (!j_.contains(key)) return nullptr;
        used_.insert(key);
        return &j_.at(key);
    }

    void finish() const
    {
        for (const auto& [key, value] : j_.items())
            if (!used_.count(key)) fail(at(key), "unknown key");
    }

private:
    const json& j_;
    std::string loc_;
    std::set<std::string> used_;
};

double number(const json& j, const std::string& loc)
{
    if (!j.is_number()) fail(loc, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(loc, "expected a finite number");
    return v;
}

double positive(const json& j, const std::string& loc)
{
    const double v = number(j, loc);
    if (!(v > 0.0)) fail(loc, "must be positive");
    return v;
}

int integer(const json& j, const std::string& loc, int min_value)
{
    if (!j.is_number_integer()) fail(loc, "expected an integer");
    const auto v = j.get<long long>();
    if (v < min_value) fail(loc, "must be >= " + std::to_string(min_value));
    if (v > 1'000'000'000) fail(loc, "value too large");
    return static_cast<int>(v);
}

std::string string(const json& j, const std::string& loc)
{
    if (!j.is_string()) fail(loc, "expected a string");
    return j.get<std::string>();
}

bool boolean(const json& j, const std::string& loc)
{
    if (!j.is_boolean()) fail(loc, "expected true or false");
    return j.get<bool>();
}

Vec3 vec3(const json& j, const std::string& loc)
{
    if (!j.is_array() || j.size() != 3) fail(loc, "expected an array of 3 numbers");
    return {number(j[0], loc + "[0]"), number(j[1], loc + "[1]"), number(j[2], loc + "[2]")};
}

Vec2 vec2(const json& j, const std::string& loc)
{
    if (!j.is_array() || j.size() != 2) fail(loc, "expected an array of 2 numbers");
    return {number(j[0], loc + "[0]"), number(j[1], loc + "[1]")};
}

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }
json to_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

// Wraps constructor invariant failures with the document location.
template <typename F>
auto guarded(const std::string& loc, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError& e) {
        if (!e.location().empty()) throw;
        fail(loc, std::string(e.what()));
    } catch (const Error& e) {
        fail(loc, std::string(e.what()));
    }
}

Frame parse_frame(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const Vec3 origin = vec3(r.required("origin"), r.at("origin"));
    const Vec3 z = vec3(r.required("z_axis"), r.at("z_axis"));
    std::optional<Vec3> x;
    if (const auto* xj = r.optional("x_axis")) x = vec3(*xj, r.at("x_axis"));
    r.finish();
    return guarded(loc, [&] { return Frame::from_axes(origin, z, x ? &*x : nullptr); });
}

json frame_to_json(const Frame& f)
{
    return {{"origin", to_json(f.origin())}, {"z_axis", to_json(f.axis(2))}, {"x_axis", to_json(f.axis(0))}};
}

ParamCurve parse_curve(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const std::string type = string(r.required("type"), r.at("type"));
    if (type == "segment") {
        Segment s{vec3(r.required("a"), r.at("a")), vec3(r.required("b"), r.at("b"))};
        r.finish();
        if (s.a == s.b) fail(loc, "segment endpoints coincide");
        return s;
    }
    if (type == "bspline") {
        const int degree = integer(r.required("degree"), r.at("degree"), 1);
        const json& cp = r.required("control_points");
        if (!cp.is_array()) fail(r.at("control_points"), "expected an array of points");
        std::vector<Point3> ctrl;
        for (std::size_t i = 0; i < cp.size(); ++i)
            ctrl.push_back(vec3(cp[i], r.at("control_points") + "[" + std::to_string(i) + "]"));
        if (ctrl.size() < static_cast<std::size_t>(degree) + 1)
            fail(r.at("control_points"), "needs at least degree + 1 control points");
        std::vector<double> knots;
        if (const auto* kj = r.optional("knots")) {
            if (!kj->is_array()) fail(r.at("knots"), "expected an array of numbers");
            for (std::size_t i = 0; i < kj->size(); ++i)
                knots.push_back(number((*kj)[i], r.at("knots") + "[" + std::to_string(i) + "]"));
        } else {
            knots = BSpline::uniform_knots(degree, ctrl.size());
        }
        r.finish();
        return guarded(loc, [&] { return ParamCurve(BSpline(degree, knots, ctrl)); });
    }
    fail(r.at("type"), "unknown path type '" + type + "'");
}

json curve_to_json(const ParamCurve& c)
{
    if (const auto* s = std::get_if<Segment>(&c)) return {{"type", "segment"}, {"a", to_json(s->a)}, {"b", to_json(s->b)}};
    const auto& b = std::get<BSpline>(c);
    json ctrl = json::array();
    for (const auto& p : b.control_points()) ctrl.push_back(to_json(p));
    return {{"type", "bspline"}, {"degree", b.degree()}, {"knots", b.knots()}, {"control_points", ctrl}};
}

Profile2D parse_profile(const json& j, const std::string& loc)
{
    if (!j.is_array()) fail(loc, "expected an array of 2D points");
    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < j.size(); ++i) pts.push_back(vec2(j[i], loc + "[" + std::to_string(i) + "]"));
    return guarded(loc, [&] { return Profile2D(pts); });
}

json profile_to_json(const Profile2D& p)
{
    json out = json::array();
    for (const auto& v : p.vertices()) out.push_back(to_json(v));
    return out;
}

FrameRule parse_frame_rule(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const std::string type = string(r.required("type"), r.at("type"));
    FrameRule rule;
    if (type == "frenet") rule = FrenetRule{};
    else if (type == "reference_parallel") {
        const Vec3 n = vec3(r.required("normal"), r.at("normal"));
        if (!(n.norm() > 0.0)) fail(r.at("normal"), "reference normal must be nonzero");
        rule = ReferenceParallelRule{n};
    } else fail(r.at("type"), "unknown frame rule '" + type + "'");
    r.finish();
    return rule;
}

Primitive parse_primitive(Reader& r, const std::string& type, const std::string& loc)
{
    if (type == "sphere") {
        const Vec3 c = vec3(r.required("center"), r.at("center"));
        const double rad = positive(r.required("radius"), r.at("radius"));
        r.finish();
        return guarded(loc, [&] { return Primitive(Sphere(c, rad)); });
    }
    if (type == "cuboid") {
        const Vec3 lo = vec3(r.required("min"), r.at("min"));
        const Vec3 hi = vec3(r.required("max"), r.at("max"));
        r.finish();
        if ((lo.array() > hi.array()).any()) fail(r.at("max"), "must be componentwise >= min");
        return guarded(loc, [&] { return Primitive(Cuboid(lo, hi)); });
    }
    if (type == "cylinder") {
        const Frame f = parse_frame(r.required("frame"), r.at("frame"));
        const double rad = positive(r.required("radius"), r.at("radius"));
        const double h = positive(r.required("height"), r.at("height"));
        r.finish();
        return guarded(loc, [&] { return Primitive(Cylinder(f, rad, h)); });
    }
    if (type == "sweep") {
        ParamCurve path = parse_curve(r.required("path"), r.at("path"));
        Profile2D profile = parse_profile(r.required("profile"), r.at("profile"));
        FrameRule rule = parse_frame_rule(r.required("frame_rule"), r.at("frame_rule"));
        int seeds = 8;
        double axial = 1e-9;
        if (const auto* s = r.optional("newton_seeds")) seeds = integer(*s, r.at("newton_seeds"), 1);
        if (const auto* a = r.optional("axial_tolerance")) {
            axial = number(*a, r.at("axial_tolerance"));
            if (axial < 0.0) fail(r.at("axial_tolerance"), "must be non-negative");
        }
        r.finish();
        return guarded(loc, [&] { return Primitive(SweepSolid(std::move(path), std::move(profile), rule, seeds, axial)); });
    }
    if (type == "extrusion") {
        Profile2D profile = parse_profile(r.required("profile"), r.at("profile"));
        const Vec3 from = vec3(r.required("from"), r.at("from"));
        const Vec3 to = vec3(r.required("to"), r.at("to"));
        const Vec3 n = vec3(r.required("reference_normal"), r.at("reference_normal"));
        r.finish();
        if (from == to) fail(r.at("to"), "extrusion length is zero");
        return guarded(loc, [&] { return Primitive(make_extrusion(profile, from, to, n)); });
    }
    fail(r.at("type"), "unknown node type '" + type + "'");
}

json primitive_to_json(const Primitive& prim)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sphere>)
                return {{"type", "sphere"}, {"center", to_json(x.center())}, {"radius", x.radius()}};
            else if constexpr (std::is_same_v<T, Cuboid>)
                return {{"type", "cuboid"}, {"min", to_json(x.p_start())}, {"max", to_json(x.p_end())}};
            else if constexpr (std::is_same_v<T, Cylinder>)
                return {{"type", "cylinder"}, {"frame", frame_to_json(x.frame())}, {"radius", x.radius()}, {"height", x.height()}};
            else {
                json rule;
                if (std::holds_alternative<FrenetRule>(x.frame_rule())) rule = {{"type", "frenet"}};
                else
                    rule = {{"type", "reference_parallel"},
                            {"normal", to_json(std::get<ReferenceParallelRule>(x.frame_rule()).reference_normal)}};
                return {{"type", "sweep"},
                        {"path", curve_to_json(x.path())},
                        {"profile", profile_to_json(x.profile())},
                        {"frame_rule", rule},
                        {"newton_seeds", x.newton_seeds()},
                        {"axial_tolerance", x.axial_tolerance_factor()}};
            }
        },
        prim);
}

SurfacePatch parse_patch(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const std::string type = string(r.required("type"), r.at("type"));
    SurfacePatch patch;
    if (type == "rect") {
        const Frame f = parse_frame(r.required("frame"), r.at("frame"));
        const json& ext = r.required("extents");
        if (!ext.is_array() || ext.size() != 2) fail(r.at("extents"), "expected [a, b]");
        const double a = positive(ext[0], r.at("extents") + "[0]");
        const double b = positive(ext[1], r.at("extents") + "[1]");
        int m = 1;
        if (const auto* rj = r.optional("resolution")) m = integer(*rj, r.at("resolution"), 1);
        patch = PlanarRect{f, a, b, m};
    } else if (type == "disk") {
        const Frame f = parse_frame(r.required("frame"), r.at("frame"));
        const double rad = positive(r.required("radius"), r.at("radius"));
        int m = 16;
        if (const auto* rj = r.optional("resolution")) m = integer(*rj, r.at("resolution"), 1);
        patch = Disk{f, rad, m};
    } else if (type == "triangles") {
        TriangleSoup soup;
        const json& vj = r.required("vertices");
        if (!vj.is_array()) fail(r.at("vertices"), "expected an array of points");
        for (std::size_t i = 0; i < vj.size(); ++i) soup.vertices.push_back(vec3(vj[i], r.at("vertices") + "[" + std::to_string(i) + "]"));
        const json& tj = r.required("triangles");
        if (!tj.is_array()) fail(r.at("triangles"), "expected an array of index triples");
        for (std::size_t i = 0; i < tj.size(); ++i) {
            const std::string tl = r.at("triangles") + "[" + std::to_string(i) + "]";
            if (!tj[i].is_array() || tj[i].size() != 3) fail(tl, "expected 3 vertex indices");
            std::array<int, 3> t{};
            for (int k = 0; k < 3; ++k) {
                t[k] = integer(tj[i][k], tl + "[" + std::to_string(k) + "]", 0);
                if (t[k] >= static_cast<int>(soup.vertices.size())) fail(tl, "vertex index out of range");
            }
            soup.triangles.push_back(t);
        }
        if (soup.triangles.empty()) fail(r.at("triangles"), "triangle list is empty");
        patch = std::move(soup);
    } else {
        fail(r.at("type"), "unknown patch type '" + type + "'");
    }
    r.finish();
    return patch;
}

json patch_to_json(const SurfacePatch& patch)
{
    if (const auto* r = std::get_if<PlanarRect>(&patch))
        return {{"type", "rect"}, {"frame", frame_to_json(r->frame)}, {"extents", {r->extent_a, r->extent_b}}, {"resolution", r->resolution}};
    if (const auto* d = std::get_if<Disk>(&patch))
        return {{"type", "disk"}, {"frame", frame_to_json(d->frame)}, {"radius", d->radius}, {"resolution", d->resolution}};
    const auto& s = std::get<TriangleSoup>(patch);
    json v = json::array();
    for (const auto& p : s.vertices) v.push_back(to_json(p));
    return {{"type", "triangles"}, {"vertices", v}, {"triangles", s.triangles}};
}

Aabb parse_box(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const Vec3 lo = vec3(r.required("min"), r.at("min"));
    const Vec3 hi = vec3(r.required("max"), r.at("max"));
    r.finish();
    if (!(hi.array() > lo.array()).all()) fail(r.at("max"), "must be componentwise > min");
    return {lo, hi};
}

json box_to_json(const Aabb& b) { return {{"min", to_json(b.lo)}, {"max", to_json(b.hi)}}; }

} // namespace

CsgNodePtr parse_node(const json& j, const std::string& loc)
{
    Reader r(j, loc);
    const std::string type = string(r.required("type"), r.at("type"));
    if (type == "union" || type == "intersection" || type == "difference") {
        const json& ch = r.required("children");
        const std::string cl = r.at("children");
        if (!ch.is_array()) fail(cl, "expected an array of nodes");
        if (type == "difference" && ch.size() != 2) fail(cl, "difference needs exactly 2 children");
        if (ch.size() < 2) fail(cl, "Boolean operation needs at least 2 children");
        r.finish();
        const BooleanOp op = type == "union" ? BooleanOp::Union
                             : type == "intersection" ? BooleanOp::Intersection
                                                      : BooleanOp::Difference;
        // More than two children fold to the left.
        CsgNodePtr acc = parse_node(ch[0], cl + "[0]");
        for (std::size_t i = 1; i < ch.size(); ++i)
            acc = CsgNode::combine(op, acc, parse_node(ch[i], cl + "[" + std::to_string(i) + "]"));
        return acc;
    }
    return CsgNode::leaf(parse_primitive(r, type, loc));
}

json serialize_node(const CsgNode& node)
{
    if (node.is_leaf()) return primitive_to_json(node.primitive());
    const auto& op = node.operation();
    const char* name = op.op == BooleanOp::Union ? "union" : op.op == BooleanOp::Intersection ? "intersection" : "difference";
    return {{"type", name}, {"children", {serialize_node(*op.left), serialize_node(*op.right)}}};
}

CellGrid Scene::grid() const
{
    const CsgTree t = tree();
    if (grid_bbox) {
        CellGrid g(*grid_bbox, cells);
        const Aabb model = tree_bounding_box(t);
        if (intersection(model, *grid_bbox).is_empty())
            throw GeometryError("fcm-discretization", "empty model: the model lies outside the grid bounding box");
        g.check_contains(model);
        return g;
    }
    return CellGrid::around(t, cells);
}

Scene parse_scene(const json& doc)
{
    Scene s;
    Reader r(doc, "");
    s.model = parse_node(r.required("model"), "model");

    {
        Reader g(r.required("grid"), "grid");
        if (const auto* b = g.optional("bbox")) s.grid_bbox = parse_box(*b, "grid.bbox");
        const json& c = g.required("cells");
        if (!c.is_array() || c.size() != 3) fail("grid.cells", "expected [nx, ny, nz]");
        for (int a = 0; a < 3; ++a) s.cells[a] = integer(c[a], "grid.cells[" + std::to_string(a) + "]", 1);
        g.finish();
    }
    {
        Reader b(r.required("basis"), "basis");
        s.degree = integer(b.required("degree"), "basis.degree", 1);
        if (s.degree > 30) fail("basis.degree", "must be <= 30");
        b.finish();
    }
    if (const auto* qj = r.optional("quadrature")) {
        Reader q(*qj, "quadrature");
        if (const auto* v = q.optional("depth")) s.octree_depth = integer(*v, "quadrature.depth", 0);
        if (const auto* v = q.optional("gauss")) s.gauss = integer(*v, "quadrature.gauss", 1);
        if (const auto* v = q.optional("alpha_exponent")) s.alpha_exponent = positive(*v, "quadrature.alpha_exponent");
        if (const auto* v = q.optional("active_samples")) s.active_samples = integer(*v, "quadrature.active_samples", 2);
        q.finish();
    }
    {
        Reader m(r.required("material"), "material");
        s.youngs_modulus = positive(m.required("youngs_modulus"), "material.youngs_modulus");
        s.poisson_ratio = number(m.required("poisson_ratio"), "material.poisson_ratio");
        if (!(s.poisson_ratio > -1.0 && s.poisson_ratio < 0.5)) fail("material.poisson_ratio", "must lie in (-1, 0.5)");
        m.finish();
    }
    if (const auto* b = r.optional("body_load")) s.body_load = vec3(*b, "body_load");

    if (const auto* dj = r.optional("dirichlet")) {
        if (!dj->is_array()) fail("dirichlet", "expected an array");
        for (std::size_t i = 0; i < dj->size(); ++i) {
            const std::string loc = "dirichlet[" + std::to_string(i) + "]";
            Reader d((*dj)[i], loc);
            DirichletSpec spec;
            spec.patch = parse_patch(d.required("patch"), d.at("patch"));
            const json& u = d.required("displacement");
            if (!u.is_array() || u.size() != 3) fail(d.at("displacement"), "expected 3 entries (number or null)");
            bool any = false;
            for (int c = 0; c < 3; ++c) {
                if (u[c].is_null()) continue;
                spec.displacement[c] = number(u[c], d.at("displacement") + "[" + std::to_string(c) + "]");
                any = true;
            }
            if (!any) fail(d.at("displacement"), "at least one component must be constrained");
            if (const auto* p = d.optional("penalty")) spec.penalty = positive(*p, d.at("penalty"));
            d.finish();
            s.dirichlet.push_back(std::move(spec));
        }
    }
    if (const auto* nj = r.optional("neumann")) {
        if (!nj->is_array()) fail("neumann", "expected an array");
        for (std::size_t i = 0; i < nj->size(); ++i) {
            const std::string loc = "neumann[" + std::to_string(i) + "]";
            Reader n((*nj)[i], loc);
            NeumannSpec spec;
            spec.patch = parse_patch(n.required("patch"), n.at("patch"));
            spec.traction = vec3(n.required("traction"), n.at("traction"));
            n.finish();
            s.neumann.push_back(std::move(spec));
        }
    }
    if (const auto* sj = r.optional("solver")) {
        Reader sv(*sj, "solver");
        if (const auto* v = sv.optional("method")) {
            const std::string m = string(*v, "solver.method");
            if (m == "pcg") s.solver.method = SolverMethod::Pcg;
            else if (m == "cholesky") s.solver.method = SolverMethod::Cholesky;
            else fail("solver.method", "expected \"pcg\" or \"cholesky\"");
        }
        if (const auto* v = sv.optional("tolerance")) s.solver.tolerance = positive(*v, "solver.tolerance");
        if (const auto* v = sv.optional("max_iterations")) s.solver.max_iterations = integer(*v, "solver.max_iterations", 1);
        sv.finish();
    }
    if (const auto* pj = r.optional("post")) {
        Reader p(*pj, "post");
        if (const auto* v = p.optional("mc_resolution")) s.post.mc_resolution = integer(*v, "post.mc_resolution", 2);
        if (const auto* v = p.optional("mc_bisection_steps")) s.post.mc_bisection_steps = integer(*v, "post.mc_bisection_steps", 0);
        if (const auto* v = p.optional("mc_box")) s.post.mc_box = parse_box(*v, "post.mc_box");
        if (const auto* v = p.optional("vtk")) s.post.vtk_file = string(*v, "post.vtk");
        if (const auto* v = p.optional("summary")) s.post.summary_file = string(*v, "post.summary");
        if (const auto* v = p.optional("volumetric")) s.post.volumetric = boolean(*v, "post.volumetric");
        if (const auto* v = p.optional("volumetric_samples")) s.post.volumetric_samples = integer(*v, "post.volumetric_samples", 1);
        p.finish();
    }
    if (const auto* cj = r.optional("classify")) {
        Reader c(*cj, "classify");
        if (const auto* v = c.optional("epsilon")) {
            s.classify_epsilon = number(*v, "classify.epsilon");
            if (s.classify_epsilon < 0.0) fail("classify.epsilon", "must be non-negative");
        }
        c.finish();
    }
    r.finish();

    // Cross-field invariants.
    if (s.grid_bbox) {
        (void)s.grid();
    } else if (tree_bounding_box(*s.model).is_empty()) {
        fail("model", "model bounds are empty");
    }
    return s;
}

Scene parse_scene_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(kModule, "byte " + std::to_string(e.byte), std::string("syntax error: ") + e.what());
    }
    return parse_scene(doc);
}

Scene parse_scene_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError(kModule, path.string(), "cannot read scene file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene_text(ss.str());
}

json serialize_scene(const Scene& s)
{
    json doc;
    doc["model"] = serialize_node(*s.model);
    json grid = {{"cells", s.cells}};
    if (s.grid_bbox) grid["bbox"] = box_to_json(*s.grid_bbox);
    doc["grid"] = grid;
    doc["basis"] = {{"degree", s.degree}};
    json quad = {{"depth", s.octree_depth}, {"alpha_exponent", s.alpha_exponent}, {"active_samples", s.active_samples}};
    if (s.gauss) quad["gauss"] = *s.gauss;
    doc["quadrature"] = quad;
    doc["material"] = {{"youngs_modulus", s.youngs_modulus}, {"poisson_ratio", s.poisson_ratio}};
    doc["body_load"] = to_json(s.body_load);
    json dir = json::array();
    for (const auto& d : s.dirichlet) {
        json u = json::array();
        for (const auto& c : d.displacement) u.push_back(c ? json(*c) : json(nullptr));
        json e = {{"patch", patch_to_json(d.patch)}, {"displacement", u}};
        if (d.penalty) e["penalty"] = *d.penalty;
        dir.push_back(e);
    }
    doc["dirichlet"] = dir;
    json neu = json::array();
    for (const auto& n : s.neumann) neu.push_back({{"patch", patch_to_json(n.patch)}, {"traction", to_json(n.traction)}});
    doc["neumann"] = neu;
    doc["solver"] = {{"method", s.solver.method == SolverMethod::Cholesky ? "cholesky" : "pcg"},
                     {"tolerance", s.solver.tolerance}, {"max_iterations", s.solver.max_iterations}};
    json post = {{"mc_resolution", s.post.mc_resolution},
                 {"mc_bisection_steps", s.post.mc_bisection_steps},
                 {"vtk", s.post.vtk_file},
                 {"summary", s.post.summary_file},
                 {"volumetric", s.post.volumetric},
                 {"volumetric_samples", s.post.volumetric_samples}};
    if (s.post.mc_box) post["mc_box"] = box_to_json(*s.post.mc_box);
    doc["post"] = post;
    doc["classify"] = {{"epsilon", s.classify_epsilon}};
    return doc;
}

} // namespace csgfcm
