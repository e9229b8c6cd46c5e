#include "csgfcm/csg.hpp"
#include "csgfcm/errors.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace csgfcm;

namespace {

constexpr auto In = Classification::Inside;
constexpr auto Out = Classification::Outside;

CsgNodePtr sphere(Point3 c, double r) { return make_leaf(Sphere(c, r)); }
CsgNodePtr cuboid(Point3 a, Point3 b) { return make_leaf(Cuboid(a, b)); }

Mat3 rot_z_90()
{
    Mat3 q;
    q.col(0) = Vec3(0, 1, 0);
    q.col(1) = Vec3(-1, 0, 0);
    q.col(2) = Vec3(0, 0, 1);
    return q;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("to_local examples")
{
    CHECK(to_local(Frame::identity(), {1, 2, 3}).isApprox(Vec3(1, 2, 3)));

    const Frame rotated = Frame::from_translation(rot_z_90(), Vec3::Zero());
    CHECK((to_local(rotated, {1, 0, 0}) - Vec3(0, -1, 0)).norm() < 1e-15);

    const Frame shifted = Frame::from_translation(Mat3::Identity(), Vec3(1, 1, 1));
    CHECK((to_local(shifted, {0, 0, 0}) - Vec3(1, 1, 1)).norm() < 1e-15);
}

TEST_CASE("to_local inverse recovers the point")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const Vec3 z(u(rng), u(rng), u(rng));
        const Vec3 x(u(rng), u(rng), u(rng));
        if (z.norm() < 1e-3 || z.normalized().cross(x).norm() < 1e-3) continue;
        const Frame f = Frame::from_axes({u(rng), u(rng), u(rng)}, z, &x);
        CHECK(Frame::orthonormality_defect(f.basis()) < 1e-12);
        const Point3 p(u(rng), u(rng), u(rng));
        CHECK((f.to_global(f.to_local(p)) - p).norm() < 1e-12 * (1 + p.norm()));
        CHECK(f.to_local(f.origin()).norm() < 1e-12 * (1 + f.origin().norm()));
    }
}

TEST_CASE("frame rejects non-orthonormal or left-handed bases")
{
    Mat3 skew = Mat3::Identity();
    skew(0, 1) = 1e-6;
    CHECK_THROWS_AS(Frame::from_translation(skew, Vec3::Zero()), GeometryError);
    Mat3 mirror = Mat3::Identity();
    mirror(2, 2) = -1;
    CHECK_THROWS_AS(Frame::from_translation(mirror, Vec3::Zero()), GeometryError);
    const Vec3 z(0, 0, 1);
    CHECK_THROWS_AS(Frame::from_axes({0, 0, 0}, Vec3::Zero()), GeometryError);
    CHECK_THROWS_AS(Frame::from_axes({0, 0, 0}, z, &z), GeometryError);
}

TEST_CASE("sphere, cuboid and cylinder examples")
{
    const Sphere s({0, 0, 0}, 1);
    CHECK(sphere_contains(s, {0.5, 0, 0}) == In);
    CHECK(sphere_contains(s, {1, 0, 0}) == In);
    CHECK(sphere_contains(s, {2, 0, 0}) == Out);

    const Cuboid c({0, 0, 0}, {1, 1, 1});
    CHECK(cuboid_contains(c, {0.5, 0.5, 0.5}) == In);
    CHECK(cuboid_contains(c, {1, 1, 1}) == In);
    CHECK(cuboid_contains(c, {0.5, 0.5, 1.001}) == Out);

    const Cylinder cy(Frame::identity(), 1, 2);
    CHECK(cylinder_contains(cy, {0, 0, 1}) == In);
    CHECK(cylinder_contains(cy, {1, 0, 1}) == In);
    CHECK(cylinder_contains(cy, {0, 0, 2.1}) == Out);
    CHECK(cylinder_contains(cy, {0, 0, -0.1}) == Out);
    CHECK(cylinder_contains(cy, {0.8, 0.8, 1}) == Out);
}

TEST_CASE("primitive constructors validate")
{
    CHECK_THROWS_AS(Sphere({0, 0, 0}, -1), GeometryError);
    CHECK_THROWS_AS(Sphere({0, 0, 0}, 0), GeometryError);
    CHECK_THROWS_AS(Cuboid({1, 0, 0}, {0, 1, 1}), GeometryError);
    CHECK_THROWS_AS(Cylinder(Frame::identity(), 1, 0), GeometryError);
    CHECK_THROWS_AS(Sphere({std::nan(""), 0, 0}, 1), GeometryError);
}

TEST_CASE("oblique cylinder against an explicit axis computation")
{
    const Vec3 axis = Vec3(1, 2, 2).normalized();
    const Point3 base(0.3, -0.2, 0.5);
    const Cylinder cy(Frame::from_axes(base, axis), 0.7, 1.5);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    int inside = 0;
    for (int i = 0; i < 20000; ++i) {
        const Point3 p(u(rng), u(rng), u(rng));
        const double along = (p - base).dot(axis);
        const double radial = ((p - base) - along * axis).norm();
        const double margin = std::min({std::abs(along), std::abs(along - 1.5), std::abs(radial - 0.7)});
        if (margin < 1e-9) continue;
        const bool expect = along >= 0 && along <= 1.5 && radial <= 0.7;
        inside += expect;
        CHECK((cylinder_contains(cy, p) == In) == expect);
    }
    CHECK(inside > 100);
    // The bounds must hold every inside sample.
    const Aabb b = cy.bounds();
    for (int i = 0; i < 2000; ++i) {
        const Point3 p(u(rng), u(rng), u(rng));
        if (cylinder_contains(cy, p) == In) CHECK(b.contains(p));
    }
}

TEST_CASE("classify examples")
{
    const CsgTree two(make_union(sphere({0, 0, 0}, 1), sphere({3, 0, 0}, 1)));
    CHECK(two.classify({3, 0, 0.5}) == In);

    const CsgTree shell(make_difference(sphere({0, 0, 0}, 2), sphere({0, 0, 0}, 1)));
    CHECK(shell.classify({0.5, 0, 0}) == Out);
    CHECK(shell.classify({1.5, 0, 0}) == In);
    // Non-regularized: the inner boundary belongs to the subtracted body.
    CHECK(shell.classify({1, 0, 0}) == Out);

    const CsgTree cap(make_intersection(cuboid({0, 0, 0}, {1, 1, 1}), sphere({1, 1, 1}, 0.5)));
    CHECK(cap.classify({0.1, 0.1, 0.1}) == Out);
    CHECK(cap.classify({0.9, 0.9, 0.9}) == In);
}

TEST_CASE("classification epsilon inflates primitives")
{
    const auto s = sphere({0, 0, 0}, 1);
    CHECK(CsgTree(s).classify({1.05, 0, 0}) == Out);
    CHECK(CsgTree(s, 0.1).classify({1.05, 0, 0}) == In);
    CHECK_THROWS_AS(CsgTree(s, -1.0), InputError);
}

TEST_CASE("tree_bounding_box examples")
{
    const Aabb s = tree_bounding_box(*sphere({0, 0, 0}, 1));
    CHECK(s.lo.isApprox(Vec3(-1, -1, -1)));
    CHECK(s.hi.isApprox(Vec3(1, 1, 1)));

    const Aabb u = tree_bounding_box(*make_union(cuboid({0, 0, 0}, {1, 1, 1}), cuboid({2, 2, 2}, {3, 3, 3})));
    CHECK(u.lo.isApprox(Vec3(0, 0, 0)));
    CHECK(u.hi.isApprox(Vec3(3, 3, 3)));

    const Aabb d = tree_bounding_box(*make_difference(cuboid({0, 0, 0}, {1, 1, 1}), sphere({5, 5, 5}, 10)));
    CHECK(d.lo.isApprox(Vec3(0, 0, 0)));
    CHECK(d.hi.isApprox(Vec3(1, 1, 1)));

    const Aabb e = tree_bounding_box(*make_intersection(cuboid({0, 0, 0}, {1, 1, 1}), cuboid({2, 2, 2}, {3, 3, 3})));
    CHECK(e.is_empty());
}

TEST_CASE("idempotence and De Morgan consistency")
{
    const auto a = make_difference(make_leaf(Cylinder(Frame::from_axes({0, 0, -1}, {0.2, 0, 1}), 0.8, 2)),
                                   sphere({0.3, 0.2, 0.1}, 0.5));
    const auto b = cuboid({-0.5, -0.5, -0.5}, {0.9, 0.7, 0.4});
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 20000; ++i) {
        const Point3 p(u(rng), u(rng), u(rng));
        const auto ca = classify(*a, p);
        CHECK(classify(*make_union(a, a), p) == ca);
        CHECK(classify(*make_intersection(a, a), p) == ca);
        CHECK(classify(*make_difference(a, a), p) == Out);
        if (classify(*make_intersection(a, b), p) == In) {
            CHECK(ca == In);
            CHECK(classify(*b, p) == In);
        }
    }
}

TEST_CASE("points outside the bounding box classify Outside")
{
    const auto tree = make_union(make_difference(cuboid({0, 0, 0}, {2, 1, 1}), sphere({1, 0.5, 0.5}, 0.4)),
                                 make_leaf(Cylinder(Frame::from_axes({2, 0.5, 0.5}, {1, 1, 0}), 0.3, 1)));
    const Aabb box = tree_bounding_box(*tree);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 5);
    int tested = 0;
    for (int i = 0; i < 200000 && tested < 100000; ++i) {
        const Point3 p(u(rng), u(rng), u(rng));
        if (box.contains(p)) continue;
        ++tested;
        REQUIRE(classify(*tree, p) == Out);
    }
    CHECK(tested == 100000);
}

TEST_CASE("points on analytic boundaries classify Inside")
{
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-1, 1);
    const Sphere s({0.25, 0.5, 0.75}, 1);
    const Cuboid c({-1, -2, -3}, {1, 2, 3});
    const Cylinder cy(Frame::identity(), 2, 3);
    for (int i = 0; i < 1000; ++i) {
        // Sphere: scale so the point lies on the surface up to one ulp; accept
        // it only if the rounded distance is exactly the radius.
        const Vec3 d = Vec3(u(rng), u(rng), u(rng)).normalized();
        const Point3 ps = s.center() + d;
        if ((ps - s.center()).norm() <= 1.0) CHECK(sphere_contains(s, ps) == In);

        const Point3 pc(1, 2 * u(rng), 3 * u(rng));
        CHECK(cuboid_contains(c, pc) == In);
        CHECK(cuboid_contains(c, Point3(u(rng), -2, 3)) == In);

        CHECK(cylinder_contains(cy, Point3(2 * u(rng) * 0.7, 2 * u(rng) * 0.7, 0)) == In);
        CHECK(cylinder_contains(cy, Point3(0.1, 0.2, 3)) == In);
        CHECK(cylinder_contains(cy, Point3(2, 0, 3 * std::abs(u(rng)))) == In);
        CHECK(cylinder_contains(cy, Point3(0, -2, 1)) == In);
    }
}

TEST_CASE("classification matches the flattened Boolean formula")
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_real_distribution<double> r(0.2, 0.9);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> op(0, 2);

    for (int t = 0; t < 10; ++t) {
        std::vector<Primitive> prims;
        for (int i = 0; i < 5; ++i) {
            const Point3 c(u(rng), u(rng), u(rng));
            switch (kind(rng)) {
            case 0: prims.emplace_back(Sphere(c, r(rng))); break;
            case 1: prims.emplace_back(Cuboid(c, c + Vec3(r(rng), r(rng), r(rng)))); break;
            default: prims.emplace_back(Cylinder(Frame::from_axes(c, {u(rng), u(rng), 1.0}), r(rng), r(rng)));
            }
        }
        // Left-deep chain ((((p0 o p1) o p2) o p3) o p4)
        std::vector<BooleanOp> ops;
        CsgNodePtr tree = make_leaf(prims[0]);
        for (std::size_t i = 1; i < prims.size(); ++i) {
            ops.push_back(static_cast<BooleanOp>(op(rng)));
            tree = CsgNode::combine(ops.back(), tree, make_leaf(prims[i]));
        }
        for (int k = 0; k < 5000; ++k) {
            const Point3 p(1.5 * u(rng), 1.5 * u(rng), 1.5 * u(rng));
            bool v = primitive_contains(prims[0], p) == In;
            for (std::size_t i = 1; i < prims.size(); ++i) {
                const bool w = primitive_contains(prims[i], p) == In;
                switch (ops[i - 1]) {
                case BooleanOp::Union: v = v || w; break;
                case BooleanOp::Intersection: v = v && w; break;
                case BooleanOp::Difference: v = v && !w; break;
                }
            }
            REQUIRE((classify(*tree, p) == In) == v);
        }
    }
}

TEST_CASE("shared subtrees and leaf count")
{
    const auto a = sphere({0, 0, 0}, 1);
    const auto t = make_union(make_difference(a, cuboid({0, 0, 0}, {1, 1, 1})), a);
    CHECK(t->leaf_count() == 3);
    CHECK(CsgTree(t).classify({0.5, 0.5, 0.5}) == In);
    CHECK_THROWS_AS(make_union(a, nullptr), InputError);
}

} // TEST_SUITE
