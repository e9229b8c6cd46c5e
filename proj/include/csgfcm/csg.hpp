#pragma once

#include "csgfcm/primitives.hpp"
#include "csgfcm/sweep.hpp"

#include <memory>
#include <variant>

namespace csgfcm {

using Primitive = std::variant<Sphere, Cuboid, Cylinder, SweepSolid>;

enum class BooleanOp { Union, Intersection, Difference };

class CsgNode;
using CsgNodePtr = std::shared_ptr<const CsgNode>;

/// Immutable CSG tree node: a primitive leaf or a binary Boolean operation.
/// Difference is ordered (left minus right). Subtrees may be shared.
class CsgNode {
public:
    struct Operation {
        BooleanOp op;
        CsgNodePtr left;
        CsgNodePtr right;
    };

    static CsgNodePtr leaf(Primitive primitive);
    static CsgNodePtr combine(BooleanOp op, CsgNodePtr left, CsgNodePtr right);

    bool is_leaf() const noexcept { return std::holds_alternative<Primitive>(content_); }
    const Primitive& primitive() const { return std::get<Primitive>(content_); }
    const Operation& operation() const { return std::get<Operation>(content_); }

    /// Number of primitive leaves (shared subtrees counted per reference).
    std::size_t leaf_count() const;

private:
    explicit CsgNode(std::variant<Primitive, Operation> content) : content_(std::move(content)) {}

    std::variant<Primitive, Operation> content_;
};

CsgNodePtr make_union(CsgNodePtr a, CsgNodePtr b);
CsgNodePtr make_intersection(CsgNodePtr a, CsgNodePtr b);
CsgNodePtr make_difference(CsgNodePtr a, CsgNodePtr b);
CsgNodePtr make_leaf(Primitive p);

/// A solid model: root node plus classification settings.
///
/// `epsilon` inflates every primitive comparison; the default 0 means exact
/// floating-point `<=` tests.
class CsgTree {
public:
    explicit CsgTree(CsgNodePtr root, double epsilon = 0.0);

    const CsgNodePtr& root() const noexcept { return root_; }
    double epsilon() const noexcept { return epsilon_; }

    Classification classify(const Point3& p) const;
    bool contains(const Point3& p) const { return classify(p) == Classification::Inside; }

private:
    CsgNodePtr root_;
    double epsilon_;
};

Classification primitive_contains(const Primitive& prim, const Point3& p, double eps = 0.0);
Aabb primitive_bounds(const Primitive& prim);

Classification classify(const CsgNode& node, const Point3& p, double eps = 0.0);
inline Classification classify(const CsgTree& tree, const Point3& p) { return tree.classify(p); }

/// Conservative axis-aligned bounds; an empty Intersection yields Aabb::empty().
Aabb tree_bounding_box(const CsgNode& node);
inline Aabb tree_bounding_box(const CsgTree& tree) { return tree_bounding_box(*tree.root()).inflated(tree.epsilon()); }

} // namespace csgfcm
