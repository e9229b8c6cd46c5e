#include "csgfcm/csg.hpp"

#include "csgfcm/errors.hpp"

namespace csgfcm {

CsgNodePtr CsgNode::leaf(Primitive primitive)
{
    return CsgNodePtr(new CsgNode(std::move(primitive)));
}

CsgNodePtr CsgNode::combine(BooleanOp op, CsgNodePtr left, CsgNodePtr right)
{
    if (!left || !right) throw InputError("geometry", "", "Boolean operation needs two operands");
    return CsgNodePtr(new CsgNode(Operation{op, std::move(left), std::move(right)}));
}

std::size_t CsgNode::leaf_count() const
{
    if (is_leaf()) return 1;
    return operation().left->leaf_count() + operation().right->leaf_count();
}

CsgNodePtr make_union(CsgNodePtr a, CsgNodePtr b) { return CsgNode::combine(BooleanOp::Union, std::move(a), std::move(b)); }
CsgNodePtr make_intersection(CsgNodePtr a, CsgNodePtr b)
{
    return CsgNode::combine(BooleanOp::Intersection, std::move(a), std::move(b));
}
CsgNodePtr make_difference(CsgNodePtr a, CsgNodePtr b)
{
    return CsgNode::combine(BooleanOp::Difference, std::move(a), std::move(b));
}
CsgNodePtr make_leaf(Primitive p) { return CsgNode::leaf(std::move(p)); }

CsgTree::CsgTree(CsgNodePtr root, double epsilon) : root_(std::move(root)), epsilon_(epsilon)
{
    if (!root_) throw InputError("geometry", "", "CSG tree has no root");
    if (!(epsilon_ >= 0.0)) throw InputError("geometry", "", "classification epsilon must be non-negative");
}

Classification CsgTree::classify(const Point3& p) const { return csgfcm::classify(*root_, p, epsilon_); }

Classification primitive_contains(const Primitive& prim, const Point3& p, double eps)
{
    return std::visit(
        [&](const auto& x) -> Classification {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sphere>) return sphere_contains(x, p, eps);
            else if constexpr (std::is_same_v<T, Cuboid>) return cuboid_contains(x, p, eps);
            else if constexpr (std::is_same_v<T, Cylinder>) return cylinder_contains(x, p, eps);
            else return sweep_contains(x, p, eps);
        },
        prim);
}

Aabb primitive_bounds(const Primitive& prim)
{
    return std::visit([](const auto& x) { return x.bounds(); }, prim);
}

Classification classify(const CsgNode& node, const Point3& p, double eps)
{
    if (node.is_leaf()) return primitive_contains(node.primitive(), p, eps);
    const auto& op = node.operation();
    const bool left = classify(*op.left, p, eps) == Classification::Inside;
    switch (op.op) {
    case BooleanOp::Union:
        return left ? Classification::Inside : classify(*op.right, p, eps);
    case BooleanOp::Intersection:
        return left ? classify(*op.right, p, eps) : Classification::Outside;
    case BooleanOp::Difference:
        if (!left) return Classification::Outside;
        return classify(*op.right, p, eps) == Classification::Inside ? Classification::Outside
                                                                      : Classification::Inside;
    }
    return Classification::Outside;
}

Aabb tree_bounding_box(const CsgNode& node)
{
    if (node.is_leaf()) return primitive_bounds(node.primitive());
    const auto& op = node.operation();
    switch (op.op) {
    case BooleanOp::Union:
        return hull(tree_bounding_box(*op.left), tree_bounding_box(*op.right));
    case BooleanOp::Intersection:
        return intersection(tree_bounding_box(*op.left), tree_bounding_box(*op.right));
    case BooleanOp::Difference:
        return tree_bounding_box(*op.left);
    }
    return Aabb::empty();
}

} // namespace csgfcm
