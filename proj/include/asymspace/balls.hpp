#pragma once

#include <optional>

#include "asymspace/norms.hpp"

namespace asymspace {

/// Closed ball of a quasi-metric d_p(x, y) = p(y - x). A forward ball
/// collects the points reachable from the center within the radius, a
/// backward ball the points from which the center is reachable.
struct Ball {
    enum class Orientation { forward, backward };

    Vec center;
    Rat radius;  // radius zero is allowed
    Orientation orientation;
    PolyAsymNorm norm;

    Ball(Vec center_, Rat radius_, Orientation orientation_, PolyAsymNorm norm_)
        : center(std::move(center_)), radius(std::move(radius_)), orientation(orientation_), norm(std::move(norm_)) {
        if (center.dim() != norm.dim()) throw InputError("Ball: center dimension mismatch");
        if (radius.is_negative()) throw InputError("Ball: negative radius");
    }
};

inline bool ball_contains(const Ball& b, const Vec& y) {
    if (y.dim() != b.center.dim()) throw InputError("ball_contains: dimension mismatch");
    if (b.orientation == Ball::Orientation::forward) return b.norm(y - b.center) <= b.radius;
    return b.norm(b.center - y) <= b.radius;
}

/// Decides B_q[y1, r1] ∩ B_q̄[y2, r2] ≠ ∅ and produces the convex-combination
/// witness y = (r2·y1 + r1·y2) / (r1 + r2) when the intersection is nonempty.
/// By the equivalence with q(y2 - y1) <= r1 + r2, an empty return certifies
/// an empty intersection.
inline std::optional<Vec> pair_intersection_witness(const Vec& y1, const Rat& r1, const Vec& y2, const Rat& r2,
                                                    const PolyAsymNorm& q) {
    if (y1.dim() != q.dim() || y2.dim() != q.dim())
        throw InputError("pair_intersection_witness: dimension mismatch");
    if (r1.is_negative() || r2.is_negative()) throw InputError("pair_intersection_witness: negative radius");
    const Rat total = r1 + r2;
    if (total.is_zero()) {
        if (y1 == y2) return y1;
        throw DegenerateRadiusError("pair_intersection_witness: zero total radius around distinct centers");
    }
    if (q(y2 - y1) > total) return std::nullopt;
    Vec y = (r2 / total) * y1 + (r1 / total) * y2;
    if (q(y - y1) > r1 || q(y2 - y) > r2) throw Error("pair_intersection_witness: witness recheck failed");
    return y;
}

}  // namespace asymspace
