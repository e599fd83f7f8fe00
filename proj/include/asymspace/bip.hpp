#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "asymspace/balls.hpp"

namespace asymspace {

/// Finite family of mixed balls: around each center x_i a forward ball of
/// radius r_i and a backward ball of radius s_i, all for one norm.
struct MixedBallFamily {
    struct Entry {
        Vec center;
        Rat forward_radius;   // r_i
        Rat backward_radius;  // s_i
    };

    PolyAsymNorm norm;
    std::vector<Entry> entries;

    MixedBallFamily(PolyAsymNorm norm_, std::vector<Entry> entries_)
        : norm(std::move(norm_)), entries(std::move(entries_)) {
        for (const auto& e : entries) {
            if (e.center.dim() != norm.dim()) throw InputError("MixedBallFamily: center dimension mismatch");
            if (!e.forward_radius.is_positive() || !e.backward_radius.is_positive())
                throw InputError("MixedBallFamily: radii must be strictly positive");
        }
    }
};

/// Checks the mixed pairwise premise q(x_j - x_i) <= r_i + s_j for every
/// ordered pair; returns the failing pairs. Empty result means every forward
/// ball meets every backward ball.
inline std::vector<std::pair<std::size_t, std::size_t>> pairwise_mixed_check(const MixedBallFamily& fam) {
    std::vector<std::pair<std::size_t, std::size_t>> failures;
    for (std::size_t i = 0; i < fam.entries.size(); ++i)
        for (std::size_t j = 0; j < fam.entries.size(); ++j) {
            const auto& ei = fam.entries[i];
            const auto& ej = fam.entries[j];
            if (fam.norm(ej.center - ei.center) > ei.forward_radius + ej.backward_radius) failures.emplace_back(i, j);
        }
    return failures;
}

/// The exact feasibility system for a point common to every ball of the
/// family: a_k·(y - x_i) <= r_i and a_k·(x_i - y) <= s_i for all k, i.
inline LinearProgram family_lp(const MixedBallFamily& fam) {
    auto lp = LinearProgram::feasibility_of(fam.norm.dim());
    for (const auto& e : fam.entries) {
        for (const auto& a : fam.norm.generators()) {
            lp.add_le(a, e.forward_radius + dot(a, e.center));
            lp.add_le(-a, e.backward_radius - dot(a, e.center));
        }
    }
    return lp;
}

/// Common point of all balls, or a Farkas certificate that none exists.
struct FamilyIntersection {
    std::optional<Vec> point;
    std::optional<Vec> certificate;  // multipliers for family_lp(fam)
};

/// The feasibility system of an arbitrary ball collection (the balls may
/// carry different norms).
inline LinearProgram balls_lp(const std::vector<Ball>& balls) {
    if (balls.empty()) throw InputError("balls_lp: empty collection");
    const std::size_t dim = balls[0].center.dim();
    auto lp = LinearProgram::feasibility_of(dim);
    for (const auto& b : balls) {
        if (b.center.dim() != dim) throw InputError("balls_lp: dimension mismatch");
        for (const auto& a : b.norm.generators()) {
            if (b.orientation == Ball::Orientation::forward)
                lp.add_le(a, b.radius + dot(a, b.center));
            else
                lp.add_le(-a, b.radius - dot(a, b.center));
        }
    }
    return lp;
}

/// Common point of an arbitrary ball collection.
inline FamilyIntersection common_point(const std::vector<Ball>& balls) {
    auto out = solve(balls_lp(balls));
    if (out.status == LPOutcome::Status::optimal) {
        for (const auto& b : balls)
            if (!ball_contains(b, *out.point)) throw Error("common_point: point recheck failed");
        return FamilyIntersection{std::move(out.point), std::nullopt};
    }
    return FamilyIntersection{std::nullopt, std::move(out.certificate)};
}

inline FamilyIntersection common_point(const MixedBallFamily& fam) {
    auto out = solve(family_lp(fam));
    if (out.status == LPOutcome::Status::optimal) {
        for (const auto& e : fam.entries) {
            if (fam.norm(*out.point - e.center) > e.forward_radius ||
                fam.norm(e.center - *out.point) > e.backward_radius)
                throw Error("common_point: point recheck failed");
        }
        return FamilyIntersection{std::move(out.point), std::nullopt};
    }
    return FamilyIntersection{std::nullopt, std::move(out.certificate)};
}

/// Verdict of one mixed-BIP instance.
struct BipReport {
    enum class Verdict {
        premise_fails,      // some pair of balls already fails to intersect
        bip_holds_here,     // pairwise premise holds and a common point exists
        bip_violated_here,  // pairwise premise holds but the intersection is empty
    };

    Verdict verdict;
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
    std::optional<Vec> point;
    std::optional<Vec> certificate;
};

inline BipReport mixed_bip_report(const MixedBallFamily& fam) {
    BipReport report{};
    report.failing_pairs = pairwise_mixed_check(fam);
    if (!report.failing_pairs.empty()) {
        report.verdict = BipReport::Verdict::premise_fails;
        return report;
    }
    auto inter = common_point(fam);
    if (inter.point) {
        report.verdict = BipReport::Verdict::bip_holds_here;
        report.point = std::move(inter.point);
    } else {
        report.verdict = BipReport::Verdict::bip_violated_here;
        report.certificate = std::move(inter.certificate);
    }
    return report;
}

/// Witness of metric convexity: z between x and y at quasi-distances r and s.
inline Vec metric_convexity_witness(const Vec& x, const Vec& y, const Rat& r, const Rat& s, const PolyAsymNorm& q) {
    if (x.dim() != q.dim() || y.dim() != q.dim()) throw InputError("metric_convexity_witness: dimension mismatch");
    if (r.is_negative() || s.is_negative()) throw InputError("metric_convexity_witness: negative radius");
    const Rat total = r + s;
    if (total.is_zero() || q(y - x) > total)
        throw NoWitnessError("metric_convexity_witness: q(y - x) <= r + s required with r + s > 0");
    Vec z = (s / total) * x + (r / total) * y;
    if (q(z - x) > r || q(y - z) > s) throw Error("metric_convexity_witness: witness recheck failed");
    return z;
}

/// The d^s-ball family check: with r_i = s_i the mixed pair of balls around
/// each center is exactly the symmetrized-metric ball B_{d^s}[x_i, r_i].
inline BipReport symmetrized_family_check(const MixedBallFamily& fam) {
    for (const auto& e : fam.entries)
        if (e.forward_radius != e.backward_radius)
            throw ShapeError("symmetrized_family_check: family must have r_i = s_i");
    return mixed_bip_report(fam);
}

}  // namespace asymspace
