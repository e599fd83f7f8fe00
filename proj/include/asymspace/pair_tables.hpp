#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asymspace/norms.hpp"

namespace asymspace {

/// A pair of nonnegative functions given by value tables on a finite point
/// set, constrained by rho1(z') + rho2(z) >= q(z' - z) for all table points.
/// The strict-positivity condition rho1 + rho2 > 0 is reported, not
/// enforced: a minimal pair over a single point legitimately violates it.
class FinitePairTable {
public:
    FinitePairTable(std::vector<Vec> points, std::vector<Rat> rho1, std::vector<Rat> rho2, const PolyAsymNorm& q)
        : points_(std::move(points)), rho1_(std::move(rho1)), rho2_(std::move(rho2)) {
        if (points_.empty()) throw InputError("FinitePairTable: empty point set");
        if (rho1_.size() != points_.size() || rho2_.size() != points_.size())
            throw InputError("FinitePairTable: table size mismatch");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].dim() != q.dim()) throw InputError("FinitePairTable: point dimension mismatch");
            if (rho1_[i].is_negative() || rho2_[i].is_negative())
                throw InputError("FinitePairTable: table values must be nonnegative");
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i] == points_[j]) throw InputError("FinitePairTable: duplicate points");
        }
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = 0; j < points_.size(); ++j)
                if (rho1_[i] + rho2_[j] < q(points_[i] - points_[j]))
                    throw InputError("FinitePairTable: condition (a) fails between points " + std::to_string(i) +
                                     " and " + std::to_string(j));
    }

    const std::vector<Vec>& points() const { return points_; }
    const std::vector<Rat>& rho1() const { return rho1_; }
    const std::vector<Rat>& rho2() const { return rho2_; }
    std::size_t size() const { return points_.size(); }

    /// Condition (d): rho1(z) + rho2(z) > 0 at every table point.
    bool condition_d() const {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (!(rho1_[i] + rho2_[i]).is_positive()) return false;
        return true;
    }

private:
    std::vector<Vec> points_;
    std::vector<Rat> rho1_;
    std::vector<Rat> rho2_;
};

/// Pointwise-minimal pair below the given initial tables, computed by the
/// alternating updates
///   rho1(z) <- 0 ∨ max_{z' != z} (q(z - z') - rho2(z'))
///   rho2(z) <- 0 ∨ max_{z' != z} (q(z' - z) - rho1(z'))
/// run until both sup-equations hold exactly at every point. Each update is
/// monotone decreasing and keeps condition (a), so the alternation is a
/// finite fixed-point iteration; a pass cap of 2·N + 3 is enforced.
inline FinitePairTable minimal_pair(const std::vector<Vec>& points, const PolyAsymNorm& q,
                                    const std::vector<Rat>& rho1_init, const std::vector<Rat>& rho2_init) {
    FinitePairTable init(points, rho1_init, rho2_init, q);  // validates shape and condition (a)
    const std::size_t n = points.size();

    Mat d_fwd(n, n);  // d_fwd(i, j) = q(points[i] - points[j])
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d_fwd(i, j) = q(points[i] - points[j]);

    std::vector<Rat> rho1 = rho1_init, rho2 = rho2_init;
    auto update1 = [&](std::size_t i) {
        Rat best(0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) best = max(best, d_fwd(i, j) - rho2[j]);
        return best;
    };
    auto update2 = [&](std::size_t i) {
        Rat best(0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) best = max(best, d_fwd(j, i) - rho1[j]);
        return best;
    };
    auto is_fixed_point = [&] {
        for (std::size_t i = 0; i < n; ++i)
            if (rho1[i] != update1(i) || rho2[i] != update2(i)) return false;
        return true;
    };

    const std::size_t pass_cap = 2 * n + 3;
    bool converged = false;
    for (std::size_t pass = 0; pass < pass_cap; ++pass) {
        if (is_fixed_point()) {
            converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) rho1[i] = update1(i);
        for (std::size_t i = 0; i < n; ++i) rho2[i] = update2(i);
    }
    if (!converged && !is_fixed_point())
        throw ConvergenceFailureError("minimal_pair: no fixed point within " + std::to_string(pass_cap) + " passes");

    for (std::size_t i = 0; i < n; ++i)
        if (rho1[i] > rho1_init[i] || rho2[i] > rho2_init[i])
            throw Error("minimal_pair: result exceeds its input tables");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rho1[i] - rho1[j] > d_fwd(i, j)) throw Error("minimal_pair: condition (b1) recheck failed");
            if (rho2[i] - rho2[j] > d_fwd(j, i)) throw Error("minimal_pair: condition (b2) recheck failed");
        }
    return FinitePairTable(points, std::move(rho1), std::move(rho2), q);
}

/// Nonnegative convex function on R^n in one of two exact forms: a clipped
/// maximum of affine pieces, or the hull envelope of finitely many anchor
/// values, evaluated by one LP per query.
class GaugeFunction {
public:
    struct AffinePiece {
        Vec slope;
        Rat offset;
    };

    /// value(z) = max(0, max_j slope_j·z + offset_j)
    static GaugeFunction max_affine(std::size_t dim, std::vector<AffinePiece> pieces) {
        GaugeFunction g;
        g.kind_ = Kind::max_affine;
        g.dim_ = dim;
        for (const auto& piece : pieces)
            if (piece.slope.dim() != dim) throw InputError("GaugeFunction: piece dimension mismatch");
        g.pieces_ = std::move(pieces);
        return g;
    }

    /// value(z) = min over convex weights w on the anchors of
    ///   sum w_x·value_x + q(z - sum w_x·x)        (forward difference), or
    ///   sum w_x·value_x + q(sum w_x·x - z)        (backward difference).
    static GaugeFunction hull_envelope(std::vector<Vec> anchors, std::vector<Rat> values, PolyAsymNorm q,
                                       bool forward_difference) {
        if (anchors.empty() || anchors.size() != values.size())
            throw InputError("GaugeFunction: anchors and values must match and be nonempty");
        for (const auto& a : anchors)
            if (a.dim() != q.dim()) throw InputError("GaugeFunction: anchor dimension mismatch");
        for (const auto& v : values)
            if (v.is_negative()) throw InputError("GaugeFunction: negative anchor value");
        GaugeFunction g;
        g.kind_ = Kind::hull_envelope;
        g.dim_ = q.dim();
        g.anchors_ = std::move(anchors);
        g.values_ = std::move(values);
        g.norm_ = std::move(q);
        g.forward_ = forward_difference;
        return g;
    }

    std::size_t dim() const { return dim_; }
    bool is_hull_envelope() const { return kind_ == Kind::hull_envelope; }
    const std::vector<Vec>& anchors() const { return anchors_; }
    const std::vector<Rat>& anchor_values() const { return values_; }

    Rat operator()(const Vec& z) const {
        if (z.dim() != dim_) throw InputError("GaugeFunction: evaluation dimension mismatch");
        if (kind_ == Kind::max_affine) {
            Rat best(0);
            for (const auto& piece : pieces_) best = max(best, dot(piece.slope, z) + piece.offset);
            return best;
        }
        // variables (w_1..w_N, t): minimize sum w_i v_i + t
        const std::size_t n = anchors_.size();
        Vec obj(n + 1);
        for (std::size_t i = 0; i < n; ++i) obj[i] = values_[i];
        obj[n] = 1;
        auto lp = LinearProgram::minimize(std::move(obj));
        for (std::size_t i = 0; i < n; ++i) lp.add_le(-Vec::unit(n + 1, i), Rat(0));
        {
            Vec ones(n + 1);
            for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
            lp.add_eq(std::move(ones), Rat(1));
        }
        for (const auto& a : norm_->generators()) {
            // forward:  a·z - a·(sum w x) <= t;  backward: a·(sum w x) - a·z <= t
            Vec row(n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                Rat ax = dot(a, anchors_[i]);
                row[i] = forward_ ? -ax : ax;
            }
            row[n] = -1;
            Rat bound = forward_ ? -dot(a, z) : dot(a, z);
            lp.add_le(std::move(row), std::move(bound));
        }
        auto out = solve(lp);
        if (out.status != LPOutcome::Status::optimal) throw Error("GaugeFunction: envelope program not optimal");
        return *out.value;
    }

private:
    enum class Kind { max_affine, hull_envelope };

    GaugeFunction() = default;

    Kind kind_ = Kind::max_affine;
    std::size_t dim_ = 0;
    std::vector<AffinePiece> pieces_;
    std::vector<Vec> anchors_;
    std::vector<Rat> values_;
    std::optional<PolyAsymNorm> norm_;
    bool forward_ = true;
};

/// The pair (rho1, rho2) on all of R^n.
struct PiecewiseGaugePair {
    GaugeFunction rho1;
    GaugeFunction rho2;

    std::size_t dim() const { return rho1.dim(); }
};

/// Extends a finite pair table to all of R^n by the hull envelope:
///   rho1(z) = min_w [ sum w_x rho1(x) + q(z - sum w_x x) ]
///   rho2(z) = min_w [ sum w_x rho2(x) + q(sum w_x x - z) ]
/// over convex weights w on the anchor set. The envelope keeps (a), (b1),
/// (b2) and convexity globally, reproduces values at most the table's at
/// the anchors, is dominated by the single-anchor extension, and keeps (d)
/// when q separates points (T1).
inline PiecewiseGaugePair extend_pair_globally(const FinitePairTable& table, const PolyAsymNorm& q) {
    if (!table.condition_d())
        throw InputError("extend_pair_globally: condition (d) fails on the table");
    if (!q.is_t1())
        throw UnsupportedNormError("extend_pair_globally: norm is not T1, global condition (d) would be lost");
    return PiecewiseGaugePair{
        GaugeFunction::hull_envelope(table.points(), table.rho1(), q, /*forward_difference=*/true),
        GaugeFunction::hull_envelope(table.points(), table.rho2(), q, /*forward_difference=*/false),
    };
}

}  // namespace asymspace
