#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "asymspace/linalg.hpp"
#include "asymspace/vec.hpp"

namespace asymspace {

/// Linear program over exact rationals. Variables are free; constraints are
/// row·x <= bound, equalities are row·x = value.
struct LinearProgram {
    enum class Sense { maximize, minimize, feasibility };

    Vec objective;  // zero-length allowed for feasibility
    std::vector<std::pair<Vec, Rat>> constraints;
    std::vector<std::pair<Vec, Rat>> equalities;
    Sense sense = Sense::feasibility;
    std::size_t dim = 0;

    static LinearProgram feasibility_of(std::size_t dim) {
        LinearProgram lp;
        lp.dim = dim;
        lp.sense = Sense::feasibility;
        return lp;
    }
    static LinearProgram maximize(Vec objective) {
        LinearProgram lp;
        lp.dim = objective.dim();
        lp.objective = std::move(objective);
        lp.sense = Sense::maximize;
        return lp;
    }
    static LinearProgram minimize(Vec objective) {
        LinearProgram lp;
        lp.dim = objective.dim();
        lp.objective = std::move(objective);
        lp.sense = Sense::minimize;
        return lp;
    }

    LinearProgram& add_le(Vec row, Rat bound) {
        if (row.dim() != dim) throw InputError("LinearProgram: constraint dimension mismatch");
        constraints.emplace_back(std::move(row), std::move(bound));
        return *this;
    }
    LinearProgram& add_eq(Vec row, Rat value) {
        if (row.dim() != dim) throw InputError("LinearProgram: equality dimension mismatch");
        equalities.emplace_back(std::move(row), std::move(value));
        return *this;
    }
};

/// Result of solve(). Every returned artifact is exact and re-checkable:
/// an optimal point satisfies all constraints with exact arithmetic, an
/// infeasibility certificate passes verify_farkas, an unbounded direction
/// passes verify_ray.
struct LPOutcome {
    enum class Status { optimal, infeasible, unbounded };

    Status status;
    std::optional<Vec> point;  // optimal solution, or the improving ray when unbounded
    std::optional<Rat> value;
    /// Farkas multipliers when infeasible. Layout: one per inequality
    /// constraint, then one per equality read as row·x <= value, then one per
    /// equality read as -row·x <= -value. All entries nonnegative.
    std::optional<Vec> certificate;
};

inline bool satisfies(const LinearProgram& lp, const Vec& x) {
    if (x.dim() != lp.dim) return false;
    for (const auto& [row, bound] : lp.constraints)
        if (dot(row, x) > bound) return false;
    for (const auto& [row, value] : lp.equalities)
        if (dot(row, x) != value) return false;
    return true;
}

/// Checks the Farkas identity exactly: multipliers are nonnegative, combine
/// the rows to the zero functional and the bounds to a negative number.
inline bool verify_farkas(const LinearProgram& lp, const Vec& cert) {
    const std::size_t m_i = lp.constraints.size(), m_e = lp.equalities.size();
    if (cert.dim() != m_i + 2 * m_e) return false;
    for (const auto& c : cert)
        if (c.is_negative()) return false;
    Vec combo(lp.dim);
    Rat bound;
    for (std::size_t i = 0; i < m_i; ++i) {
        combo += cert[i] * lp.constraints[i].first;
        bound += cert[i] * lp.constraints[i].second;
    }
    for (std::size_t k = 0; k < m_e; ++k) {
        const Rat w = cert[m_i + k] - cert[m_i + m_e + k];
        combo += w * lp.equalities[k].first;
        bound += w * lp.equalities[k].second;
    }
    return combo.is_zero() && bound.is_negative();
}

/// Checks that ray is a recession direction strictly improving the objective.
inline bool verify_ray(const LinearProgram& lp, const Vec& ray) {
    if (ray.dim() != lp.dim) return false;
    for (const auto& [row, bound] : lp.constraints) {
        (void)bound;
        if (dot(row, ray).is_positive()) return false;
    }
    for (const auto& [row, value] : lp.equalities) {
        (void)value;
        if (!dot(row, ray).is_zero()) return false;
    }
    if (lp.sense == LinearProgram::Sense::maximize) return dot(lp.objective, ray).is_positive();
    if (lp.sense == LinearProgram::Sense::minimize) return dot(lp.objective, ray).is_negative();
    return false;
}

namespace detail {

/// Revised simplex on min cost·w s.t. columns·w = rhs, w >= 0.
/// Dantzig pricing with a permanent switch to Bland's rule after a fixed
/// iteration budget, so termination is guaranteed.
class RevisedSimplex {
public:
    enum class Status { optimal, infeasible, unbounded };

    struct Result {
        Status status;
        Vec solution;  // optimal: w
        Rat value;
        Vec duals;  // optimal: multipliers pi; infeasible: pi with pi·col <= 0 for all cols, pi·rhs > 0
        Vec ray;    // unbounded: direction in w-space
    };

    RevisedSimplex(std::vector<Vec> columns, Vec rhs, Vec cost)
        : cols_(std::move(columns)), rhs_(std::move(rhs)), cost_(std::move(cost)) {}

    Result run() {
        const std::size_t m = rhs_.dim();
        m_orig_ = m;
        n_orig_ = cols_.size();
        // normalize rhs >= 0, remembering row flips for dual recovery
        flip_.assign(m, false);
        for (std::size_t i = 0; i < m; ++i) {
            if (rhs_[i].is_negative()) {
                flip_[i] = true;
                rhs_[i] = -rhs_[i];
                for (auto& col : cols_) col[i] = -col[i];
            }
        }
        row_kept_.resize(m);
        for (std::size_t i = 0; i < m; ++i) row_kept_[i] = i;

        // phase I: artificial basis
        basis_.clear();
        for (std::size_t i = 0; i < m; ++i) basis_.push_back(n_orig_ + i);
        b_inv_ = Mat::identity(m);
        x_b_ = rhs_;
        Vec phase1_cost(n_orig_ + m);
        for (std::size_t i = 0; i < m; ++i) phase1_cost[n_orig_ + i] = 1;

        auto phase1 = iterate(phase1_cost, /*allow_artificials=*/true);
        if (phase1 == Status::unbounded) throw Error("simplex: phase I unbounded");
        Rat infeas;
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] >= n_orig_) infeas += x_b_[r];
        if (infeas.is_positive()) {
            Vec pi = duals_for(phase1_cost);
            return Result{Status::infeasible, {}, {}, unflip(pi), {}};
        }
        drive_out_artificials();

        // phase II
        Vec phase2_cost(n_orig_);
        for (std::size_t j = 0; j < n_orig_; ++j) phase2_cost[j] = cost_[j];
        auto phase2 = iterate(phase2_cost, /*allow_artificials=*/false);
        if (phase2 == Status::unbounded) return Result{Status::unbounded, {}, {}, {}, std::move(ray_)};

        Vec w(n_orig_);
        for (std::size_t r = 0; r < basis_.size(); ++r) w[basis_[r]] = x_b_[r];
        Rat value = dot(cost_, w);
        Vec pi = duals_for(phase2_cost);
        return Result{Status::optimal, std::move(w), std::move(value), unflip(pi), {}};
    }

private:
    // one simplex phase; returns optimal or unbounded (ray_ set)
    Status iterate(const Vec& cost, bool allow_artificials) {
        const std::size_t m = x_b_.dim();
        const std::size_t ncols = allow_artificials ? n_orig_ + m : n_orig_;
        std::vector<char> in_basis(n_orig_ + m, 0);
        for (auto b : basis_) in_basis[b] = 1;
        const long dantzig_budget = 4 * static_cast<long>(m + ncols) + 64;
        const long hard_cap = 4000000;

        for (long iter = 0;; ++iter) {
            if (iter > hard_cap) throw Error("simplex: iteration cap exceeded");
            const bool bland = iter >= dantzig_budget;
            Vec pi = duals_for(cost);
            std::size_t enter = ncols;
            Rat best;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (in_basis[j]) continue;
                Rat red = cost[j] - dot(pi, column(j));
                if (!red.is_negative()) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter == ncols || red < best) {
                    best = red;
                    enter = j;
                }
            }
            if (enter == ncols) return Status::optimal;

            Vec d = b_inv_.apply(column(enter));
            std::size_t leave = m;
            Rat theta;
            for (std::size_t r = 0; r < m; ++r) {
                if (!d[r].is_positive()) continue;
                Rat t = x_b_[r] / d[r];
                if (leave == m || t < theta || (t == theta && basis_[r] < basis_[leave])) {
                    theta = t;
                    leave = r;
                }
            }
            if (leave == m) {
                // ray: entering variable grows, basic variables move along -d
                ray_ = Vec(n_orig_);
                if (enter < n_orig_) ray_[enter] = 1;
                for (std::size_t r = 0; r < m; ++r)
                    if (basis_[r] < n_orig_) ray_[basis_[r]] = -d[r];
                return Status::unbounded;
            }
            in_basis[basis_[leave]] = 0;
            in_basis[enter] = 1;
            pivot(leave, enter, d);
        }
    }

    void pivot(std::size_t leave, std::size_t enter, const Vec& d) {
        const std::size_t m = x_b_.dim();
        const Rat piv = d[leave];
        const Rat theta = x_b_[leave] / piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave) continue;
            if (!d[r].is_zero()) x_b_[r] -= theta * d[r];
        }
        x_b_[leave] = theta;
        for (std::size_t j = 0; j < m; ++j) b_inv_(leave, j) /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || d[r].is_zero()) continue;
            const Rat f = d[r];
            for (std::size_t j = 0; j < m; ++j) b_inv_(r, j) -= f * b_inv_(leave, j);
        }
        basis_[leave] = enter;
    }

    Vec column(std::size_t j) const {
        if (j < n_orig_) return cols_[j];
        Vec e(x_b_.dim());
        e[j - n_orig_] = 1;  // artificial column in the current (possibly reduced) row space
        return e;
    }

    Vec duals_for(const Vec& cost) const {
        const std::size_t m = x_b_.dim();
        Vec pi(m);
        for (std::size_t j = 0; j < m; ++j) {
            Rat acc;
            for (std::size_t r = 0; r < m; ++r) {
                // artificials only exist in phase I, where their cost is 1
                const Rat c = basis_[r] < n_orig_ ? cost[basis_[r]] : Rat(1);
                if (!c.is_zero()) acc += c * b_inv_(r, j);
            }
            pi[j] = acc;
        }
        return pi;
    }

    // After a zero-value phase I optimum, pivot artificials out of the basis;
    // rows whose artificial cannot leave are redundant and get dropped.
    void drive_out_artificials() {
        const std::size_t m = x_b_.dim();
        std::vector<std::size_t> redundant;
        for (std::size_t r = 0; r < m; ++r) {
            if (basis_[r] < n_orig_) continue;
            Vec u = b_inv_.row(r);
            std::vector<char> in_basis(n_orig_, 0);
            for (auto b : basis_)
                if (b < n_orig_) in_basis[b] = 1;
            std::size_t enter = n_orig_;
            for (std::size_t j = 0; j < n_orig_; ++j) {
                if (in_basis[j]) continue;
                if (!dot(u, cols_[j]).is_zero()) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_orig_) {
                redundant.push_back(r);
                continue;
            }
            Vec d = b_inv_.apply(cols_[enter]);
            pivot(r, enter, d);
        }
        if (redundant.empty()) return;

        std::vector<char> drop(m, 0);
        for (auto r : redundant) drop[r] = 1;
        std::vector<std::size_t> kept_rows;
        std::vector<std::size_t> kept_basis;
        for (std::size_t r = 0; r < m; ++r) {
            if (drop[r]) continue;
            kept_rows.push_back(r);
            kept_basis.push_back(basis_[r]);
        }
        const std::size_t mk = kept_rows.size();
        std::vector<std::size_t> new_row_kept(mk);
        std::vector<char> new_flip(mk);
        for (std::size_t i = 0; i < mk; ++i) {
            new_row_kept[i] = row_kept_[kept_rows[i]];
            new_flip[i] = flip_[kept_rows[i]];
        }
        Vec new_rhs(mk);
        for (std::size_t i = 0; i < mk; ++i) new_rhs[i] = rhs_[kept_rows[i]];
        std::vector<Vec> new_cols(n_orig_);
        for (std::size_t j = 0; j < n_orig_; ++j) {
            Vec c(mk);
            for (std::size_t i = 0; i < mk; ++i) c[i] = cols_[j][kept_rows[i]];
            new_cols[j] = std::move(c);
        }
        Mat basis_mat(mk, mk);
        for (std::size_t jc = 0; jc < mk; ++jc)
            for (std::size_t i = 0; i < mk; ++i) basis_mat(i, jc) = new_cols[kept_basis[jc]][i];
        auto inv = inverse(basis_mat);
        if (!inv) throw Error("simplex: basis singular after dropping redundant rows");

        cols_ = std::move(new_cols);
        rhs_ = std::move(new_rhs);
        flip_.assign(new_flip.begin(), new_flip.end());
        row_kept_ = std::move(new_row_kept);
        basis_ = std::move(kept_basis);
        b_inv_ = std::move(*inv);
        x_b_ = b_inv_.apply(rhs_);
        for (const auto& v : x_b_.coords())
            if (v.is_negative()) throw Error("simplex: negative basic value after row reduction");
    }

    // maps duals on the working rows back to the original row indexing;
    // rows dropped as redundant get multiplier zero
    Vec unflip(const Vec& pi) const {
        Vec out(m_orig_);
        for (std::size_t i = 0; i < pi.dim(); ++i) out[row_kept_[i]] = flip_[i] ? -pi[i] : pi[i];
        return out;
    }

    std::vector<Vec> cols_;
    Vec rhs_;
    Vec cost_;
    std::size_t n_orig_ = 0;
    std::size_t m_orig_ = 0;
    std::vector<std::size_t> basis_;
    Mat b_inv_;
    Vec x_b_;
    Vec ray_;
    std::vector<char> flip_;
    std::vector<std::size_t> row_kept_;
};

}  // namespace detail

/// Exact LP solve. The primal is attacked through its dual, whose equality
/// system has one row per primal variable, so the working basis stays as
/// small as the primal dimension. Every outcome is re-verified exactly
/// before being returned.
inline LPOutcome solve(const LinearProgram& lp) {
    if (lp.dim == 0) throw InputError("solve: zero-dimensional program");
    if (lp.objective.dim() != 0 && lp.objective.dim() != lp.dim)
        throw InputError("solve: objective dimension mismatch");
    for (const auto& [row, b] : lp.constraints) {
        (void)b;
        if (row.dim() != lp.dim) throw InputError("solve: constraint dimension mismatch");
    }
    for (const auto& [row, v] : lp.equalities) {
        (void)v;
        if (row.dim() != lp.dim) throw InputError("solve: equality dimension mismatch");
    }

    const bool minimize = lp.sense == LinearProgram::Sense::minimize;
    Vec c(lp.dim);
    if (lp.sense != LinearProgram::Sense::feasibility)
        for (std::size_t i = 0; i < lp.dim; ++i) c[i] = minimize ? -lp.objective[i] : lp.objective[i];

    const std::size_t m_i = lp.constraints.size(), m_e = lp.equalities.size();
    // dual of max c·x over the constraints: min g·y + h·(w+ - w-),
    // G^T y + H^T (w+ - w-) = c, y >= 0
    std::vector<Vec> cols;
    Vec cost(m_i + 2 * m_e);
    cols.reserve(m_i + 2 * m_e);
    for (std::size_t i = 0; i < m_i; ++i) {
        cols.push_back(lp.constraints[i].first);
        cost[i] = lp.constraints[i].second;
    }
    for (std::size_t k = 0; k < m_e; ++k) {
        cols.push_back(lp.equalities[k].first);
        cost[m_i + k] = lp.equalities[k].second;
    }
    for (std::size_t k = 0; k < m_e; ++k) {
        cols.push_back(-lp.equalities[k].first);
        cost[m_i + m_e + k] = -lp.equalities[k].second;
    }

    auto res = detail::RevisedSimplex(std::move(cols), c, std::move(cost)).run();

    using Status = detail::RevisedSimplex::Status;
    if (res.status == Status::optimal) {
        // dual optimum: the multipliers on its equality rows are a primal optimum
        Vec point = std::move(res.duals);
        if (!satisfies(lp, point)) throw Error("solve: optimal point failed exact feasibility recheck");
        Rat value = lp.sense == LinearProgram::Sense::feasibility ? Rat(0) : dot(lp.objective, point);
        if (lp.sense != LinearProgram::Sense::feasibility) {
            Rat dual_value = minimize ? -res.value : res.value;
            if (value != dual_value) throw Error("solve: strong duality recheck failed");
        }
        return LPOutcome{LPOutcome::Status::optimal, std::move(point), std::move(value), std::nullopt};
    }

    if (res.status == Status::unbounded) {
        // dual unbounded ray = primal Farkas certificate
        if (!verify_farkas(lp, res.ray)) throw Error("solve: Farkas certificate failed exact recheck");
        return LPOutcome{LPOutcome::Status::infeasible, std::nullopt, std::nullopt, std::move(res.ray)};
    }

    // dual infeasible: its phase-I multipliers are a primal recession
    // direction with c·d > 0; primal is unbounded if feasible at all
    Vec ray = std::move(res.duals);
    if (lp.sense == LinearProgram::Sense::feasibility)
        throw Error("solve: feasibility dual cannot be infeasible");
    LinearProgram feas = lp;
    feas.sense = LinearProgram::Sense::feasibility;
    feas.objective = Vec();
    auto base = solve(feas);
    if (base.status == LPOutcome::Status::infeasible) return base;
    if (!verify_ray(lp, ray)) throw Error("solve: unbounded ray failed exact recheck");
    return LPOutcome{LPOutcome::Status::unbounded, std::move(ray), std::nullopt, std::nullopt};
}

}  // namespace asymspace
