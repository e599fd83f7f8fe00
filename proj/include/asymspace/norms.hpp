#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "asymspace/hull.hpp"
#include "asymspace/linalg.hpp"
#include "asymspace/lp.hpp"

namespace asymspace {

/// Asymmetric norm given as the pointwise maximum of finitely many linear
/// functionals: p(x) = max_i a_i·x.
///
/// Construction enforces the two facts that make this a genuine asymmetric
/// norm: the zero functional lies in the convex hull of the generators
/// (so p >= 0 everywhere), and the generators span the dual space (so
/// p(x) = p(-x) = 0 only at x = 0). Positive homogeneity and subadditivity
/// are automatic for a maximum of linear maps.
class PolyAsymNorm {
public:
    PolyAsymNorm(std::size_t dim, std::vector<Vec> generators, std::string name = "")
        : dim_(dim), generators_(std::move(generators)), name_(std::move(name)) {
        if (dim_ == 0) throw InputError("PolyAsymNorm: dimension must be positive");
        if (generators_.empty()) throw InputError("PolyAsymNorm: empty generator list");
        for (const auto& g : generators_)
            if (g.dim() != dim_) throw InputError("PolyAsymNorm: generator dimension mismatch");
        if (!hull_membership(Vec::zero(dim_), generators_).inside)
            throw InputError("PolyAsymNorm: zero functional outside the generator hull; norm can be negative");
        if (rank_of_rows(generators_) != dim_)
            throw InputError("PolyAsymNorm: generators do not span the dual space; definiteness fails");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return generators_; }
    const std::string& name() const { return name_; }

    Rat operator()(const Vec& x) const { return eval(x); }

    Rat eval(const Vec& x) const {
        if (x.dim() != dim_) throw InputError("PolyAsymNorm: evaluation dimension mismatch");
        Rat best = dot(generators_[0], x);
        for (std::size_t i = 1; i < generators_.size(); ++i) best = max(best, dot(generators_[i], x));
        return best;
    }

    /// p̄(x) = p(-x): every generator negated.
    PolyAsymNorm conjugate() const {
        std::vector<Vec> gens;
        gens.reserve(generators_.size());
        for (const auto& g : generators_) gens.push_back(-g);
        return PolyAsymNorm(dim_, std::move(gens), name_.empty() ? "" : "conj(" + name_ + ")");
    }

    /// p^s = max(p, p̄): union of the generators and their negations.
    PolyAsymNorm symmetrize() const {
        std::vector<Vec> gens = generators_;
        for (const auto& g : generators_) {
            Vec neg = -g;
            if (std::find(gens.begin(), gens.end(), neg) == gens.end()) gens.push_back(std::move(neg));
        }
        return PolyAsymNorm(dim_, std::move(gens), name_.empty() ? "" : "sym(" + name_ + ")");
    }

    /// Rows of the unit ball {x : p(x) <= 1} as constraints a_i·x <= 1.
    std::vector<std::pair<Vec, Rat>> unit_ball_constraints() const {
        std::vector<std::pair<Vec, Rat>> rows;
        rows.reserve(generators_.size());
        for (const auto& g : generators_) rows.emplace_back(g, Rat(1));
        return rows;
    }

    /// T1 separation: p(x) > 0 for every x != 0, i.e. the cone
    /// {x : a_i·x <= 0 for all i} is trivial. Decided by 2·dim exact LPs.
    bool is_t1() const {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (int dir : {1, -1}) {
                Vec obj = Vec::unit(dim_, j);
                if (dir < 0) obj = -obj;
                auto lp = LinearProgram::maximize(std::move(obj));
                for (const auto& g : generators_) lp.add_le(g, Rat(0));
                auto out = solve(lp);
                if (out.status != LPOutcome::Status::optimal || !out.value->is_zero()) return false;
            }
        }
        return true;
    }

    /// Whether this norm is exactly the asymmetric sup norm q̃ on R^k:
    /// generator set = all coordinate functionals plus the zero functional.
    bool is_tilde_q_form() const {
        std::vector<Vec> expected;
        expected.push_back(Vec::zero(dim_));
        for (std::size_t i = 0; i < dim_; ++i) expected.push_back(Vec::unit(dim_, i));
        if (generators_.size() != expected.size()) return false;
        std::vector<Vec> sorted = generators_;
        auto less = [](const Vec& a, const Vec& b) {
            for (std::size_t i = 0; i < a.dim(); ++i) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
            }
            return false;
        };
        std::sort(sorted.begin(), sorted.end(), less);
        std::sort(expected.begin(), expected.end(), less);
        return sorted == expected;
    }

    /// Whether this is q̃ on R^1, i.e. the norm u(t) = max(t, 0).
    bool is_u_form() const { return dim_ == 1 && is_tilde_q_form(); }

private:
    std::size_t dim_;
    std::vector<Vec> generators_;
    std::string name_;
};

namespace norms {

/// u(t) = t ∨ 0 on R.
inline PolyAsymNorm u() { return PolyAsymNorm(1, {Vec{Rat(1)}, Vec{Rat(0)}}, "u"); }

/// q̃(x) = max_i x_i⁺ on R^k (coordinate functionals plus the zero functional).
inline PolyAsymNorm tilde_q(std::size_t k) {
    std::vector<Vec> gens;
    gens.push_back(Vec::zero(k));
    for (std::size_t i = 0; i < k; ++i) gens.push_back(Vec::unit(k, i));
    return PolyAsymNorm(k, std::move(gens), "tilde_q" + std::to_string(k));
}

/// The sup norm max_i |x_i| on R^k.
inline PolyAsymNorm ell_infty(std::size_t k) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) {
        gens.push_back(Vec::unit(k, i));
        gens.push_back(-Vec::unit(k, i));
    }
    return PolyAsymNorm(k, std::move(gens), "ell_infty" + std::to_string(k));
}

/// The sum norm on R^k: max over all sign patterns s of s·x.
inline PolyAsymNorm ell_one(std::size_t k) {
    std::vector<Vec> gens;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Vec g(k);
        for (std::size_t i = 0; i < k; ++i) g[i] = (mask >> i) & 1 ? Rat(1) : Rat(-1);
        gens.push_back(std::move(g));
    }
    return PolyAsymNorm(k, std::move(gens), "ell_one" + std::to_string(k));
}

/// Hexagonal gauge H(x, y) = max(|x|, |y|, |x + y|) on R^2.
inline PolyAsymNorm hexagon() {
    return PolyAsymNorm(2,
                        {Vec{Rat(1), Rat(0)}, Vec{Rat(-1), Rat(0)}, Vec{Rat(0), Rat(1)}, Vec{Rat(0), Rat(-1)},
                         Vec{Rat(1), Rat(1)}, Vec{Rat(-1), Rat(-1)}},
                        "hexagon");
}

/// Asymmetric simplex gauge on R^2: max(x_1, x_2, -x_1 - x_2).
/// Its unit ball is a triangle, so conjugation genuinely changes it.
inline PolyAsymNorm simplex_gauge() {
    return PolyAsymNorm(2, {Vec{Rat(1), Rat(0)}, Vec{Rat(0), Rat(1)}, Vec{Rat(-1), Rat(-1)}}, "simplex_gauge");
}

}  // namespace norms

}  // namespace asymspace
