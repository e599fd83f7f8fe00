#pragma once

#include <functional>
#include <vector>

#include "asymspace/asymspace.hpp"

namespace asymspace::testing {

/// The fixed norm corpus used across the suites.
inline std::vector<PolyAsymNorm> corpus() {
    return {
        norms::u(),           norms::tilde_q(2), norms::tilde_q(3), norms::ell_infty(2),
        norms::ell_one(2),    norms::hexagon(),  norms::simplex_gauge(),
    };
}

/// Independent evaluation oracle: the maximum over generators computed with
/// a plain loop, kept separate from PolyAsymNorm::eval.
inline Rat eval_by_enumeration(const std::vector<Vec>& generators, const Vec& x) {
    Rat best = dot(generators[0], x);
    for (std::size_t i = 1; i < generators.size(); ++i) {
        Rat v = dot(generators[i], x);
        if (v > best) best = v;
    }
    return best;
}

/// Brute-force LP oracle: enumerate all dim-subsets of the inequality
/// constraints, solve each square system exactly, keep feasible vertices,
/// return the best objective value. Only for bounded feasible programs
/// without equalities.
inline std::optional<Rat> vertex_enumeration_optimum(const LinearProgram& lp) {
    const std::size_t n = lp.dim, m = lp.constraints.size();
    std::optional<Rat> best;
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == n) {
            Mat a(n, n);
            Vec b(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) a(r, c) = lp.constraints[idx[r]].first[c];
                b[r] = lp.constraints[idx[r]].second;
            }
            if (rank(a) != n) return;
            auto x = solve_linear(a, b);
            if (!x || !satisfies(lp, *x)) return;
            Rat v = dot(lp.objective, *x);
            if (!best || v > *best) best = v;
            return;
        }
        for (std::size_t i = start; i <= m - (n - k); ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    if (m >= n) rec(0, 0);
    return best;
}

/// Random polyhedral norm with a bounded unit ball: a symmetric spanning
/// generator pair set plus a few asymmetric extras.
inline PolyAsymNorm random_bounded_norm(RatSampler& rng, std::size_t dim, std::size_t extra_asymmetric = 2) {
    std::vector<Vec> sym;
    while (true) {
        sym.clear();
        for (std::size_t i = 0; i < dim; ++i) sym.push_back(rng.next_vec(dim, 4, 2));
        if (rank_of_rows(sym) == dim) break;
    }
    std::vector<Vec> gens;
    for (const auto& v : sym) {
        gens.push_back(v);
        gens.push_back(-v);
    }
    for (std::size_t i = 0; i < extra_asymmetric; ++i) gens.push_back(rng.next_vec(dim, 3, 2));
    return PolyAsymNorm(dim, std::move(gens));
}

/// Random subspace of the given dimension with rational basis.
inline Subspace random_subspace(RatSampler& rng, std::size_t ambient, std::size_t dim) {
    while (true) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(rng.next_vec(ambient, 4, 2));
        if (rank_of_rows(basis) == dim) return Subspace(ambient, std::move(basis));
    }
}

/// Exact isometric transport of q̃ by a random integer shear product J with
/// determinant ±1: q'(y) = q̃(J⁻¹ y). Such norms are exactly the finite
/// asymmetric ℓ∞(I) up to isometric isomorphism, so they keep the mixed
/// binary intersection property.
inline PolyAsymNorm random_tilde_q_transport(RatSampler& rng, std::size_t dim, Mat* j_out = nullptr) {
    Mat j = Mat::identity(dim);
    const std::size_t shears = 1 + rng.next_u64() % 3;
    for (std::size_t s = 0; s < shears && dim > 1; ++s) {
        std::size_t r = rng.next_u64() % dim;
        std::size_t c = rng.next_u64() % dim;
        if (r == c) continue;
        Rat f(rng.next_int(-2, 2));
        for (std::size_t k = 0; k < dim; ++k) j(r, k) += f * j(c, k);
    }
    Mat j_inv_t = inverse(j)->transposed();
    auto tq = norms::tilde_q(dim);
    std::vector<Vec> gens;
    for (const auto& g : tq.generators()) gens.push_back(j_inv_t.apply(g));
    if (j_out) *j_out = j;
    return PolyAsymNorm(dim, std::move(gens));
}

/// Random mixed family whose radii are scaled exactly so that the pairwise
/// premise holds (tightly when scaling was needed).
inline MixedBallFamily random_pairwise_passing_family(RatSampler& rng, const PolyAsymNorm& q, std::size_t balls) {
    std::vector<MixedBallFamily::Entry> entries;
    for (std::size_t i = 0; i < balls; ++i)
        entries.push_back({rng.next_vec(q.dim(), 6, 2), rng.next_positive_rat(5, 2), rng.next_positive_rat(5, 2)});
    Rat scale(1);
    for (const auto& ei : entries)
        for (const auto& ej : entries) {
            Rat need = q(ej.center - ei.center) / (ei.forward_radius + ej.backward_radius);
            if (need > scale) scale = need;
        }
    if (scale > Rat(1))
        for (auto& e : entries) {
            e.forward_radius *= scale;
            e.backward_radius *= scale;
        }
    return MixedBallFamily(q, std::move(entries));
}

}  // namespace asymspace::testing
