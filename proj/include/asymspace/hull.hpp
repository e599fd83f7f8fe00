#pragma once

#include <optional>
#include <vector>

#include "asymspace/lp.hpp"

namespace asymspace {

/// Answer of hull_membership. Exactly one of multipliers / separator is set:
/// convex multipliers reproducing the point, or a functional with
/// c·point > max_i c·generator_i.
struct HullMembership {
    bool inside = false;
    std::optional<Vec> multipliers;
    std::optional<Vec> separator;
};

/// Decides whether point lies in the convex hull of the generators.
inline HullMembership hull_membership(const Vec& point, const std::vector<Vec>& generators) {
    if (generators.empty()) throw InputError("hull_membership: empty generator list");
    const std::size_t n = point.dim();
    for (const auto& g : generators)
        if (g.dim() != n) throw InputError("hull_membership: generator dimension mismatch");
    const std::size_t k = generators.size();

    // lambda >= 0, sum lambda = 1, sum lambda * generator = point
    LinearProgram lp = LinearProgram::feasibility_of(k);
    for (std::size_t j = 0; j < k; ++j) lp.add_le(-Vec::unit(k, j), Rat(0));
    {
        Vec ones(k);
        for (std::size_t j = 0; j < k; ++j) ones[j] = 1;
        lp.add_eq(std::move(ones), Rat(1));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = generators[j][i];
        lp.add_eq(std::move(row), point[i]);
    }

    auto out = solve(lp);
    if (out.status == LPOutcome::Status::optimal) {
        Vec combo(n);
        Rat total;
        for (std::size_t j = 0; j < k; ++j) {
            combo += (*out.point)[j] * generators[j];
            total += (*out.point)[j];
        }
        if (combo != point || total != Rat(1)) throw Error("hull_membership: multiplier recheck failed");
        return HullMembership{true, std::move(out.point), std::nullopt};
    }

    // separating functional: max c·point - t  s.t.  c·g_i <= t, -1 <= c_j <= 1
    LinearProgram sep = LinearProgram::maximize([&] {
        Vec obj(n + 1);
        for (std::size_t i = 0; i < n; ++i) obj[i] = point[i];
        obj[n] = -1;
        return obj;
    }());
    for (const auto& g : generators) {
        Vec row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = g[i];
        row[n] = -1;
        sep.add_le(std::move(row), Rat(0));
    }
    for (std::size_t i = 0; i < n; ++i) {
        sep.add_le(Vec::unit(n + 1, i), Rat(1));
        sep.add_le(-Vec::unit(n + 1, i), Rat(1));
    }
    auto sep_out = solve(sep);
    if (sep_out.status != LPOutcome::Status::optimal || !sep_out.value->is_positive())
        throw Error("hull_membership: separation program disagreed with feasibility program");
    Vec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (*sep_out.point)[i];
    for (const auto& g : generators)
        if (dot(c, g) >= dot(c, point)) throw Error("hull_membership: separator recheck failed");
    return HullMembership{false, std::nullopt, std::move(c)};
}

}  // namespace asymspace
