#pragma once

#include <string>
#include <vector>

#include "asymspace/pair_tables.hpp"
#include "asymspace/random.hpp"

namespace asymspace {

/// The glued asymmetric norm on Y = Z ∔ Rξ built from a pair (rho1, rho2):
///   mu(z + t·ξ) = p(z)                 for t = 0,
///                 t · rho2(-z / t)     for t > 0,
///                 -t · rho1(-z / t)    for t < 0,
/// so that mu(z - ξ) = rho1(z) and mu(ξ - z) = rho2(z). Points of Y are
/// vectors of dimension n + 1 whose last coordinate is the ξ coefficient.
class MuNorm {
public:
    MuNorm(PolyAsymNorm base, PiecewiseGaugePair pair) : base_(std::move(base)), pair_(std::move(pair)) {
        if (base_.dim() != pair_.dim()) throw InputError("MuNorm: base norm and pair dimension mismatch");
    }

    std::size_t z_dim() const { return base_.dim(); }
    std::size_t dim() const { return base_.dim() + 1; }
    const PolyAsymNorm& base() const { return base_; }
    const PiecewiseGaugePair& pair() const { return pair_; }

    Rat eval_parts(const Vec& z, const Rat& t) const {
        if (z.dim() != base_.dim()) throw InputError("MuNorm: dimension mismatch");
        if (t.is_zero()) return base_(z);
        if (t.is_positive()) return t * pair_.rho2((Rat(-1) / t) * z);
        return (-t) * pair_.rho1((Rat(-1) / t) * z);
    }

    Rat operator()(const Vec& y) const {
        if (y.dim() != dim()) throw InputError("MuNorm: dimension mismatch");
        Vec z(base_.dim());
        for (std::size_t i = 0; i < base_.dim(); ++i) z[i] = y[i];
        return eval_parts(z, y[base_.dim()]);
    }

    /// ξ as a point of Y.
    Vec xi() const { return Vec::unit(dim(), base_.dim()); }

    /// Embeds z in Y as z + 0·ξ.
    Vec embed(const Vec& z) const {
        if (z.dim() != base_.dim()) throw InputError("MuNorm: dimension mismatch");
        Vec y(dim());
        for (std::size_t i = 0; i < base_.dim(); ++i) y[i] = z[i];
        return y;
    }

private:
    PolyAsymNorm base_;
    PiecewiseGaugePair pair_;
};

namespace detail {

inline std::vector<Vec> mu_verification_samples(const PolyAsymNorm& p, const PiecewiseGaugePair& pair,
                                                std::size_t random_count, std::uint64_t seed) {
    std::vector<Vec> samples;
    const std::size_t n = p.dim();
    samples.push_back(Vec::zero(n));
    for (std::size_t i = 0; i < n; ++i) {
        samples.push_back(Vec::unit(n, i));
        samples.push_back(-Vec::unit(n, i));
        samples.push_back(Rat(1, 2) * Vec::unit(n, i));
    }
    if (pair.rho1.is_hull_envelope())
        for (const auto& a : pair.rho1.anchors()) samples.push_back(a);
    RatSampler rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) samples.push_back(rng.next_vec(n, 8, 3));
    return samples;
}

}  // namespace detail

/// Builds the glued norm after verifying conditions (a)-(d) of the pair on a
/// deterministic sample set plus seeded random samples. Verification is
/// sampled, not global; a violation is reported with the offending sample.
inline MuNorm build_mu_norm(const PolyAsymNorm& p, const PiecewiseGaugePair& pair, std::size_t random_samples = 32,
                            std::uint64_t seed = 0x5eed) {
    if (p.dim() != pair.dim()) throw InputError("build_mu_norm: dimension mismatch");
    auto samples = detail::mu_verification_samples(p, pair, random_samples, seed);

    std::vector<Rat> v1, v2;
    v1.reserve(samples.size());
    v2.reserve(samples.size());
    for (const auto& z : samples) {
        v1.push_back(pair.rho1(z));
        v2.push_back(pair.rho2(z));
        if (v1.back().is_negative() || v2.back().is_negative())
            throw InvalidPairError("build_mu_norm: negative value at sample " + z.str());
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(v1[i] + v2[i]).is_positive())
            throw InvalidPairError("build_mu_norm: condition (d) fails at sample " + samples[i].str());
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const Vec diff = samples[i] - samples[j];
            if (v1[i] + v2[j] < p(diff))
                throw InvalidPairError("build_mu_norm: condition (a) fails at samples " + samples[i].str() + ", " +
                                       samples[j].str());
            if (v1[i] - v1[j] > p(diff))
                throw InvalidPairError("build_mu_norm: condition (b1) fails at samples " + samples[i].str() + ", " +
                                       samples[j].str());
            if (v2[i] - v2[j] > p(samples[j] - samples[i]))
                throw InvalidPairError("build_mu_norm: condition (b2) fails at samples " + samples[i].str() + ", " +
                                       samples[j].str());
        }
    }
    // midpoint convexity (c) on consecutive sample pairs
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const Vec mid = Rat(1, 2) * (samples[i] + samples[i + 1]);
        if (pair.rho1(mid) > Rat(1, 2) * (v1[i] + v1[i + 1]))
            throw InvalidPairError("build_mu_norm: convexity of rho1 fails between " + samples[i].str() + " and " +
                                   samples[i + 1].str());
        if (pair.rho2(mid) > Rat(1, 2) * (v2[i] + v2[i + 1]))
            throw InvalidPairError("build_mu_norm: convexity of rho2 fails between " + samples[i].str() + " and " +
                                   samples[i + 1].str());
    }

    MuNorm mu(p, pair);
    // the defining identities mu(z - xi) = rho1(z), mu(xi - z) = rho2(z)
    for (const auto& z : samples) {
        if (mu.eval_parts(z, Rat(-1)) != pair.rho1(z) || mu.eval_parts(-z, Rat(1)) != pair.rho2(z))
            throw Error("build_mu_norm: glued-norm identity recheck failed");
    }
    return mu;
}

}  // namespace asymspace
