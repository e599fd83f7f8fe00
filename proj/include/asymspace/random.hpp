#pragma once

#include <cstdint>

#include "asymspace/vec.hpp"

namespace asymspace {

/// Deterministic splitmix64 generator. Used wherever the library or the test
/// suites need reproducible random rationals; results depend only on the seed.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
    Rat next_rat(long long max_num = 12, long long max_den = 4) {
        return Rat(BigInt(next_int(-max_num, max_num)), BigInt(next_int(1, max_den)));
    }

    /// Nonnegative rational, numerator in [0, max_num].
    Rat next_nonneg_rat(long long max_num = 12, long long max_den = 4) {
        return Rat(BigInt(next_int(0, max_num)), BigInt(next_int(1, max_den)));
    }

    /// Strictly positive rational, numerator in [1, max_num].
    Rat next_positive_rat(long long max_num = 12, long long max_den = 4) {
        return Rat(BigInt(next_int(1, max_num)), BigInt(next_int(1, max_den)));
    }

    Vec next_vec(std::size_t dim, long long max_num = 12, long long max_den = 4) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = next_rat(max_num, max_den);
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace asymspace
