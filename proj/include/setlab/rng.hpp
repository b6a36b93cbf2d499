#pragma once

#include <cstdint>

namespace setlab {

/// Deterministic 64-bit generator (splitmix64 mixing recurrence).
///
/// Used instead of a platform generator so that identical seeds produce
/// bit-identical instances on every platform. All derived quantities are
/// integers; the library contains no floating-point arithmetic.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound); bound must be positive.
    /// Rejection sampling keeps the distribution exact.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Bernoulli trial with probability p_scaled / 1000.
    bool chance(int p_scaled) { return below(1000) < static_cast<std::uint64_t>(p_scaled); }

private:
    std::uint64_t state_;
};

} // namespace setlab
