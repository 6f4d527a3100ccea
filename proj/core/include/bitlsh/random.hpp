#pragma once

#include <array>
#include <cstdint>

namespace bitlsh {

/// Seedable, splittable stream of pseudo-random numbers (xoshiro256++ state,
/// seeded through splitmix64). Every stochastic operation in the library
/// takes a stream explicitly, so experiments replay bit-identically from a
/// seed on any platform.
///
/// A stream is single-threaded; to fan work out, derive one child stream per
/// unit of work with split() and let each worker own its child.
class RandomStream {
public:
    explicit RandomStream(uint64_t seed);

    /// Next 64 uniform random bits.
    uint64_t next_u64();

    /// Uniform double in [0, 1), 53 significant bits.
    double next_unit();

    /// True with probability p. p outside [0, 1] is clamped by comparison.
    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t next_below(uint64_t bound);

    /// Independent child stream. Children with distinct ids are independent
    /// of each other and of this stream's future output.
    RandomStream split(uint64_t stream_id) const;

    /// Seed this stream was created from.
    uint64_t seed() const noexcept { return seed_; }

private:
    uint64_t seed_ = 0;
    std::array<uint64_t, 4> state_{};
};

/// splitmix64 finalizer; also used to derive child seeds.
uint64_t mix64(uint64_t x);

}  // namespace bitlsh
