#include "bitlsh/random.hpp"

#include <bit>

#include "bitlsh/error.hpp"

namespace bitlsh {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

uint64_t splitmix_next(uint64_t& s) {
    s += kGolden;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t mix64(uint64_t x) {
    uint64_t s = x;
    return splitmix_next(s);
}

RandomStream::RandomStream(uint64_t seed) : seed_(seed) {
    uint64_t s = seed;
    for (auto& w : state_) {
        w = splitmix_next(s);
    }
}

uint64_t RandomStream::next_u64() {
    // xoshiro256++ step.
    const uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t RandomStream::next_below(uint64_t bound) {
    if (bound == 0) {
        throw ParamError("next_below: bound must be positive");
    }
    // Rejection sampling on the top bits; unbiased for any bound.
    const uint64_t threshold = -bound % bound;
    for (;;) {
        const uint64_t x = next_u64();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

RandomStream RandomStream::split(uint64_t stream_id) const {
    return RandomStream(mix64(seed_ + kGolden * (stream_id + 1)));
}

}  // namespace bitlsh
