#include "bitlsh/fingerprint.hpp"

#include <bit>
#include <cassert>

namespace bitlsh {

namespace {

constexpr uint64_t kC1 = 0x87c37b91114253d5ULL;
constexpr uint64_t kC2 = 0x4cf5ad432745937fULL;

uint64_t fmix64(uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

struct Murmur128 {
    uint64_t h1;
    uint64_t h2;
    uint64_t len = 0;

    explicit Murmur128(uint64_t salt) : h1(salt), h2(salt) {}

    void block(uint64_t k1, uint64_t k2) {
        k1 *= kC1;
        k1 = std::rotl(k1, 31);
        k1 *= kC2;
        h1 ^= k1;
        h1 = std::rotl(h1, 27);
        h1 += h2;
        h1 = h1 * 5 + 0x52dce729;
        k2 *= kC2;
        k2 = std::rotl(k2, 33);
        k2 *= kC1;
        h2 ^= k2;
        h2 = std::rotl(h2, 31);
        h2 += h1;
        h2 = h2 * 5 + 0x38495ab5;
        len += 16;
    }

    // 8-byte tail; inputs here are always whole words.
    void tail(uint64_t k1) {
        k1 *= kC1;
        k1 = std::rotl(k1, 31);
        k1 *= kC2;
        h1 ^= k1;
        len += 8;
    }

    Fingerprint finish() {
        h1 ^= len;
        h2 ^= len;
        h1 += h2;
        h2 += h1;
        h1 = fmix64(h1);
        h2 = fmix64(h2);
        h1 += h2;
        h2 += h1;
        return Fingerprint{h1, h2};
    }
};

}  // namespace

Fingerprint fingerprint_words(std::span<const uint64_t> words, uint64_t salt) {
    Murmur128 h(salt);
    size_t k = 0;
    for (; k + 2 <= words.size(); k += 2) {
        h.block(words[k], words[k + 1]);
    }
    if (k < words.size()) {
        h.tail(words[k]);
    }
    return h.finish();
}

Fingerprint fingerprint_masked(std::span<const uint64_t> v,
                               std::span<const uint64_t> mask,
                               uint64_t salt) {
    assert(v.size() == mask.size());
    Murmur128 h(salt);
    size_t k = 0;
    for (; k + 2 <= v.size(); k += 2) {
        h.block(v[k] & mask[k], v[k + 1] & mask[k + 1]);
    }
    if (k < v.size()) {
        h.tail(v[k] & mask[k]);
    }
    return h.finish();
}

}  // namespace bitlsh
