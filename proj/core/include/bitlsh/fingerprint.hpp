#pragma once

#include <cstdint>
#include <span>

namespace bitlsh {

/// 128-bit bucket key. Ordering is lexicographic on (lo, hi); any fixed total
/// order works, this one is the canonical order used in snapshots.
struct Fingerprint {
    uint64_t lo = 0;
    uint64_t hi = 0;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// Salt of the bucket-key hash. Fixed: it is part of snapshot format v1.
inline constexpr uint64_t kFingerprintSalt = 0x51ab5f1c90e3a2d7ULL;

/// MurmurHash3 x64 128 over a whole-word byte stream.
Fingerprint fingerprint_words(std::span<const uint64_t> words, uint64_t salt);

/// Fingerprint of the word-wise AND of v and mask, without materializing it.
/// For a fixed mask, two vectors get equal fingerprints whenever they agree
/// on every masked coordinate; unequal masked bits collide only with hash
/// probability ~2^-128.
Fingerprint fingerprint_masked(std::span<const uint64_t> v,
                               std::span<const uint64_t> mask,
                               uint64_t salt);

}  // namespace bitlsh
