#pragma once

#include <cstdint>
#include <vector>

#include "bitlsh/bit_vector.hpp"

namespace bitlsh {

class RandomStream;

/// An ordered sequence of coordinate indices to sample from a point.
/// Indices are 0-based in memory (snapshots store them 1-based). `deduped`
/// is true exactly when the indices are strictly increasing, i.e. the
/// sequence is a coordinate set in canonical order.
struct ProjectionSeq {
    uint32_t dim = 0;
    std::vector<uint32_t> indices;
    bool deduped = false;

    /// Mask of the distinct coordinates this sequence probes. Two points
    /// collide under the sequence iff they agree on this mask.
    BitVector coordinate_mask() const;

    bool operator==(const ProjectionSeq&) const = default;
};

/// One draw: each coordinate of [0, d) is included independently with
/// probability p, in increasing order. A single draw never repeats an index.
ProjectionSeq sample_dp(uint32_t d, double p, RandomStream& rng);

/// Concatenation of t independent draws. Expected length d*p*t; repeats are
/// possible, so the result is generally not deduplicated.
ProjectionSeq sample_dp_t(uint32_t d, double p, uint32_t t, RandomStream& rng);

/// The set of distinct indices of s, sorted increasing. Collision-equivalent
/// to s: two points agree under uniq(s) iff they agree under s.
ProjectionSeq uniq(const ProjectionSeq& s);

/// Per-coordinate inclusion probability of uniq(sample_dp_t(d, p, t, .)),
/// namely 1 - (1-p)^t. Accepts real-valued t.
double uniq_inclusion_prob(double p, double t);

/// Samples uniq(sample_dp_t(d, p, t, .)) directly in O(d): each coordinate
/// is included independently with probability uniq_inclusion_prob(p, t).
ProjectionSeq sample_uniq_direct(uint32_t d, double p, uint32_t t, RandomStream& rng);

/// The projected point: bits of v at s.indices, in order (repeats included).
std::vector<uint8_t> apply(const ProjectionSeq& s, const BitVector& v);

}  // namespace bitlsh
