#pragma once

#include <cstdint>
#include <span>

#include "bitlsh/bit_vector.hpp"

namespace bitlsh {
namespace oracle {

struct NearestResult {
    uint32_t id = 0;
    uint32_t distance = 0;
};

/// Brute-force nearest point by linear scan; ties break to the smallest id.
NearestResult nearest(std::span<const BitVector> points, const BitVector& q);

/// Number of points at Hamming distance <= radius. A negative radius counts
/// nothing.
uint64_t range_count(std::span<const BitVector> points, const BitVector& q,
                     int64_t radius);

}  // namespace oracle
}  // namespace bitlsh
