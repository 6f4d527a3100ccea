#include "bitlsh/oracle.hpp"

#include "bitlsh/error.hpp"

namespace bitlsh {
namespace oracle {

NearestResult nearest(std::span<const BitVector> points, const BitVector& q) {
    if (points.empty()) {
        throw ParamError("oracle::nearest: point set is empty");
    }
    NearestResult best{0, hamming(points[0], q)};
    for (size_t i = 1; i < points.size(); ++i) {
        const uint32_t dist = hamming(points[i], q);
        if (dist < best.distance) {
            best = {static_cast<uint32_t>(i), dist};
        }
    }
    return best;
}

uint64_t range_count(std::span<const BitVector> points, const BitVector& q,
                     int64_t radius) {
    if (points.empty()) {
        throw ParamError("oracle::range_count: point set is empty");
    }
    if (radius < 0) {
        return 0;
    }
    uint64_t count = 0;
    for (const BitVector& p : points) {
        if (hamming(p, q) <= static_cast<uint64_t>(radius)) {
            ++count;
        }
    }
    return count;
}

}  // namespace oracle
}  // namespace bitlsh
