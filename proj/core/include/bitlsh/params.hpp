#pragma once

#include <cstdint>

namespace bitlsh {

/// All derived scheme parameters plus their inputs.
///
/// Derivation for derive_params(n, d, r, eps, delta_fail):
///   c      = 1/(1+eps)
///   p      = 1 - e^(-1/r)
///   t      = max(1, ceil(c * ln n))
///   q_near = (1-p)^(r*t)   (per-table collision probability at distance r)
///   L      = ceil(ln(1/delta_fail) / q_near)
///
/// t is rounded up from the real-valued c*ln n; rounding up lowers both the
/// near and far collision probabilities, and L is computed from the exact
/// q_near so that (1-q_near)^L <= delta_fail keeps holding.
struct IndexParams {
    uint64_t n = 0;          ///< point count
    uint32_t d = 0;          ///< ambient dimension
    uint32_t r = 0;          ///< near radius, 1 <= r <= d
    double eps = 0.0;        ///< approximation slack, > 0
    double c = 0.0;          ///< exponent 1/(1+eps)
    double p = 0.0;          ///< per-coordinate inclusion probability
    uint64_t t = 0;          ///< repetitions per sequence
    uint64_t L = 0;          ///< number of tables
    double q_near = 0.0;     ///< (1-p)^(r*t)
    double delta_fail = 0.0; ///< target failure probability

    bool operator==(const IndexParams&) const = default;

    /// Throws ParamError when any field is outside its invariant.
    void validate() const;
};

IndexParams derive_params(uint64_t n, uint32_t d, uint32_t r, double eps,
                          double delta_fail);

}  // namespace bitlsh
