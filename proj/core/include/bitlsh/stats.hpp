#pragma once

#include <cstdint>
#include <string>

#include "bitlsh/params.hpp"

namespace bitlsh {

class RandomStream;

namespace stats {

/// One Monte Carlo estimate next to its closed-form prediction.
struct EstimateReport {
    std::string quantity;
    uint64_t trials = 0;
    double empirical = 0.0;
    double theoretical = 0.0;
    double std_error = 0.0;
    double z = 0.0;  ///< (empirical - theoretical) / std_error

    static std::string csv_header();
    std::string csv_row() const;
};

/// Fraction of sequences from the t-fold coordinate distribution that avoid
/// a fixed set K of `delta` coordinates. Theoretical value (1-p)^(delta*t).
///
/// t may be real-valued: the miss event depends only on K's coordinates,
/// each of which is sampled (at least once) independently with probability
/// 1-(1-p)^t, which is well defined for any t > 0.
EstimateReport estimate_miss_prob(uint32_t d, double p, double t, uint32_t delta,
                                  uint64_t trials, RandomStream& rng);

/// Mean multiplicity-counted candidate total over full (no early stop)
/// scans, on instances where all n points sit at exactly far_distance from
/// the query. Theoretical value L*n*(1-p)^(far_distance*t), which is <= L
/// whenever far_distance >= (1+eps)*r. Real-valued t is accepted; L is
/// derived from ceil(ln(1/delta_fail)/(1-p)^(r*t)).
EstimateReport estimate_far_candidates(uint64_t n, uint32_t d, uint32_t r,
                                       double eps, double delta_fail, double t,
                                       uint32_t far_distance, uint64_t trials,
                                       RandomStream& rng);

/// Same experiment at an existing parameter set (production integer t).
EstimateReport estimate_far_candidates(const IndexParams& params,
                                       uint32_t far_distance, uint64_t trials,
                                       RandomStream& rng);

/// Frequency of Found outcomes when one point is planted at plant_distance
/// from the query among n-1 far points, over freshly built indexes.
/// Theoretical lower bound 1-(1-q_near)^L. Runs the production build and
/// query paths; trials fan out across threads deterministically.
EstimateReport recall_experiment(uint64_t n, uint32_t d, uint32_t r, double eps,
                                 double delta_fail, uint32_t plant_distance,
                                 uint64_t trials, RandomStream& rng,
                                 unsigned threads = 0);

}  // namespace stats
}  // namespace bitlsh
