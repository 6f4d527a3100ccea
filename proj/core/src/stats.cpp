#include "bitlsh/stats.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <vector>

#include "bitlsh/dataset.hpp"
#include "bitlsh/error.hpp"
#include "bitlsh/index.hpp"
#include "bitlsh/random.hpp"
#include "parallel.hpp"

namespace bitlsh {
namespace stats {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double z_score(double empirical, double theoretical, double std_error) {
    if (std_error > 0.0) {
        return (empirical - theoretical) / std_error;
    }
    return empirical == theoretical ? 0.0
                                    : std::numeric_limits<double>::infinity();
}

EstimateReport proportion_report(std::string quantity, uint64_t trials,
                                 double empirical, double theoretical) {
    EstimateReport rep;
    rep.quantity = std::move(quantity);
    rep.trials = trials;
    rep.empirical = empirical;
    rep.theoretical = theoretical;
    rep.std_error =
        std::sqrt(theoretical * (1.0 - theoretical) / static_cast<double>(trials));
    rep.z = z_score(empirical, theoretical, rep.std_error);
    return rep;
}

void check_trials(uint64_t trials) {
    if (trials < 1) {
        throw ParamError("estimator: trials must be at least 1");
    }
}

}  // namespace

std::string EstimateReport::csv_header() {
    return "quantity,trials,empirical,theoretical,stderr,z";
}

std::string EstimateReport::csv_row() const {
    return quantity + "," + std::to_string(trials) + "," + fmt_double(empirical) +
           "," + fmt_double(theoretical) + "," + fmt_double(std_error) + "," +
           fmt_double(z);
}

EstimateReport estimate_miss_prob(uint32_t d, double p, double t, uint32_t delta,
                                  uint64_t trials, RandomStream& rng) {
    if (delta > d) {
        throw ParamError("estimate_miss_prob: delta exceeds dimension");
    }
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ParamError("estimate_miss_prob: p must lie in (0, 1)");
    }
    if (!(t > 0.0)) {
        throw ParamError("estimate_miss_prob: t must be positive");
    }
    check_trials(trials);

    const double p_inc = uniq_inclusion_prob(p, t);
    RandomStream draw(rng.next_u64());
    uint64_t misses = 0;
    for (uint64_t i = 0; i < trials; ++i) {
        bool miss = true;
        for (uint32_t j = 0; j < delta; ++j) {
            if (draw.bernoulli(p_inc)) {
                miss = false;
                break;
            }
        }
        misses += miss;
    }

    const double theoretical =
        delta == 0 ? 1.0
                   : std::exp(static_cast<double>(delta) * t * std::log1p(-p));
    return proportion_report("miss_prob", trials,
                             static_cast<double>(misses) /
                                 static_cast<double>(trials),
                             theoretical);
}

EstimateReport estimate_far_candidates(uint64_t n, uint32_t d, uint32_t r,
                                       double eps, double delta_fail, double t,
                                       uint32_t far_distance, uint64_t trials,
                                       RandomStream& rng) {
    if (n == 0 || d == 0 || r < 1 || r > d) {
        throw ParamError("estimate_far_candidates: bad n/d/r");
    }
    if (!(eps > 0.0) || !(delta_fail > 0.0) || !(delta_fail < 1.0) || !(t > 0.0)) {
        throw ParamError("estimate_far_candidates: bad eps/delta_fail/t");
    }
    if (far_distance > d) {
        throw ParamError("estimate_far_candidates: far_distance exceeds dimension");
    }
    const double near_edge = (1.0 + eps) * static_cast<double>(r);
    if (static_cast<double>(far_distance) < near_edge) {
        throw ParamError("estimate_far_candidates: far_distance must be at least "
                         "(1+eps)*r");
    }
    check_trials(trials);

    const double p = -std::expm1(-1.0 / static_cast<double>(r));
    const double p_inc = uniq_inclusion_prob(p, t);
    const double q_near_t =
        std::exp(static_cast<double>(r) * t * std::log1p(-p));
    const double tables = std::ceil(std::log(1.0 / delta_fail) / q_near_t);
    if (!(tables >= 1.0) || tables > 1e9) {
        throw ParamError("estimate_far_candidates: derived L out of range");
    }
    const uint64_t L = static_cast<uint64_t>(tables);

    RandomStream draw(rng.next_u64());
    std::vector<uint32_t> coords(d);
    std::vector<BitVector> diffs;
    std::vector<BitVector> seq_masks;
    std::vector<double> totals(trials);

    for (uint64_t trial = 0; trial < trials; ++trial) {
        const BitVector query = BitVector::random(d, draw);

        // All n points at exactly far_distance from the query.
        diffs.clear();
        for (uint64_t j = 0; j < n; ++j) {
            BitVector point = query;
            std::iota(coords.begin(), coords.end(), 0);
            for (uint32_t k = 0; k < far_distance; ++k) {
                const uint64_t pick = k + draw.next_below(d - k);
                std::swap(coords[k], coords[pick]);
                point.flip_bit(coords[k]);
            }
            BitVector diff = BitVector::zeros(d);
            for (uint32_t i = 0; i < d; ++i) {
                if (point.bit(i) != query.bit(i)) {
                    diff.set_bit(i, true);
                }
            }
            diffs.push_back(std::move(diff));
        }

        seq_masks.clear();
        for (uint64_t i = 0; i < L; ++i) {
            BitVector mask = BitVector::zeros(d);
            for (uint32_t c = 0; c < d; ++c) {
                if (draw.bernoulli(p_inc)) {
                    mask.set_bit(c, true);
                }
            }
            seq_masks.push_back(std::move(mask));
        }

        uint64_t count = 0;
        for (const BitVector& mask : seq_masks) {
            const auto mw = mask.words();
            for (const BitVector& diff : diffs) {
                const auto dw = diff.words();
                bool collide = true;
                for (size_t w = 0; w < mw.size(); ++w) {
                    if (mw[w] & dw[w]) {
                        collide = false;
                        break;
                    }
                }
                count += collide;
            }
        }
        totals[trial] = static_cast<double>(count);
    }

    EstimateReport rep;
    rep.quantity = "far_candidates";
    rep.trials = trials;
    rep.empirical = std::accumulate(totals.begin(), totals.end(), 0.0) /
                    static_cast<double>(trials);
    rep.theoretical = static_cast<double>(L) * static_cast<double>(n) *
                      std::exp(static_cast<double>(far_distance) * t *
                               std::log1p(-p));
    double ss = 0.0;
    for (double v : totals) {
        ss += (v - rep.empirical) * (v - rep.empirical);
    }
    rep.std_error = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1) /
                                           static_cast<double>(trials))
                               : 0.0;
    rep.z = z_score(rep.empirical, rep.theoretical, rep.std_error);
    return rep;
}

EstimateReport estimate_far_candidates(const IndexParams& params,
                                       uint32_t far_distance, uint64_t trials,
                                       RandomStream& rng) {
    params.validate();
    return estimate_far_candidates(params.n, params.d, params.r, params.eps,
                                   params.delta_fail,
                                   static_cast<double>(params.t), far_distance,
                                   trials, rng);
}

EstimateReport recall_experiment(uint64_t n, uint32_t d, uint32_t r, double eps,
                                 double delta_fail, uint32_t plant_distance,
                                 uint64_t trials, RandomStream& rng,
                                 unsigned threads) {
    if (plant_distance > r) {
        throw ParamError("recall_experiment: plant_distance must be at most r");
    }
    if (n < 2) {
        throw ParamError("recall_experiment: n must be at least 2");
    }
    check_trials(trials);
    const IndexParams params = derive_params(n, d, r, eps, delta_fail);

    RandomStream base(rng.next_u64());
    std::vector<uint8_t> found(trials, 0);
    detail::parallel_for(trials, threads, [&](uint64_t i) {
        RandomStream trial_rng = base.split(i);
        PlantedInstance inst =
            gen_planted(n, d, r, plant_distance, trial_rng.next_u64());
        LshIndex ix = LshIndex::build(std::move(inst.data.vectors), params,
                                      trial_rng.next_u64(), /*threads=*/1);
        found[i] = ix.query(inst.query).kind == QueryKind::Found;
    });

    const uint64_t hits = std::accumulate(found.begin(), found.end(), uint64_t{0});
    const double theoretical =
        1.0 - std::pow(1.0 - params.q_near, static_cast<double>(params.L));
    return proportion_report("recall", trials,
                             static_cast<double>(hits) /
                                 static_cast<double>(trials),
                             theoretical);
}

}  // namespace stats
}  // namespace bitlsh
