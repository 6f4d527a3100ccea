#include "bitlsh/projection.hpp"

#include <algorithm>
#include <cmath>

#include "bitlsh/error.hpp"
#include "bitlsh/random.hpp"

namespace bitlsh {

namespace {

void check_sampler_args(uint32_t d, double p) {
    if (d == 0) {
        throw ParamError("projection sampler: dimension must be positive");
    }
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ParamError("projection sampler: p must lie in (0, 1), got " +
                         std::to_string(p));
    }
}

bool strictly_increasing(const std::vector<uint32_t>& xs) {
    for (size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] <= xs[i - 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

BitVector ProjectionSeq::coordinate_mask() const {
    BitVector mask = BitVector::zeros(dim);
    for (uint32_t idx : indices) {
        mask.set_bit(idx, true);
    }
    return mask;
}

ProjectionSeq sample_dp(uint32_t d, double p, RandomStream& rng) {
    check_sampler_args(d, p);
    ProjectionSeq s;
    s.dim = d;
    s.deduped = true;
    for (uint32_t i = 0; i < d; ++i) {
        if (rng.bernoulli(p)) {
            s.indices.push_back(i);
        }
    }
    return s;
}

ProjectionSeq sample_dp_t(uint32_t d, double p, uint32_t t, RandomStream& rng) {
    check_sampler_args(d, p);
    if (t == 0) {
        throw ParamError("sample_dp_t: t must be positive");
    }
    ProjectionSeq s;
    s.dim = d;
    for (uint32_t block = 0; block < t; ++block) {
        for (uint32_t i = 0; i < d; ++i) {
            if (rng.bernoulli(p)) {
                s.indices.push_back(i);
            }
        }
    }
    s.deduped = strictly_increasing(s.indices);
    return s;
}

ProjectionSeq uniq(const ProjectionSeq& s) {
    ProjectionSeq out;
    out.dim = s.dim;
    out.indices = s.indices;
    std::sort(out.indices.begin(), out.indices.end());
    out.indices.erase(std::unique(out.indices.begin(), out.indices.end()),
                      out.indices.end());
    out.deduped = true;
    return out;
}

double uniq_inclusion_prob(double p, double t) {
    if (t == 1.0) {
        return p;
    }
    return -std::expm1(t * std::log1p(-p));
}

ProjectionSeq sample_uniq_direct(uint32_t d, double p, uint32_t t, RandomStream& rng) {
    check_sampler_args(d, p);
    if (t == 0) {
        throw ParamError("sample_uniq_direct: t must be positive");
    }
    const double p_inc = uniq_inclusion_prob(p, static_cast<double>(t));
    ProjectionSeq s;
    s.dim = d;
    s.deduped = true;
    for (uint32_t i = 0; i < d; ++i) {
        if (rng.bernoulli(p_inc)) {
            s.indices.push_back(i);
        }
    }
    return s;
}

std::vector<uint8_t> apply(const ProjectionSeq& s, const BitVector& v) {
    if (s.dim != v.dim()) {
        throw ParamError("apply: sequence dimension " + std::to_string(s.dim) +
                         " does not match vector dimension " + std::to_string(v.dim()));
    }
    std::vector<uint8_t> key(s.indices.size());
    const auto words = v.words();
    for (size_t j = 0; j < s.indices.size(); ++j) {
        const uint32_t i = s.indices[j];
        key[j] = static_cast<uint8_t>((words[i / 64] >> (i % 64)) & 1);
    }
    return key;
}

}  // namespace bitlsh
