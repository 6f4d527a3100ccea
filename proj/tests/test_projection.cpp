#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "bitlsh/bit_vector.hpp"
#include "bitlsh/error.hpp"
#include "bitlsh/projection.hpp"
#include "bitlsh/random.hpp"
#include "doctest.h"

using namespace bitlsh;

namespace {

// Key of v under s as a string, from the literal bit-list route.
std::string key_of(const ProjectionSeq& s, const BitVector& v) {
    std::string key;
    for (uint8_t b : apply(s, v)) {
        key.push_back(static_cast<char>('0' + b));
    }
    return key;
}

BitVector cube_point(uint32_t d, uint32_t value) {
    BitVector v = BitVector::zeros(d);
    for (uint32_t i = 0; i < d; ++i) {
        if ((value >> i) & 1) {
            v.set_bit(i, true);
        }
    }
    return v;
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("sample_dp draws a sorted subset in range") {
    RandomStream rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        const ProjectionSeq s = sample_dp(32, 0.3, rng);
        CHECK(s.deduped);
        for (size_t i = 0; i < s.indices.size(); ++i) {
            CHECK(s.indices[i] < 32);
            if (i > 0) {
                CHECK(s.indices[i] > s.indices[i - 1]);
            }
        }
    }
}

TEST_CASE("sample_dp at p near one includes every coordinate") {
    RandomStream rng(22);
    const ProjectionSeq s = sample_dp(8, 1.0 - 1e-12, rng);
    REQUIRE(s.indices.size() == 8);
    for (uint32_t i = 0; i < 8; ++i) {
        CHECK(s.indices[i] == i);
    }
}

TEST_CASE("sample_dp mean length matches binomial moments") {
    // d=8, p=0.5: length ~ Binomial(8, 0.5), mean 4, variance 2.
    RandomStream rng(23);
    const int trials = 100000;
    uint64_t total = 0;
    for (int i = 0; i < trials; ++i) {
        total += sample_dp(8, 0.5, rng).indices.size();
    }
    const double mean = static_cast<double>(total) / trials;
    const double sigma = std::sqrt(2.0 / trials);
    CHECK(std::abs(mean - 4.0) <= 3 * sigma);
}

TEST_CASE("samplers are deterministic under a fixed seed") {
    RandomStream a(24), b(24);
    CHECK(sample_dp(16, 0.4, a) == sample_dp(16, 0.4, b));
    CHECK(sample_dp_t(16, 0.4, 3, a) == sample_dp_t(16, 0.4, 3, b));
    CHECK(sample_uniq_direct(16, 0.4, 3, a) == sample_uniq_direct(16, 0.4, 3, b));
}

TEST_CASE("samplers validate their arguments") {
    RandomStream rng(25);
    CHECK_THROWS_AS(sample_dp(0, 0.5, rng), ParamError);
    CHECK_THROWS_AS(sample_dp(8, 0.0, rng), ParamError);
    CHECK_THROWS_AS(sample_dp(8, 1.0, rng), ParamError);
    CHECK_THROWS_AS(sample_dp(8, -0.1, rng), ParamError);
    CHECK_THROWS_AS(sample_dp_t(8, 0.5, 0, rng), ParamError);
    CHECK_THROWS_AS(sample_uniq_direct(8, 0.5, 0, rng), ParamError);
}

TEST_CASE("sample_dp_t with t=1 equals a single draw") {
    RandomStream a(26), b(26);
    const ProjectionSeq one = sample_dp_t(12, 0.35, 1, a);
    const ProjectionSeq dp = sample_dp(12, 0.35, b);
    CHECK(one.indices == dp.indices);
    CHECK(one.deduped);
}

TEST_CASE("sample_dp_t per-coordinate multiplicity has mean p*t") {
    // d=4, p=0.5, t=3: multiplicity of a coordinate ~ Binomial(3, 0.5).
    RandomStream rng(27);
    const int trials = 100000;
    uint64_t count[4] = {};
    for (int i = 0; i < trials; ++i) {
        const ProjectionSeq s = sample_dp_t(4, 0.5, 3, rng);
        for (uint32_t idx : s.indices) {
            REQUIRE(idx < 4);
            ++count[idx];
        }
    }
    const double sigma = std::sqrt(3 * 0.25 / trials);
    for (uint64_t c : count) {
        const double mean = static_cast<double>(c) / trials;
        CHECK(std::abs(mean - 1.5) <= 3 * sigma);
    }
}

TEST_CASE("uniq gives sorted set semantics") {
    // 1-based (3,1,1,3) is 0-based (2,0,0,2); its set is (0,2).
    ProjectionSeq s;
    s.dim = 4;
    s.indices = {2, 0, 0, 2};
    s.deduped = false;
    const ProjectionSeq u = uniq(s);
    CHECK(u.indices == std::vector<uint32_t>{0, 2});
    CHECK(u.deduped);

    CHECK(uniq(u) == u);  // idempotent on canonical input

    ProjectionSeq empty;
    empty.dim = 4;
    CHECK(uniq(empty).indices.empty());
}

TEST_CASE("apply extracts bits in order, repeats included") {
    // 1-based (3,1,1) on v=101 yields (1,1,1).
    ProjectionSeq s;
    s.dim = 3;
    s.indices = {2, 0, 0};
    const BitVector v = BitVector::parse("101");
    CHECK(apply(s, v) == std::vector<uint8_t>{1, 1, 1});
}

TEST_CASE("apply on the empty sequence collides everything") {
    ProjectionSeq s;
    s.dim = 16;
    RandomStream rng(28);
    const BitVector u = BitVector::random(16, rng);
    const BitVector v = BitVector::random(16, rng);
    CHECK(apply(s, u).empty());
    CHECK(apply(s, u) == apply(s, v));
}

TEST_CASE("apply rejects dimension mismatch") {
    ProjectionSeq s;
    s.dim = 8;
    CHECK_THROWS_AS(apply(s, BitVector::zeros(9)), ParamError);
}

TEST_CASE("uniq preserves collision behavior on an exhaustive cube") {
    const uint32_t d = 8;
    std::vector<BitVector> cube;
    for (uint32_t x = 0; x < (1u << d); ++x) {
        cube.push_back(cube_point(d, x));
    }
    RandomStream rng(29);
    for (int rep = 0; rep < 20; ++rep) {
        const ProjectionSeq s = sample_dp_t(d, 0.3, 1 + rep % 4, rng);
        const ProjectionSeq u = uniq(s);
        std::vector<std::string> sk, uk;
        for (const BitVector& v : cube) {
            sk.push_back(key_of(s, v));
            uk.push_back(key_of(u, v));
        }
        for (size_t a = 0; a < cube.size(); ++a) {
            for (size_t b = a + 1; b < cube.size(); ++b) {
                REQUIRE((sk[a] == sk[b]) == (uk[a] == uk[b]));
            }
        }
    }
}

TEST_CASE("coordinate_mask marks exactly the distinct indices") {
    RandomStream rng(30);
    for (int rep = 0; rep < 20; ++rep) {
        const ProjectionSeq s = sample_dp_t(40, 0.2, 3, rng);
        const BitVector mask = s.coordinate_mask();
        CHECK(mask.count_ones() == uniq(s).indices.size());
        for (uint32_t idx : s.indices) {
            CHECK(mask.bit(idx));
        }
    }
}

TEST_CASE("uniq_inclusion_prob closed form") {
    // p = 1-e^(-1/8), t=4: 1-(1-p)^4 = 1-e^(-1/2).
    const double p = -std::expm1(-1.0 / 8.0);
    CHECK(uniq_inclusion_prob(p, 4.0) ==
          doctest::Approx(0.3934693402873666).epsilon(1e-12));
    CHECK(uniq_inclusion_prob(0.3, 1.0) == 0.3);  // exact at t=1
}

TEST_CASE("sample_uniq_direct with t=1 equals sample_dp exactly") {
    RandomStream a(31), b(31);
    CHECK(sample_uniq_direct(64, 0.27, 1, a) == sample_dp(64, 0.27, b));
}

TEST_CASE("sample_uniq_direct per-coordinate inclusion matches 1-(1-p)^t") {
    const uint32_t d = 8;
    const double p = -std::expm1(-1.0 / 8.0);
    const double p_inc = 0.3934693402873666;
    RandomStream rng(32);
    const int trials = 100000;
    uint64_t count[d] = {};
    for (int i = 0; i < trials; ++i) {
        for (uint32_t idx : sample_uniq_direct(d, p, 4, rng).indices) {
            ++count[idx];
        }
    }
    const double sigma = std::sqrt(p_inc * (1 - p_inc) / trials);
    for (uint64_t c : count) {
        CHECK(std::abs(static_cast<double>(c) / trials - p_inc) <= 3 * sigma);
    }
}

TEST_CASE("sample_uniq_direct distribution equals uniq of sample_dp_t") {
    const uint32_t d = 8;
    const double p = 0.25;
    const uint32_t t = 3;
    RandomStream rng(33);
    const int trials = 100000;
    uint64_t direct[d] = {};
    uint64_t via_uniq[d] = {};
    for (int i = 0; i < trials; ++i) {
        for (uint32_t idx : sample_uniq_direct(d, p, t, rng).indices) {
            ++direct[idx];
        }
        for (uint32_t idx : uniq(sample_dp_t(d, p, t, rng)).indices) {
            ++via_uniq[idx];
        }
    }
    const double p_inc = uniq_inclusion_prob(p, t);
    const double sigma_diff = std::sqrt(2 * p_inc * (1 - p_inc) / trials);
    for (uint32_t i = 0; i < d; ++i) {
        const double fd = static_cast<double>(direct[i]) / trials;
        const double fu = static_cast<double>(via_uniq[i]) / trials;
        CHECK(std::abs(fd - fu) <= 3 * sigma_diff);
    }
}

TEST_CASE("miss probability of a fixed coordinate set matches (1-p)^(dt)") {
    // r=4 gives p = 1-e^(-1/4); with t=2 and |K|=4 the closed form is e^-2.
    const uint32_t d = 16;
    const uint32_t delta = 4;
    const uint32_t t = 2;
    const double p = -std::expm1(-1.0 / 4.0);
    const double theo = std::exp(-2.0);
    RandomStream rng(34);
    const int trials = 100000;
    int misses = 0;
    for (int i = 0; i < trials; ++i) {
        const ProjectionSeq s = sample_dp_t(d, p, t, rng);
        bool miss = true;
        for (uint32_t idx : s.indices) {
            if (idx < delta) {
                miss = false;
                break;
            }
        }
        misses += miss;
    }
    const double emp = static_cast<double>(misses) / trials;
    const double sigma = std::sqrt(theo * (1 - theo) / trials);
    CHECK(std::abs(emp - theo) <= 3 * sigma);
}

TEST_CASE("miss probability is non-increasing in the set size") {
    const uint32_t d = 16;
    const double p = -std::expm1(-1.0 / 4.0);
    const uint32_t t = 2;
    RandomStream rng(35);
    const int trials = 30000;
    double prev = 2.0;
    for (uint32_t delta : {0u, 1u, 2u, 4u, 8u}) {
        int misses = 0;
        for (int i = 0; i < trials; ++i) {
            const ProjectionSeq s = sample_dp_t(d, p, t, rng);
            bool miss = true;
            for (uint32_t idx : s.indices) {
                if (idx < delta) {
                    miss = false;
                    break;
                }
            }
            misses += miss;
        }
        const double emp = static_cast<double>(misses) / trials;
        if (delta == 0) {
            CHECK(emp == 1.0);
        }
        CHECK(emp <= prev);
        prev = emp;
    }
}

}  // TEST_SUITE
