#include <vector>

#include "bitlsh/bit_vector.hpp"
#include "bitlsh/error.hpp"
#include "bitlsh/random.hpp"
#include "doctest.h"

using namespace bitlsh;

TEST_SUITE("bitvec") {

TEST_CASE("from_bits packs and round-trips") {
    const std::vector<uint8_t> bits{1, 0, 1, 1};
    const BitVector v = BitVector::from_bits(bits);
    CHECK(v.dim() == 4);
    CHECK(v.to_string() == "1011");
    CHECK(v.to_bits() == bits);
    CHECK(v.count_ones() == 3);
}

TEST_CASE("from_bits single zero") {
    const BitVector v = BitVector::from_bits(std::vector<uint8_t>{0});
    CHECK(v.dim() == 1);
    CHECK(v.count_ones() == 0);
}

TEST_CASE("from_bits all ones d=1000") {
    const std::vector<uint8_t> bits(1000, 1);
    const BitVector v = BitVector::from_bits(bits);
    CHECK(v.count_ones() == 1000);
}

TEST_CASE("from_bits rejects bad input") {
    CHECK_THROWS_AS(BitVector::from_bits({}), ParamError);
    CHECK_THROWS_AS(BitVector::from_bits(std::vector<uint8_t>{0, 2, 1}), ParseError);
}

TEST_CASE("parse accepts 0/1 only") {
    const BitVector v = BitVector::parse("0110");
    CHECK(v.to_string() == "0110");
    CHECK_THROWS_AS(BitVector::parse(""), ParamError);
    CHECK_THROWS_AS(BitVector::parse("01x0"), ParseError);
    CHECK_THROWS_AS(BitVector::parse("01 0"), ParseError);
}

TEST_CASE("from_words enforces canonical padding and word count") {
    CHECK_THROWS_AS(BitVector::from_words(4, {0x10}), ParamError);
    CHECK_THROWS_AS(BitVector::from_words(65, {0}), ParamError);
    CHECK_THROWS_AS(BitVector::from_words(65, {0, 0, 0}), ParamError);
    const BitVector v = BitVector::from_words(4, {0xF});
    CHECK(v.to_string() == "1111");
    CHECK(BitVector::from_words(65, {0, 1}).bit(64));
}

TEST_CASE("hamming matches the spec examples") {
    CHECK(hamming(BitVector::parse("1010"), BitVector::parse("0110")) == 2);
    const BitVector u = BitVector::parse("100110");
    CHECK(hamming(u, u) == 0);

    BitVector a = BitVector::zeros(64);
    BitVector b = BitVector::zeros(64);
    for (uint32_t i = 0; i < 64; ++i) {
        b.flip_bit(i);
    }
    CHECK(hamming(a, b) == 64);
}

TEST_CASE("hamming rejects dimension mismatch") {
    CHECK_THROWS_AS(hamming(BitVector::parse("10"), BitVector::parse("101")),
                    ParamError);
}

TEST_CASE("hamming equals a naive per-coordinate count") {
    RandomStream rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const uint32_t d = 1 + static_cast<uint32_t>(rng.next_below(256));
        const BitVector u = BitVector::random(d, rng);
        const BitVector v = BitVector::random(d, rng);
        uint32_t naive = 0;
        for (uint32_t i = 0; i < d; ++i) {
            naive += u.bit(i) != v.bit(i);
        }
        CHECK(hamming(u, v) == naive);
        CHECK(hamming(u, v) == hamming(v, u));
    }
}

TEST_CASE("triangle inequality on random triples") {
    RandomStream rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        const uint32_t d = 1 + static_cast<uint32_t>(rng.next_below(200));
        const BitVector u = BitVector::random(d, rng);
        const BitVector v = BitVector::random(d, rng);
        const BitVector w = BitVector::random(d, rng);
        CHECK(hamming(u, w) <= hamming(u, v) + hamming(v, w));
    }
}

TEST_CASE("equality is logical equality of the d bits") {
    const BitVector a = BitVector::parse("10110");
    BitVector b = BitVector::zeros(5);
    b.set_bit(0, true);
    b.set_bit(2, true);
    b.set_bit(3, true);
    CHECK(a == b);
    b.set_bit(3, false);
    CHECK(a != b);
    CHECK(BitVector::parse("10") != BitVector::parse("100"));
}

TEST_CASE("coordinate access is bounds checked") {
    BitVector v = BitVector::zeros(10);
    CHECK_THROWS_AS(v.bit(10), ParamError);
    CHECK_THROWS_AS(v.set_bit(10, true), ParamError);
    CHECK_THROWS_AS(v.flip_bit(10), ParamError);
}

TEST_CASE("random vectors keep padding clear") {
    RandomStream rng(13);
    for (uint32_t d : {1u, 63u, 64u, 65u, 100u, 128u}) {
        const BitVector v = BitVector::random(d, rng);
        CHECK(v.words().size() == (d + 63) / 64);
        // Padding is zero exactly when the reconstruction from bits matches.
        CHECK(BitVector::from_bits(v.to_bits()) == v);
    }
}

TEST_CASE("agree_on_mask matches a per-coordinate check") {
    RandomStream rng(14);
    for (int rep = 0; rep < 100; ++rep) {
        const uint32_t d = 1 + static_cast<uint32_t>(rng.next_below(130));
        const BitVector mask = BitVector::random(d, rng);
        const BitVector u = BitVector::random(d, rng);
        const BitVector v = BitVector::random(d, rng);
        bool naive = true;
        for (uint32_t i = 0; i < d; ++i) {
            if (mask.bit(i) && u.bit(i) != v.bit(i)) {
                naive = false;
                break;
            }
        }
        CHECK(agree_on_mask(mask, u, v) == naive);
    }
}

}  // TEST_SUITE
