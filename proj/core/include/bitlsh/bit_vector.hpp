#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitlsh {

class RandomStream;

/// A point of {0,1}^d, packed little-endian into 64-bit words: coordinate i
/// lives in word i/64 at bit i%64. Storage bits at positions >= dim are kept
/// zero by every mutator, so word-wise equality and hashing need no masking.
class BitVector {
public:
    BitVector() = default;

    /// All-zero vector of the given dimension (>= 1).
    static BitVector zeros(uint32_t dim);

    /// Pack an ordered list of 0/1 values, coordinate 0 first.
    static BitVector from_bits(std::span<const uint8_t> bits);

    /// Parse a run of '0'/'1' characters, coordinate 0 first.
    static BitVector parse(std::string_view text);

    /// Adopt packed words. Word count must match ceil(dim/64) and padding
    /// bits must already be zero.
    static BitVector from_words(uint32_t dim, std::vector<uint64_t> words);

    /// Uniform random vector of the given dimension.
    static BitVector random(uint32_t dim, RandomStream& rng);

    uint32_t dim() const noexcept { return dim_; }

    bool bit(uint32_t i) const;
    void set_bit(uint32_t i, bool value);
    void flip_bit(uint32_t i);

    uint64_t count_ones() const noexcept;

    std::vector<uint8_t> to_bits() const;
    std::string to_string() const;

    std::span<const uint64_t> words() const noexcept { return words_; }

    bool operator==(const BitVector&) const = default;

private:
    uint32_t dim_ = 0;
    std::vector<uint64_t> words_;

    void check_coordinate(uint32_t i) const;
};

/// Exact Hamming distance |{i : u_i != v_i}|. Throws ParamError when the
/// dimensions differ.
uint32_t hamming(const BitVector& u, const BitVector& v);

/// True when u and v agree on every coordinate that is set in mask.
/// All three must share a dimension.
bool agree_on_mask(const BitVector& mask, const BitVector& u, const BitVector& v);

}  // namespace bitlsh
