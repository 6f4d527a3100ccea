#include "bitlsh/bit_vector.hpp"

#include <bit>

#include "bitlsh/error.hpp"
#include "bitlsh/random.hpp"

namespace bitlsh {

namespace {

size_t word_count(uint32_t dim) {
    return (static_cast<size_t>(dim) + 63) / 64;
}

}  // namespace

BitVector BitVector::zeros(uint32_t dim) {
    if (dim == 0) {
        throw ParamError("BitVector: dimension must be positive");
    }
    BitVector v;
    v.dim_ = dim;
    v.words_.assign(word_count(dim), 0);
    return v;
}

BitVector BitVector::from_bits(std::span<const uint8_t> bits) {
    if (bits.empty()) {
        throw ParamError("BitVector: dimension must be positive");
    }
    if (bits.size() > UINT32_MAX) {
        throw ParamError("BitVector: dimension too large");
    }
    BitVector v = zeros(static_cast<uint32_t>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) {
            throw ParseError("BitVector: value at position " + std::to_string(i) +
                             " is not 0 or 1");
        }
        v.words_[i / 64] |= static_cast<uint64_t>(bits[i]) << (i % 64);
    }
    return v;
}

BitVector BitVector::parse(std::string_view text) {
    if (text.empty()) {
        throw ParamError("BitVector: dimension must be positive");
    }
    if (text.size() > UINT32_MAX) {
        throw ParamError("BitVector: dimension too large");
    }
    BitVector v = zeros(static_cast<uint32_t>(text.size()));
    for (size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw ParseError(std::string("BitVector: invalid character '") + ch +
                             "' at position " + std::to_string(i));
        }
        if (ch == '1') {
            v.words_[i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    return v;
}

BitVector BitVector::from_words(uint32_t dim, std::vector<uint64_t> words) {
    if (dim == 0) {
        throw ParamError("BitVector: dimension must be positive");
    }
    if (words.size() != word_count(dim)) {
        throw ParamError("BitVector: word count does not match dimension");
    }
    const uint32_t tail = dim % 64;
    if (tail != 0 && (words.back() & ~((uint64_t{1} << tail) - 1)) != 0) {
        throw ParamError("BitVector: nonzero padding bits");
    }
    BitVector v;
    v.dim_ = dim;
    v.words_ = std::move(words);
    return v;
}

BitVector BitVector::random(uint32_t dim, RandomStream& rng) {
    BitVector v = zeros(dim);
    for (auto& w : v.words_) {
        w = rng.next_u64();
    }
    // Clear padding to keep the canonical form.
    const uint32_t tail = dim % 64;
    if (tail != 0) {
        v.words_.back() &= (uint64_t{1} << tail) - 1;
    }
    return v;
}

void BitVector::check_coordinate(uint32_t i) const {
    if (i >= dim_) {
        throw ParamError("BitVector: coordinate " + std::to_string(i) +
                         " out of range for dimension " + std::to_string(dim_));
    }
}

bool BitVector::bit(uint32_t i) const {
    check_coordinate(i);
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set_bit(uint32_t i, bool value) {
    check_coordinate(i);
    const uint64_t mask = uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

void BitVector::flip_bit(uint32_t i) {
    check_coordinate(i);
    words_[i / 64] ^= uint64_t{1} << (i % 64);
}

uint64_t BitVector::count_ones() const noexcept {
    uint64_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<uint64_t>(std::popcount(w));
    }
    return total;
}

std::vector<uint8_t> BitVector::to_bits() const {
    std::vector<uint8_t> bits(dim_);
    for (uint32_t i = 0; i < dim_; ++i) {
        bits[i] = static_cast<uint8_t>((words_[i / 64] >> (i % 64)) & 1);
    }
    return bits;
}

std::string BitVector::to_string() const {
    std::string out(dim_, '0');
    for (uint32_t i = 0; i < dim_; ++i) {
        if ((words_[i / 64] >> (i % 64)) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

uint32_t hamming(const BitVector& u, const BitVector& v) {
    if (u.dim() != v.dim()) {
        throw ParamError("hamming: dimension mismatch (" + std::to_string(u.dim()) +
                         " vs " + std::to_string(v.dim()) + ")");
    }
    const auto uw = u.words();
    const auto vw = v.words();
    uint64_t total = 0;
    for (size_t k = 0; k < uw.size(); ++k) {
        total += static_cast<uint64_t>(std::popcount(uw[k] ^ vw[k]));
    }
    return static_cast<uint32_t>(total);
}

bool agree_on_mask(const BitVector& mask, const BitVector& u, const BitVector& v) {
    if (mask.dim() != u.dim() || u.dim() != v.dim()) {
        throw ParamError("agree_on_mask: dimension mismatch");
    }
    const auto mw = mask.words();
    const auto uw = u.words();
    const auto vw = v.words();
    for (size_t k = 0; k < mw.size(); ++k) {
        if ((uw[k] ^ vw[k]) & mw[k]) {
            return false;
        }
    }
    return true;
}

}  // namespace bitlsh
