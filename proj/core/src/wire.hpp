#pragma once

// Little-endian binary readers/writers used by the dataset and snapshot
// formats. Readers track a byte offset so format errors can point at the
// violating position.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>

#include "bitlsh/error.hpp"

namespace bitlsh::detail {

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void bytes(std::span<const uint8_t> data) {
        out_.write(reinterpret_cast<const char*>(data.data()),
                   static_cast<std::streamsize>(data.size()));
        offset_ += data.size();
    }

    void u8(uint8_t v) { bytes({&v, 1}); }

    void u16(uint16_t v) { put_le(v); }
    void u32(uint32_t v) { put_le(v); }
    void u64(uint64_t v) { put_le(v); }

    void f64(double v) { put_le(std::bit_cast<uint64_t>(v)); }

    uint64_t offset() const noexcept { return offset_; }

private:
    template <typename T>
    void put_le(T v) {
        uint8_t buf[sizeof(T)];
        for (size_t i = 0; i < sizeof(T); ++i) {
            buf[i] = static_cast<uint8_t>(v >> (8 * i));
        }
        bytes({buf, sizeof(T)});
    }

    std::ostream& out_;
    uint64_t offset_ = 0;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    void bytes(std::span<uint8_t> data) {
        in_.read(reinterpret_cast<char*>(data.data()),
                 static_cast<std::streamsize>(data.size()));
        if (static_cast<size_t>(in_.gcount()) != data.size()) {
            throw FormatError("unexpected end of stream", offset_);
        }
        offset_ += data.size();
    }

    uint8_t u8() {
        uint8_t v;
        bytes({&v, 1});
        return v;
    }

    uint16_t u16() { return get_le<uint16_t>(); }
    uint32_t u32() { return get_le<uint32_t>(); }
    uint64_t u64() { return get_le<uint64_t>(); }

    double f64() { return std::bit_cast<double>(get_le<uint64_t>()); }

    void expect_magic(const char* magic, size_t len, const char* what) {
        const uint64_t at = offset_;
        uint8_t buf[8];
        bytes({buf, len});
        if (std::memcmp(buf, magic, len) != 0) {
            throw FormatError(std::string("bad magic, not a ") + what, at);
        }
    }

    uint64_t offset() const noexcept { return offset_; }

private:
    template <typename T>
    T get_le() {
        uint8_t buf[sizeof(T)];
        bytes({buf, sizeof(T)});
        T v = 0;
        for (size_t i = 0; i < sizeof(T); ++i) {
            v |= static_cast<T>(buf[i]) << (8 * i);
        }
        return v;
    }

    std::istream& in_;
    uint64_t offset_ = 0;
};

}  // namespace bitlsh::detail
