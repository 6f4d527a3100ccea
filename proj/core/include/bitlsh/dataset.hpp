#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bitlsh/bit_vector.hpp"

namespace bitlsh {

/// A set of equal-dimension binary points, optionally labeled.
struct Dataset {
    uint32_t dim = 0;
    std::vector<BitVector> vectors;
    std::vector<uint64_t> labels;  ///< optional; empty means unlabeled

    size_t size() const noexcept { return vectors.size(); }

    /// Throws ParamError on mixed dimensions or duplicate labels.
    void validate() const;
};

/// Text format: one vector per line as a run of '0'/'1', coordinate 0 first,
/// every line the same length, trailing newline, no CR.
Dataset read_text(std::istream& in);
Dataset read_text(const std::filesystem::path& path);
void write_text(std::ostream& out, const Dataset& ds);
void write_text(const std::filesystem::path& path, const Dataset& ds);

/// Binary format "HBD1": magic, n u32 LE, d u32 LE, then n rows of
/// ceil(d/8) bytes, bit i of a row at byte i/8, position i%8 (LSB-first).
/// Padding bits must be zero.
Dataset read_bin(std::istream& in);
Dataset read_bin(const std::filesystem::path& path);
void write_bin(std::ostream& out, const Dataset& ds);
void write_bin(const std::filesystem::path& path, const Dataset& ds);

/// Reads either format, sniffing the binary magic.
Dataset read_auto(const std::filesystem::path& path);

/// A near-neighbor test instance: one point planted at a known distance from
/// the query, everything else far.
struct PlantedInstance {
    Dataset data;
    BitVector query;
    uint32_t planted_id = 0;
};

/// Generates a uniform random query, one point at exactly plant_distance from
/// it, and n-1 points re-drawn until they land farther than max(r,
/// plant_distance) from the query. Deterministic under seed.
PlantedInstance gen_planted(uint64_t n, uint32_t d, uint32_t r,
                            uint32_t plant_distance, uint64_t seed);

}  // namespace bitlsh
