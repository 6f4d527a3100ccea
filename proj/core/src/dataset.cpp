#include "bitlsh/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <unordered_set>

#include "bitlsh/error.hpp"
#include "bitlsh/random.hpp"
#include "dataset_detail.hpp"
#include "wire.hpp"

namespace bitlsh {

namespace {

constexpr char kMagic[] = "HBD1";
constexpr uint64_t kMaxRejections = 1'000'000;

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string() + " for reading");
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    return out;
}

}  // namespace

namespace detail {

void write_points_block(Writer& w, std::span<const BitVector> points, uint32_t dim) {
    w.bytes({reinterpret_cast<const uint8_t*>(kMagic), 4});
    w.u32(static_cast<uint32_t>(points.size()));
    w.u32(dim);
    const size_t row_bytes = (static_cast<size_t>(dim) + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (const BitVector& v : points) {
        const auto words = v.words();
        for (size_t k = 0; k < row_bytes; ++k) {
            row[k] = static_cast<uint8_t>(words[k / 8] >> (8 * (k % 8)));
        }
        w.bytes(row);
    }
}

std::vector<BitVector> read_points_block(Reader& r, uint32_t& dim_out) {
    r.expect_magic(kMagic, 4, "HBD1 dataset");
    const uint32_t n = r.u32();
    const uint64_t dim_offset = r.offset();
    const uint32_t d = r.u32();
    if (n == 0) {
        throw FormatError("dataset has zero points", dim_offset - 4);
    }
    if (d == 0) {
        throw FormatError("dataset has zero dimension", dim_offset);
    }
    const size_t row_bytes = (static_cast<size_t>(d) + 7) / 8;
    const uint8_t pad_mask =
        (d % 8 == 0) ? 0 : static_cast<uint8_t>(0xFFu << (d % 8));

    std::vector<BitVector> points;
    points.reserve(n);
    std::vector<uint8_t> row(row_bytes);
    for (uint32_t i = 0; i < n; ++i) {
        const uint64_t row_offset = r.offset();
        r.bytes(row);
        if (pad_mask != 0 && (row.back() & pad_mask) != 0) {
            throw FormatError("nonzero padding bits in row " + std::to_string(i),
                              row_offset + row_bytes - 1);
        }
        std::vector<uint64_t> words((static_cast<size_t>(d) + 63) / 64, 0);
        for (size_t k = 0; k < row_bytes; ++k) {
            words[k / 8] |= static_cast<uint64_t>(row[k]) << (8 * (k % 8));
        }
        points.push_back(BitVector::from_words(d, std::move(words)));
    }
    dim_out = d;
    return points;
}

}  // namespace detail

void Dataset::validate() const {
    if (vectors.empty()) {
        throw ParamError("Dataset: must contain at least one vector");
    }
    for (const BitVector& v : vectors) {
        if (v.dim() != dim) {
            throw ParamError("Dataset: mixed dimensions (" + std::to_string(v.dim()) +
                             " vs " + std::to_string(dim) + ")");
        }
    }
    if (!labels.empty()) {
        if (labels.size() != vectors.size()) {
            throw ParamError("Dataset: label count does not match vector count");
        }
        std::unordered_set<uint64_t> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) {
            throw ParamError("Dataset: labels must be unique");
        }
    }
}

Dataset read_text(std::istream& in) {
    Dataset ds;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line.empty()) {
                throw ParseError("line 1: empty line, expected a bit string");
            }
            ds.dim = static_cast<uint32_t>(line.size());
        } else if (line.size() != ds.dim) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(ds.dim) + " bits, got " +
                             std::to_string(line.size()));
        }
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] != '0' && line[i] != '1') {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": invalid character at column " +
                                 std::to_string(i + 1));
            }
        }
        ds.vectors.push_back(BitVector::parse(line));
    }
    if (ds.vectors.empty()) {
        throw ParseError("empty input: a dataset needs at least one vector");
    }
    return ds;
}

Dataset read_text(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_text(in);
}

void write_text(std::ostream& out, const Dataset& ds) {
    for (const BitVector& v : ds.vectors) {
        out << v.to_string() << '\n';
    }
}

void write_text(const std::filesystem::path& path, const Dataset& ds) {
    auto out = open_output(path);
    write_text(out, ds);
}

Dataset read_bin(std::istream& in) {
    detail::Reader r(in);
    Dataset ds;
    ds.vectors = detail::read_points_block(r, ds.dim);
    return ds;
}

Dataset read_bin(const std::filesystem::path& path) {
    auto in = open_input(path);
    Dataset ds = read_bin(in);
    in.peek();
    if (!in.eof()) {
        throw FormatError("trailing bytes after dataset", in.tellg() < 0
                              ? 0
                              : static_cast<uint64_t>(in.tellg()));
    }
    return ds;
}

void write_bin(std::ostream& out, const Dataset& ds) {
    ds.validate();
    detail::Writer w(out);
    detail::write_points_block(w, ds.vectors, ds.dim);
}

void write_bin(const std::filesystem::path& path, const Dataset& ds) {
    auto out = open_output(path);
    write_bin(out, ds);
}

Dataset read_auto(const std::filesystem::path& path) {
    auto in = open_input(path);
    char magic[4] = {};
    in.read(magic, 4);
    const bool binary = in.gcount() == 4 && std::equal(magic, magic + 4, kMagic);
    in.clear();
    in.seekg(0);
    return binary ? read_bin(in) : read_text(in);
}

PlantedInstance gen_planted(uint64_t n, uint32_t d, uint32_t r,
                            uint32_t plant_distance, uint64_t seed) {
    if (n < 2) {
        throw ParamError("gen_planted: n must be at least 2");
    }
    if (d == 0) {
        throw ParamError("gen_planted: d must be positive");
    }
    if (plant_distance > d) {
        throw ParamError("gen_planted: plant distance " +
                         std::to_string(plant_distance) + " exceeds dimension " +
                         std::to_string(d));
    }
    if (r > d) {
        throw ParamError("gen_planted: r exceeds dimension");
    }

    RandomStream rng(seed);
    PlantedInstance inst;
    inst.query = BitVector::random(d, rng);

    // Plant: flip a uniform random plant_distance-subset of coordinates.
    BitVector planted = inst.query;
    std::vector<uint32_t> coords(d);
    std::iota(coords.begin(), coords.end(), 0);
    for (uint32_t j = 0; j < plant_distance; ++j) {
        const uint64_t pick = j + rng.next_below(d - j);
        std::swap(coords[j], coords[pick]);
        planted.flip_bit(coords[j]);
    }

    const uint32_t reject_radius = std::max(r, plant_distance);
    const uint64_t planted_pos = rng.next_below(n);

    inst.data.dim = d;
    inst.data.vectors.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        if (i == planted_pos) {
            inst.data.vectors.push_back(planted);
            continue;
        }
        uint64_t attempts = 0;
        for (;;) {
            BitVector candidate = BitVector::random(d, rng);
            if (hamming(candidate, inst.query) > reject_radius) {
                inst.data.vectors.push_back(std::move(candidate));
                break;
            }
            if (++attempts >= kMaxRejections) {
                throw GenError("gen_planted: rejection sampling exhausted; "
                               "dimension too small for the requested radius");
            }
        }
    }
    inst.planted_id = static_cast<uint32_t>(planted_pos);
    return inst;
}

}  // namespace bitlsh
