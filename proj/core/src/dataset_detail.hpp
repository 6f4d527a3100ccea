#pragma once

// Packed point-block encoding shared by the HBD1 dataset format and LSH1
// snapshots (which embed a whole HBD1 block).

#include <vector>

#include "bitlsh/bit_vector.hpp"
#include "wire.hpp"

namespace bitlsh::detail {

void write_points_block(Writer& w, std::span<const BitVector> points, uint32_t dim);

std::vector<BitVector> read_points_block(Reader& r, uint32_t& dim_out);

}  // namespace bitlsh::detail
