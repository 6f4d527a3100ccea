#include <benchmark/benchmark.h>

#include <vector>

#include "bitlsh/bit_vector.hpp"
#include "bitlsh/fingerprint.hpp"
#include "bitlsh/index.hpp"
#include "bitlsh/oracle.hpp"
#include "bitlsh/projection.hpp"
#include "bitlsh/random.hpp"

namespace {

using namespace bitlsh;

std::vector<BitVector> make_points(uint64_t n, uint32_t d, uint64_t seed) {
    RandomStream rng(seed);
    std::vector<BitVector> points;
    points.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        points.push_back(BitVector::random(d, rng));
    }
    return points;
}

void BM_Hamming(benchmark::State& state) {
    const uint32_t d = static_cast<uint32_t>(state.range(0));
    RandomStream rng(1);
    const BitVector u = BitVector::random(d, rng);
    const BitVector v = BitVector::random(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamming(u, v));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(BM_Hamming)->Arg(64)->Arg(256)->Arg(1024);

void BM_FingerprintMasked(benchmark::State& state) {
    const uint32_t d = static_cast<uint32_t>(state.range(0));
    RandomStream rng(2);
    const BitVector v = BitVector::random(d, rng);
    ProjectionSeq seq = sample_uniq_direct(d, 0.3, 2, rng);
    const BitVector mask = seq.coordinate_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fingerprint_masked(v.words(), mask.words(), kFingerprintSalt));
    }
}
BENCHMARK(BM_FingerprintMasked)->Arg(64)->Arg(256)->Arg(1024);

void BM_SampleUniqDirect(benchmark::State& state) {
    const uint32_t d = static_cast<uint32_t>(state.range(0));
    RandomStream rng(3);
    const double p = 0.117503;  // r = 8
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_uniq_direct(d, p, 4, rng));
    }
}
BENCHMARK(BM_SampleUniqDirect)->Arg(128)->Arg(1024);

void BM_Build(benchmark::State& state) {
    const uint64_t n = static_cast<uint64_t>(state.range(0));
    const uint32_t d = 64;
    const auto points = make_points(n, d, 4);
    const IndexParams params = derive_params(n, d, 8, 1.0, 1.0 / n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(LshIndex::build(points, params, 7));
    }
    state.counters["tables"] = static_cast<double>(params.L);
}
BENCHMARK(BM_Build)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Query(benchmark::State& state) {
    const uint64_t n = static_cast<uint64_t>(state.range(0));
    const uint32_t d = 64;
    const IndexParams params = derive_params(n, d, 8, 1.0, 1.0 / n);
    const LshIndex ix = LshIndex::build(make_points(n, d, 5), params, 9);
    RandomStream rng(6);
    for (auto _ : state) {
        const BitVector q = BitVector::random(d, rng);
        benchmark::DoNotOptimize(ix.query(q));
    }
}
BENCHMARK(BM_Query)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_OracleNearest(benchmark::State& state) {
    const uint64_t n = static_cast<uint64_t>(state.range(0));
    const auto points = make_points(n, 64, 7);
    RandomStream rng(8);
    for (auto _ : state) {
        const BitVector q = BitVector::random(64, rng);
        benchmark::DoNotOptimize(oracle::nearest(points, q));
    }
}
BENCHMARK(BM_OracleNearest)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
