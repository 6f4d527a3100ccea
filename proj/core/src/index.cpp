#include "bitlsh/index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "bitlsh/error.hpp"
#include "bitlsh/random.hpp"
#include "dataset_detail.hpp"
#include "parallel.hpp"
#include "wire.hpp"

namespace bitlsh {

namespace {

constexpr char kMagic[] = "LSH1";
constexpr uint16_t kFormatVersion = 1;

bool entry_less(const TableEntry& a, const TableEntry& b) {
    if (a.fp != b.fp) {
        return a.fp < b.fp;
    }
    return a.id < b.id;
}

}  // namespace

LshIndex LshIndex::build(std::vector<BitVector> points, const IndexParams& params,
                         uint64_t seed, unsigned threads) {
    params.validate();
    if (points.size() != params.n) {
        throw ParamError("build: point count " + std::to_string(points.size()) +
                         " does not match params.n " + std::to_string(params.n));
    }
    for (const BitVector& v : points) {
        if (v.dim() != params.d) {
            throw ParamError("build: point dimension " + std::to_string(v.dim()) +
                             " does not match params.d " + std::to_string(params.d));
        }
    }

    LshIndex ix;
    ix.params_ = params;
    ix.seed_ = seed;
    ix.points_ = std::move(points);

    // Sequences are drawn serially up front so that build parallelism cannot
    // perturb the result.
    RandomStream rng(seed);
    ix.seqs_.reserve(params.L);
    for (uint64_t i = 0; i < params.L; ++i) {
        ix.seqs_.push_back(sample_uniq_direct(params.d, params.p,
                                              static_cast<uint32_t>(params.t), rng));
    }
    ix.rebuild_masks();
    ix.build_tables(threads);
    return ix;
}

void LshIndex::rebuild_masks() {
    masks_.clear();
    masks_.reserve(seqs_.size());
    for (const ProjectionSeq& s : seqs_) {
        masks_.push_back(s.coordinate_mask());
    }
}

void LshIndex::build_tables(unsigned threads) {
    tables_.assign(seqs_.size(), {});
    detail::parallel_for(seqs_.size(), threads, [&](uint64_t i) {
        auto& entries = tables_[i];
        entries.resize(points_.size());
        const auto mask = masks_[i].words();
        for (size_t j = 0; j < points_.size(); ++j) {
            entries[j].fp = fingerprint_masked(points_[j].words(), mask,
                                               kFingerprintSalt);
            entries[j].id = static_cast<uint32_t>(j);
        }
        std::sort(entries.begin(), entries.end(), entry_less);
    });
}

QueryOutcome LshIndex::query(const BitVector& q) const {
    return query_budgeted(q, std::numeric_limits<double>::infinity()).outcome;
}

BudgetedOutcome LshIndex::query_budgeted(const BitVector& q,
                                         double max_candidates) const {
    if (q.dim() != params_.d) {
        throw ParamError("query: dimension " + std::to_string(q.dim()) +
                         " does not match index dimension " +
                         std::to_string(params_.d));
    }
    const double threshold =
        (1.0 + params_.eps) * static_cast<double>(params_.r);

    BudgetedOutcome result;
    QueryOutcome& out = result.outcome;
    for (size_t i = 0; i < tables_.size(); ++i) {
        ++out.tables_probed;
        const Fingerprint fp =
            fingerprint_masked(q.words(), masks_[i].words(), kFingerprintSalt);
        const auto& entries = tables_[i];
        const TableEntry probe{fp, 0};
        auto it = std::lower_bound(entries.begin(), entries.end(), probe,
                                   [](const TableEntry& a, const TableEntry& b) {
                                       return a.fp < b.fp;
                                   });
        for (; it != entries.end() && it->fp == fp; ++it) {
            ++out.candidates_scanned;
            const uint32_t dist = hamming(points_[it->id], q);
            if (static_cast<double>(dist) <= threshold) {
                out.kind = QueryKind::Found;
                out.witness = Witness{it->id, dist};
                return result;
            }
            if (static_cast<double>(out.candidates_scanned) > max_candidates) {
                result.aborted = true;
                return result;
            }
        }
    }
    return result;
}

QueryOutcome query_hp(std::span<const LshIndex> bank, const BitVector& q,
                      double budget_factor) {
    if (bank.empty()) {
        throw ParamError("query_hp: bank must not be empty");
    }
    if (!(budget_factor > 0.0)) {
        throw ParamError("query_hp: budget_factor must be positive");
    }
    const IndexParams& params = bank.front().params();
    for (const LshIndex& ix : bank) {
        if (!(ix.params() == params)) {
            throw ParamError("query_hp: bank members must share params");
        }
    }
    const double budget = budget_factor * static_cast<double>(params.L);
    for (const LshIndex& ix : bank) {
        BudgetedOutcome attempt = ix.query_budgeted(q, budget);
        if (!attempt.aborted) {
            return attempt.outcome;
        }
    }
    // Every scan ran over budget; answer exactly from the last index.
    return bank.back().query(q);
}

void LshIndex::save(std::ostream& out) const {
    detail::Writer w(out);
    w.bytes({reinterpret_cast<const uint8_t*>(kMagic), 4});
    w.u16(kFormatVersion);
    w.u64(params_.n);
    w.u64(params_.d);
    w.u64(params_.r);
    w.f64(params_.eps);
    w.f64(params_.p);
    w.f64(params_.q_near);
    w.f64(params_.delta_fail);
    w.u64(params_.t);
    w.u64(params_.L);
    w.u64(seed_);
    for (const ProjectionSeq& s : seqs_) {
        w.u32(s.dim);
        w.u32(static_cast<uint32_t>(s.indices.size()));
        for (uint32_t idx : s.indices) {
            w.u32(idx + 1);  // stored 1-based
        }
    }
    detail::write_points_block(w, points_, params_.d);
    for (const auto& entries : tables_) {
        // Count bucket runs, then emit them.
        uint32_t buckets = 0;
        for (size_t k = 0; k < entries.size(); ++k) {
            if (k == 0 || entries[k].fp != entries[k - 1].fp) {
                ++buckets;
            }
        }
        w.u32(buckets);
        size_t k = 0;
        while (k < entries.size()) {
            size_t end = k + 1;
            while (end < entries.size() && entries[end].fp == entries[k].fp) {
                ++end;
            }
            w.u64(entries[k].fp.lo);
            w.u64(entries[k].fp.hi);
            w.u32(static_cast<uint32_t>(end - k));
            for (size_t m = k; m < end; ++m) {
                w.u32(entries[m].id);
            }
            k = end;
        }
    }
}

LshIndex LshIndex::restore(std::istream& in) {
    detail::Reader r(in);
    r.expect_magic(kMagic, 4, "LSH1 snapshot");
    const uint64_t version_offset = r.offset();
    const uint16_t version = r.u16();
    if (version != kFormatVersion) {
        throw VersionError("unsupported snapshot version " + std::to_string(version),
                           version_offset);
    }

    LshIndex ix;
    IndexParams& p = ix.params_;
    p.n = r.u64();
    const uint64_t d64 = r.u64();
    const uint64_t r64 = r.u64();
    if (d64 > UINT32_MAX || r64 > UINT32_MAX) {
        throw FormatError("dimension or radius out of range", r.offset());
    }
    p.d = static_cast<uint32_t>(d64);
    p.r = static_cast<uint32_t>(r64);
    p.eps = r.f64();
    p.p = r.f64();
    p.q_near = r.f64();
    p.delta_fail = r.f64();
    p.t = r.u64();
    p.L = r.u64();
    ix.seed_ = r.u64();
    p.c = 1.0 / (1.0 + p.eps);
    try {
        p.validate();
    } catch (const ParamError& e) {
        throw FormatError(std::string("invalid params in snapshot: ") + e.what(),
                          6);
    }

    ix.seqs_.reserve(p.L);
    for (uint64_t i = 0; i < p.L; ++i) {
        ProjectionSeq s;
        s.dim = r.u32();
        if (s.dim != p.d) {
            throw FormatError("sequence dimension does not match params",
                              r.offset() - 4);
        }
        const uint32_t count = r.u32();
        s.indices.reserve(count);
        for (uint32_t k = 0; k < count; ++k) {
            const uint32_t idx = r.u32();
            if (idx < 1 || idx > p.d) {
                throw FormatError("sequence index out of range", r.offset() - 4);
            }
            s.indices.push_back(idx - 1);
        }
        s.deduped = true;
        for (size_t k = 1; k < s.indices.size(); ++k) {
            if (s.indices[k] <= s.indices[k - 1]) {
                s.deduped = false;
                break;
            }
        }
        ix.seqs_.push_back(std::move(s));
    }

    uint32_t dim = 0;
    ix.points_ = detail::read_points_block(r, dim);
    if (dim != p.d || ix.points_.size() != p.n) {
        throw FormatError("point block does not match params", r.offset());
    }

    ix.tables_.resize(p.L);
    std::vector<uint8_t> seen(ix.points_.size());
    for (uint64_t i = 0; i < p.L; ++i) {
        auto& entries = ix.tables_[i];
        entries.reserve(ix.points_.size());
        std::fill(seen.begin(), seen.end(), 0);
        const uint32_t buckets = r.u32();
        for (uint32_t b = 0; b < buckets; ++b) {
            Fingerprint fp;
            fp.lo = r.u64();
            fp.hi = r.u64();
            const uint32_t members = r.u32();
            if (members == 0) {
                throw FormatError("empty bucket in table " + std::to_string(i),
                                  r.offset() - 4);
            }
            for (uint32_t m = 0; m < members; ++m) {
                const uint32_t id = r.u32();
                if (id >= ix.points_.size()) {
                    throw FormatError("point id out of range in table " +
                                          std::to_string(i),
                                      r.offset() - 4);
                }
                if (seen[id]) {
                    throw FormatError("point id repeated in table " +
                                          std::to_string(i),
                                      r.offset() - 4);
                }
                seen[id] = 1;
                entries.push_back(TableEntry{fp, id});
            }
        }
        if (entries.size() != ix.points_.size()) {
            throw FormatError("table " + std::to_string(i) +
                                  " does not cover every point",
                              r.offset());
        }
        std::sort(entries.begin(), entries.end(), entry_less);
    }

    ix.rebuild_masks();
    return ix;
}

void LshIndex::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    save(out);
}

LshIndex LshIndex::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string() + " for reading");
    }
    LshIndex ix = restore(in);
    in.peek();
    if (!in.eof()) {
        throw FormatError("trailing bytes after snapshot",
                          in.tellg() < 0 ? 0 : static_cast<uint64_t>(in.tellg()));
    }
    return ix;
}

}  // namespace bitlsh
