#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bitlsh/bit_vector.hpp"
#include "bitlsh/fingerprint.hpp"
#include "bitlsh/params.hpp"
#include "bitlsh/projection.hpp"

namespace bitlsh {

enum class QueryKind : uint8_t {
    Found,        ///< a point at distance <= (1+eps)*r was returned
    NoneWithinR,  ///< no point within r exists, up to delta_fail
};

struct Witness {
    uint32_t id = 0;
    uint32_t distance = 0;

    bool operator==(const Witness&) const = default;
};

struct QueryOutcome {
    QueryKind kind = QueryKind::NoneWithinR;
    std::optional<Witness> witness;     ///< present iff kind == Found
    uint64_t candidates_scanned = 0;    ///< (point, table) hits examined
    uint64_t tables_probed = 0;

    bool operator==(const QueryOutcome&) const = default;
};

struct BudgetedOutcome {
    QueryOutcome outcome;
    bool aborted = false;  ///< scan stopped because it exceeded the budget
};

struct TableEntry {
    Fingerprint fp;
    uint32_t id = 0;
};

/// The LSH data structure: L tables of points bucketed by the fingerprint of
/// their projection under L independently drawn coordinate sequences.
/// Immutable after build; concurrent queries are safe.
class LshIndex {
public:
    /// Draws params.L deduplicated sequences from the seed and hashes every
    /// point into every table. Deterministic given (points order, params,
    /// seed); `threads` only spreads table construction, it cannot change
    /// the result. threads == 0 means hardware concurrency.
    static LshIndex build(std::vector<BitVector> points, const IndexParams& params,
                          uint64_t seed, unsigned threads = 0);

    /// Probes tables in order, verifies each colliding candidate's true
    /// Hamming distance, and returns the first point at distance
    /// <= (1+eps)*r; NoneWithinR after all tables otherwise. A Found witness
    /// always satisfies the distance bound.
    QueryOutcome query(const BitVector& q) const;

    /// Same scan, but gives up once candidates_scanned exceeds
    /// max_candidates. An abort can only lose time guarantees, not return a
    /// wrong witness.
    BudgetedOutcome query_budgeted(const BitVector& q, double max_candidates) const;

    /// Snapshot ("LSH1" format) and its inverse. A restored index answers
    /// every query identically.
    void save(std::ostream& out) const;
    static LshIndex restore(std::istream& in);
    void save_file(const std::filesystem::path& path) const;
    static LshIndex load_file(const std::filesystem::path& path);

    const IndexParams& params() const noexcept { return params_; }
    uint64_t seed() const noexcept { return seed_; }
    const std::vector<BitVector>& points() const noexcept { return points_; }
    const std::vector<ProjectionSeq>& sequences() const noexcept { return seqs_; }

    size_t table_count() const noexcept { return tables_.size(); }
    /// Entries of one table, sorted by (fingerprint, id).
    std::span<const TableEntry> table(size_t i) const { return tables_.at(i); }

private:
    LshIndex() = default;

    void build_tables(unsigned threads);
    void rebuild_masks();

    IndexParams params_;
    uint64_t seed_ = 0;
    std::vector<BitVector> points_;
    std::vector<ProjectionSeq> seqs_;
    std::vector<BitVector> masks_;  // derived from seqs_, not serialized
    std::vector<std::vector<TableEntry>> tables_;
};

/// Query with a high-probability time bound: runs a budgeted scan on each
/// index of the bank in turn (budget = budget_factor * L candidates) and
/// returns the first outcome that ran to completion. If every index aborts,
/// falls back to an unbudgeted scan of the last one. All indexes must share
/// params; seeds should differ.
QueryOutcome query_hp(std::span<const LshIndex> bank, const BitVector& q,
                      double budget_factor);

}  // namespace bitlsh
