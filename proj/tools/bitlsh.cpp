// bitlsh: batch experiments for near-neighbor search on binary vectors.
//
// Subcommands: gen, build, query, verify, bench. All output is CSV; every
// command is deterministic under --seed except wall-clock columns.
// Exit codes: 0 success, 1 validation error, 2 statistical-check failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bitlsh/dataset.hpp"
#include "bitlsh/error.hpp"
#include "bitlsh/index.hpp"
#include "bitlsh/random.hpp"
#include "bitlsh/stats.hpp"

using namespace bitlsh;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Output sink honoring "-" as stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) {
                throw Error("cannot open " + path + " for writing");
            }
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Dataset read_dataset_arg(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        std::string contents = buf.str();
        if (contents.rfind("HBD1", 0) == 0) {
            std::istringstream in(contents, std::ios::binary);
            return read_bin(in);
        }
        std::istringstream in(contents);
        return read_text(in);
    }
    return read_auto(path);
}

struct GenArgs {
    uint64_t n = 0;
    uint32_t d = 0;
    uint32_t r = 0;
    uint32_t plant = 0;
    uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const PlantedInstance inst = gen_planted(a.n, a.d, a.r, a.plant, a.seed);
    write_bin(std::filesystem::path(a.out), inst.data);

    Dataset query;
    query.dim = a.d;
    query.vectors.push_back(inst.query);
    write_bin(std::filesystem::path(a.out + ".query"), query);

    std::cout << "planted_id\n" << inst.planted_id << "\n";
    return 0;
}

struct BuildArgs {
    std::string input;
    uint32_t r = 0;
    double eps = 0.0;
    double delta = 0.0;  // 0 means default 1/n
    uint64_t seed = 0;
    std::string out;
};

int run_build(const BuildArgs& a) {
    const Dataset ds = read_dataset_arg(a.input);
    const uint64_t n = ds.size();
    const double delta = a.delta > 0.0 ? a.delta : 1.0 / static_cast<double>(n);
    const IndexParams params = derive_params(n, ds.dim, a.r, a.eps, delta);
    const LshIndex ix = LshIndex::build(ds.vectors, params, a.seed);
    ix.save_file(a.out);

    std::cout << "c,p,t,L,q_near\n"
              << fmt(params.c) << ',' << fmt(params.p) << ',' << params.t << ','
              << params.L << ',' << fmt(params.q_near) << "\n";
    return 0;
}

struct QueryArgs {
    std::vector<std::string> index_paths;
    std::string queries;
    double budget = 2.0;
    bool budget_set = false;
    uint64_t bank = 1;
    std::string out = "-";
};

int run_query(const QueryArgs& a) {
    std::vector<LshIndex> bank;
    bank.reserve(a.index_paths.size());
    for (const std::string& path : a.index_paths) {
        bank.push_back(LshIndex::load_file(path));
    }
    // Grow the bank to the requested size by rebuilding the stored point set
    // under derived seeds; members stay parameter-identical.
    while (bank.size() < a.bank) {
        const LshIndex& base = bank.front();
        bank.push_back(LshIndex::build(base.points(), base.params(),
                                       mix64(base.seed() + bank.size())));
    }
    const bool use_hp = bank.size() > 1 || a.budget_set;

    const Dataset queries = read_dataset_arg(a.queries);
    Sink sink(a.out);
    sink.out() << "query_id,kind,witness_id,distance,candidates_scanned,"
                  "tables_probed,wall_micros\n";

    for (size_t qi = 0; qi < queries.vectors.size(); ++qi) {
        const BitVector& q = queries.vectors[qi];
        try {
            const auto start = std::chrono::steady_clock::now();
            const QueryOutcome out =
                use_hp ? query_hp(bank, q, a.budget) : bank.front().query(q);
            const auto micros =
                std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
            sink.out() << qi << ',';
            if (out.kind == QueryKind::Found) {
                sink.out() << "found," << out.witness->id << ','
                           << out.witness->distance << ',';
            } else {
                sink.out() << "none,,,";
            }
            sink.out() << out.candidates_scanned << ',' << out.tables_probed
                       << ',' << micros << "\n";
        } catch (const ParamError& e) {
            // Row-level problem (e.g. dimension mismatch); keep going.
            sink.out() << qi << ",error,,,,,\n";
            std::cerr << "bitlsh: query " << qi << ": " << e.what() << "\n";
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    uint64_t trials = 0;  // 0 means the suite default
    uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    if (a.trials != 0 && a.trials < 100) {
        throw ParamError("verify: --trials must be at least 100");
    }
    RandomStream rng(a.seed);
    stats::EstimateReport rep;
    if (a.suite == "lemma1") {
        // Miss probability of a |K|=r set at the exact real t = c ln n:
        // n=16, eps=1, r=4 collapses to n^-c = 1/4.
        const uint64_t trials = a.trials ? a.trials : 100000;
        const double p = -std::expm1(-1.0 / 4.0);
        const double t = 0.5 * std::log(16.0);
        rep = stats::estimate_miss_prob(16, p, t, 4, trials, rng);
    } else if (a.suite == "lemma2a") {
        const uint64_t trials = a.trials ? a.trials : 1000;
        rep = stats::recall_experiment(1024, 128, 8, 1.0, 1.0 / 1024, 8, trials,
                                       rng);
    } else if (a.suite == "lemma2b") {
        const uint64_t trials = a.trials ? a.trials : 500;
        const double t = 0.5 * std::log(256.0);
        rep = stats::estimate_far_candidates(256, 128, 4, 1.0, 1.0 / 256, t, 8,
                                             trials, rng);
    } else {
        throw ParamError("verify: unknown suite '" + a.suite +
                         "' (expected lemma1, lemma2a or lemma2b)");
    }
    std::cout << stats::EstimateReport::csv_header() << "\n"
              << rep.csv_row() << "\n";
    return std::abs(rep.z) <= 3.0 ? 0 : 2;
}

struct BenchArgs {
    std::string input;
    uint32_t r = 0;
    double eps = 0.0;
    uint64_t queries = 100;
    uint64_t repeats = 1;
    uint64_t seed = 0;
    std::string out = "-";
};

int run_bench(const BenchArgs& a) {
    const Dataset ds = read_dataset_arg(a.input);
    const uint64_t n = ds.size();

    std::vector<uint64_t> prefixes{(n + 3) / 4, (n + 1) / 2, n};
    prefixes.erase(std::unique(prefixes.begin(), prefixes.end()),
                   prefixes.end());

    Sink sink(a.out);
    sink.out() << "repeat,n,t,L,queries,mean_candidates,mean_query_micros\n";

    RandomStream root(a.seed);
    for (uint64_t rep = 0; rep < a.repeats; ++rep) {
        for (size_t pi = 0; pi < prefixes.size(); ++pi) {
            const uint64_t m = prefixes[pi];
            const IndexParams params = derive_params(
                m, ds.dim, a.r, a.eps, 1.0 / static_cast<double>(m));
            std::vector<BitVector> points(ds.vectors.begin(),
                                          ds.vectors.begin() +
                                              static_cast<ptrdiff_t>(m));
            const LshIndex ix = LshIndex::build(
                std::move(points), params, root.split(pi).seed());

            RandomStream qrng = root.split(1000 + pi);
            double cand_sum = 0.0;
            double micros_sum = 0.0;
            for (uint64_t k = 0; k < a.queries; ++k) {
                const BitVector q = BitVector::random(ds.dim, qrng);
                const auto start = std::chrono::steady_clock::now();
                const QueryOutcome out = ix.query(q);
                micros_sum +=
                    std::chrono::duration<double, std::micro>(
                        std::chrono::steady_clock::now() - start)
                        .count();
                cand_sum += static_cast<double>(out.candidates_scanned);
            }
            const double qd = static_cast<double>(a.queries);
            sink.out() << (rep + 1) << ',' << m << ',' << params.t << ','
                       << params.L << ',' << a.queries << ','
                       << fmt(cand_sum / qd) << ',' << fmt(micros_sum / qd)
                       << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bit-sampling LSH for near-neighbor search on binary vectors "
                 "under the Hamming metric"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand(
        "gen", "Generate a planted dataset (binary HBD1) plus a sidecar "
               ".query file; prints the planted id");
    cmd_gen->add_option("--n", gen.n, "Number of points (>= 2)")->required();
    cmd_gen->add_option("--d", gen.d, "Dimension")->required();
    cmd_gen->add_option("--r", gen.r, "Near radius (far points are rejected "
                                      "within max(r, plant))")
        ->required();
    cmd_gen->add_option("--plant", gen.plant,
                        "Exact Hamming distance of the planted point")
        ->required();
    cmd_gen->add_option("--seed", gen.seed, "RNG seed (default 0)");
    cmd_gen->add_option("--out", gen.out, "Output dataset path")->required();

    BuildArgs build;
    auto* cmd_build = app.add_subcommand(
        "build", "Derive parameters, build the index and write an LSH1 "
                 "snapshot; prints c,p,t,L,q_near as CSV");
    cmd_build->add_option("--input", build.input,
                          "Dataset path (HBD1 or text; '-' for stdin)")
        ->required();
    cmd_build->add_option("--r", build.r, "Near radius (>= 1)")->required();
    cmd_build->add_option("--eps", build.eps, "Approximation slack (> 0)")
        ->required();
    cmd_build->add_option("--delta", build.delta,
                          "Failure probability (default 1/n)");
    cmd_build->add_option("--seed", build.seed, "RNG seed (default 0)");
    cmd_build->add_option("--out", build.out, "Snapshot output path")->required();

    QueryArgs query;
    auto* cmd_query = app.add_subcommand(
        "query", "Answer queries from a snapshot; one CSV row per query: "
                 "query_id,kind,witness_id,distance,candidates_scanned,"
                 "tables_probed,wall_micros (kind: found|none|error)");
    cmd_query->add_option("--index", query.index_paths,
                          "Snapshot path(s); repeat to supply a bank")
        ->required();
    cmd_query->add_option("--queries", query.queries,
                          "Query vectors (HBD1 or text; '-' for stdin)")
        ->required();
    auto* budget_opt = cmd_query->add_option(
        "--budget", query.budget,
        "Per-index candidate budget factor for restarted queries "
        "(budget = factor * L, default 2.0)");
    cmd_query->add_option("--bank", query.bank,
                          "Bank size; missing members are rebuilt from the "
                          "first snapshot under derived seeds");
    cmd_query->add_option("--out", query.out, "CSV output path ('-' = stdout)");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Monte Carlo check of a collision-probability property; "
                  "prints an estimate report as CSV and exits 0 iff |z| <= 3");
    cmd_verify
        ->add_option("--suite", verify.suite,
                     "Property suite: lemma1 (miss probability), lemma2a "
                     "(planted recall), lemma2b (far-candidate totals)")
        ->required();
    cmd_verify->add_option("--trials", verify.trials,
                           "Trial count (>= 100; default per suite)");
    cmd_verify->add_option("--seed", verify.seed, "RNG seed (default 0)");

    BenchArgs bench;
    auto* cmd_bench = app.add_subcommand(
        "bench", "Sweep dataset prefixes (n/4, n/2, n) and report per-query "
                 "candidate and time means as CSV; diagnostic only");
    cmd_bench->add_option("--input", bench.input, "Dataset path")->required();
    cmd_bench->add_option("--r", bench.r, "Near radius")->required();
    cmd_bench->add_option("--eps", bench.eps, "Approximation slack")->required();
    cmd_bench->add_option("--queries", bench.queries,
                          "Random queries per prefix (default 100)");
    cmd_bench->add_option("--repeats", bench.repeats,
                          "Repeat count (default 1)");
    cmd_bench->add_option("--seed", bench.seed, "RNG seed (default 0)");
    cmd_bench->add_option("--out", bench.out, "CSV output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_gen)) {
            return run_gen(gen);
        }
        if (app.got_subcommand(cmd_build)) {
            return run_build(build);
        }
        if (app.got_subcommand(cmd_query)) {
            query.budget_set = budget_opt->count() > 0;
            return run_query(query);
        }
        if (app.got_subcommand(cmd_verify)) {
            return run_verify(verify);
        }
        if (app.got_subcommand(cmd_bench)) {
            return run_bench(bench);
        }
    } catch (const Error& e) {
        std::cerr << "bitlsh: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "bitlsh: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
