// Command-line front end: instance generation, multiplication runs with cost
// ledgers, scaling benchmarks with CSV output, and Monte-Carlo validation of
// the subarray bound.
//
// Exit codes: 0 success, 2 input-file parse error, 3 parameter error,
// 4 internal assertion failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmm/bench_record.hpp"
#include "bmm/blocking.hpp"
#include "bmm/bmm1_io.hpp"
#include "bmm/bool_matrix.hpp"
#include "bmm/driver.hpp"
#include "bmm/generate.hpp"
#include "bmm/search.hpp"

namespace {

struct GenOptions {
    std::uint32_t n = 0;
    std::uint64_t ell = 0;
    std::string mode = "rectangles";
    std::uint64_t seed = 0;
    std::string out_a;
    std::string out_b;
};

struct MultiplyOptions {
    std::string path_a;
    std::string path_b;
    std::string mode = "auto";
    std::optional<std::uint64_t> lambda;
    std::uint64_t seed = 0;
    double p_fail = 0.0;
    std::string csv;
};

struct BenchOptions {
    std::vector<std::uint32_t> n_list;
    std::vector<std::uint64_t> ell_list;
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
    std::string out;
};

struct LemmaOptions {
    std::uint32_t n = 0;
    std::uint32_t r = 1;
    std::uint64_t ell = 0;
    std::uint32_t trials = 1000;
    std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
    bmm::PlantMode mode;
    if (opt.mode == "rectangles") {
        mode = bmm::PlantMode::rectangles;
    } else if (opt.mode == "bernoulli") {
        mode = bmm::PlantMode::bernoulli;
    } else {
        throw std::invalid_argument("--mode must be rectangles or bernoulli");
    }
    const auto inst = bmm::generate_planted(opt.n, opt.ell, mode, opt.seed);
    bmm::write_bmm1(inst.a, opt.out_a);
    bmm::write_bmm1(inst.b, opt.out_b);
    std::cout << "true_ell=" << inst.true_nonzeros << '\n';
    return 0;
}

void print_run(const bmm::EntrySet& entries, const bmm::CostLedger& ledger,
               const std::string& mode, std::uint64_t lambda_final) {
    for (const auto& [key, wit] : entries.items()) {
        std::cout << (key.first + 1) << ' ' << (key.second + 1) << ' ' << (wit + 1) << '\n';
    }
    std::cout << "# mode=" << mode << " entries=" << entries.size()
              << " lambda_final=" << lambda_final << '\n';
    std::cout << "# quantum_units=" << ledger.quantum_units
              << " oracle_queries_A=" << ledger.oracle_queries_a
              << " oracle_queries_B=" << ledger.oracle_queries_b << " ds_ops=" << ledger.ds_ops
              << " classical_ops=" << ledger.classical_ops << '\n';
}

int run_multiply(const MultiplyOptions& opt) {
    const bmm::BoolMatrix a = bmm::read_bmm1(opt.path_a);
    const bmm::BoolMatrix b = bmm::read_bmm1(opt.path_b);
    if (opt.p_fail < 0.0 || opt.p_fail > 1.0) {
        throw std::invalid_argument("--p-fail must be in [0, 1]");
    }

    bmm::SearchConfig cfg(opt.seed, opt.p_fail);
    bmm::CostLedger ledger;
    bmm::EntrySet entries;
    std::string mode = opt.mode;
    std::uint64_t lambda_final = 0;

    const auto t0 = std::chrono::steady_clock::now();
    if (opt.mode == "auto") {
        if (opt.lambda) throw std::invalid_argument("auto mode derives lambda; drop --lambda");
        const bmm::RunReport report = bmm::multiply_auto(a, b, cfg, ledger);
        entries = report.entries;
        mode = bmm::to_string(report.mode);
        lambda_final = report.lambda_final;
    } else {
        if (!opt.lambda) throw std::invalid_argument("--lambda is required for mode " + opt.mode);
        lambda_final = *opt.lambda;
        if (opt.mode == "direct") {
            entries = bmm::multiply_direct(a, b, lambda_final, cfg, ledger);
        } else if (opt.mode == "reduce") {
            const std::uint32_t n = a.rows();
            if (a.cols() != n || b.rows() != n || b.cols() != n) {
                throw std::invalid_argument("reduce mode needs square factors of equal size");
            }
            if (lambda_final < n) {
                throw std::invalid_argument("reduce mode needs --lambda >= n");
            }
            entries = bmm::reduce_and_multiply(a, b, lambda_final,
                                               bmm::theorem1_block_count(n, lambda_final),
                                               std::nullopt, std::nullopt, cfg, ledger);
        } else if (opt.mode == "theorem2") {
            entries = bmm::theorem2_multiply(a, b, lambda_final, cfg, ledger);
        } else {
            throw std::invalid_argument("--mode must be auto, direct, reduce or theorem2");
        }
    }
    const auto t1 = std::chrono::steady_clock::now();

    print_run(entries, ledger, mode, lambda_final);

    if (!opt.csv.empty()) {
        bmm::BenchRecord record;
        record.n = a.rows();
        record.ell = entries.size();
        record.lambda_final = lambda_final;
        record.mode = mode;
        record.quantum_units = ledger.quantum_units;
        record.oracle_queries_a = ledger.oracle_queries_a;
        record.oracle_queries_b = ledger.oracle_queries_b;
        record.ds_ops = ledger.ds_ops;
        record.classical_ops = ledger.classical_ops;
        record.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        record.seed = opt.seed;
        bmm::append_csv(opt.csv, {&record, 1});
    }
    return 0;
}

int run_bench(const BenchOptions& opt) {
    if (opt.n_list.empty() || opt.ell_list.empty()) {
        throw std::invalid_argument("--n-list and --ell-list must be non-empty");
    }
    if (opt.trials == 0) throw std::invalid_argument("--trials must be positive");

    struct Job {
        std::uint32_t n;
        std::uint64_t ell;
        std::uint32_t trial;
    };
    std::vector<Job> jobs;
    for (const auto n : opt.n_list) {
        for (const auto ell : opt.ell_list) {
            if (ell > static_cast<std::uint64_t>(n) * n) {
                throw std::invalid_argument("ell " + std::to_string(ell) + " exceeds n^2 for n = " +
                                            std::to_string(n));
            }
            for (std::uint32_t trial = 0; trial < opt.trials; ++trial) jobs.push_back({n, ell, trial});
        }
    }

    // One record per job, filled in parallel, written in grid order.
    std::vector<bmm::BenchRecord> records(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
        const Job& job = jobs[idx];
        const std::uint64_t instance_seed = bmm::derive_seed(opt.seed, job.n, job.ell, job.trial);
        const auto inst =
            bmm::generate_planted(job.n, job.ell, bmm::PlantMode::rectangles, instance_seed);
        const std::uint64_t lambda = inst.true_nonzeros > 0 ? inst.true_nonzeros : 1;

        bmm::SearchConfig cfg(bmm::derive_seed(instance_seed, 0x6d756c7469ULL), 0.0);
        bmm::CostLedger ledger;
        const auto t0 = std::chrono::steady_clock::now();
        const bmm::EntrySet entries = bmm::multiply_known_lambda(inst.a, inst.b, lambda, cfg, ledger);
        const auto t1 = std::chrono::steady_clock::now();

        bmm::BenchRecord& record = records[idx];
        record.n = job.n;
        record.ell = inst.true_nonzeros;
        record.lambda_final = lambda;
        record.mode = bmm::to_string(bmm::resolve_mode(job.n, lambda));
        record.quantum_units = ledger.quantum_units;
        record.oracle_queries_a = ledger.oracle_queries_a;
        record.oracle_queries_b = ledger.oracle_queries_b;
        record.ds_ops = ledger.ds_ops;
        record.classical_ops = ledger.classical_ops;
        record.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        record.seed = instance_seed;
        if (entries.size() != inst.true_nonzeros) {
            throw std::logic_error("bench: run missed entries on a planted instance");
        }
    }

    bmm::append_csv(opt.out, records);
    std::cout << "wrote " << records.size() << " rows to " << opt.out << '\n';
    return 0;
}

int run_validate_lemma(const LemmaOptions& opt) {
    if (opt.trials == 0) throw std::invalid_argument("--trials must be positive");
    const auto inst =
        bmm::generate_planted(opt.n, opt.ell, bmm::PlantMode::bernoulli, opt.seed);
    const bmm::EntrySet product = bmm::brute_force_product(inst.a, inst.b);
    if (product.empty()) {
        throw std::invalid_argument("generated product has no non-zero entry to test");
    }
    std::vector<bmm::EntrySet::Key> keys;
    keys.reserve(product.size());
    for (const auto& [key, wit] : product.items()) {
        (void)wit;
        keys.push_back(key);
    }

    std::mt19937_64 rng(bmm::derive_seed(opt.seed, 0x6c656d6dULL));
    std::uint64_t accepted = 0;
    for (std::uint32_t t = 0; t < opt.trials; ++t) {
        const auto& key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
        if (bmm::lemma3_trial(inst.a, inst.b, opt.r, key.first, key.second, rng())) ++accepted;
    }
    const double frequency = static_cast<double>(accepted) / opt.trials;
    const double threshold = 0.9 - 3.0 * std::sqrt(0.09 / opt.trials);
    std::cout << "n=" << opt.n << " r=" << opt.r << " true_ell=" << inst.true_nonzeros
              << " trials=" << opt.trials << " frequency=" << frequency
              << " threshold=" << threshold << (frequency >= threshold ? " PASS" : " FAIL")
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Output-sensitive Boolean matrix multiplication with quantum-search cost"
                 " accounting"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a planted instance as two BMM1 files");
    cmd_gen->add_option("--n", gen.n, "Matrix size")->required();
    cmd_gen->add_option("--ell", gen.ell, "Target non-zero count of the product")->required();
    cmd_gen->add_option("--mode", gen.mode, "rectangles or bernoulli");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("--out-a", gen.out_a, "Output path for the left factor")->required();
    cmd_gen->add_option("--out-b", gen.out_b, "Output path for the right factor")->required();

    MultiplyOptions mul;
    auto* cmd_mul = app.add_subcommand("multiply", "Multiply two BMM1 matrices with witnesses");
    cmd_mul->add_option("--a", mul.path_a, "Left factor file")->required();
    cmd_mul->add_option("--b", mul.path_b, "Right factor file")->required();
    cmd_mul->add_option("--mode", mul.mode, "auto, direct, reduce or theorem2");
    cmd_mul->add_option("--lambda", mul.lambda, "Non-zero cap (required unless mode=auto)");
    cmd_mul->add_option("--seed", mul.seed, "RNG seed");
    cmd_mul->add_option("--p-fail", mul.p_fail, "Injected per-search failure probability");
    cmd_mul->add_option("--csv", mul.csv, "Append one CSV record to this file");

    BenchOptions bench;
    auto* cmd_bench = app.add_subcommand("bench", "Cost-scaling sweep over planted instances");
    cmd_bench->add_option("--n-list", bench.n_list, "Comma-separated matrix sizes")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--ell-list", bench.ell_list, "Comma-separated non-zero targets")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--trials", bench.trials, "Trials per (n, ell) point");
    cmd_bench->add_option("--seed", bench.seed, "Base RNG seed");
    cmd_bench->add_option("--out", bench.out, "CSV output path")->required();

    LemmaOptions lemma;
    auto* cmd_lemma = app.add_subcommand("validate-lemma",
                                         "Monte-Carlo check of the subarray occupancy bound");
    cmd_lemma->add_option("--n", lemma.n, "Matrix size")->required();
    cmd_lemma->add_option("--r", lemma.r, "Blocks per axis")->required();
    cmd_lemma->add_option("--ell", lemma.ell, "Target non-zero count")->required();
    cmd_lemma->add_option("--trials", lemma.trials, "Number of trials");
    cmd_lemma->add_option("--seed", lemma.seed, "RNG seed");

    try {
        app.parse(argc, argv);
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_mul->parsed()) return run_multiply(mul);
        if (cmd_bench->parsed()) return run_bench(bench);
        if (cmd_lemma->parsed()) return run_validate_lemma(lemma);
        return 3;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    } catch (const bmm::Bmm1ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
