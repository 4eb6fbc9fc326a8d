// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#include "bmm/blocking.hpp"
#include "bmm/bool_matrix.hpp"
#include "bmm/collision_store.hpp"
#include "bmm/driver.hpp"
#include "bmm/generate.hpp"

using namespace bmm;

namespace {

int failures = 0;
bool counting_bound_violated = false;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "CRITERION " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — " << detail
              << std::endl;
    if (!pass) ++failures;
}

double timed_seconds(const auto& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool witnesses_valid(const EntrySet& es, const BoolMatrix& a, const BoolMatrix& b) {
    for (const auto& [key, wit] : es.items()) {
        if (!a.get(key.first, wit) || !b.get(wit, key.second)) return false;
    }
    return true;
}

double ls_slope(const std::vector<std::pair<double, double>>& pts) {
    double xm = 0, ym = 0;
    for (const auto& [x, y] : pts) {
        xm += x;
        ym += y;
    }
    xm /= pts.size();
    ym /= pts.size();
    double num = 0, den = 0;
    for (const auto& [x, y] : pts) {
        num += (x - xm) * (y - ym);
        den += (x - xm) * (x - xm);
    }
    return num / den;
}

// ---- criterion 1 (and data for 3 and 8) -----------------------------------

struct ExactnessOutcome {
    std::uint64_t instances = 0;
    std::uint64_t runs = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t false_positives = 0;
    double worst_doubling_ratio = 0.0;
};

ExactnessOutcome run_exactness_grid() {
    ExactnessOutcome out;
    const std::vector<std::uint32_t> sizes{8, 16, 32, 64};

    for (const std::uint32_t n : sizes) {
        const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
        const std::vector<std::uint64_t> targets{0,     1,     n / 2,     n,
                                                 2 * n, cells / 4, cells};
        for (const auto gen_mode : {PlantMode::rectangles, PlantMode::bernoulli}) {
            for (const std::uint64_t target : targets) {
                for (std::uint64_t seed_ix = 0; seed_ix < 4; ++seed_ix) {
                    const std::uint64_t seed =
                        derive_seed(0xACC1, n, target * 2 + (gen_mode == PlantMode::bernoulli),
                                    seed_ix);
                    const auto inst = generate_planted(n, target, gen_mode, seed);
                    const EntrySet truth = brute_force_product(inst.a, inst.b);
                    const std::uint64_t ell = truth.size();
                    ++out.instances;

                    auto check_exact = [&](const EntrySet& es) {
                        ++out.runs;
                        if (!es.keys_equal(truth) || !witnesses_valid(es, inst.a, inst.b)) {
                            ++out.mismatches;
                        }
                    };
                    auto check_sound = [&](const EntrySet& es) {
                        ++out.runs;
                        if (!es.keys_subset_of(truth) || !witnesses_valid(es, inst.a, inst.b)) {
                            ++out.false_positives;
                        }
                    };

                    const std::uint64_t direct_cap = std::min<std::uint64_t>(
                        cells, std::max<std::uint64_t>(1, 2 * ell));
                    const std::uint64_t reduce_cap = std::min<std::uint64_t>(
                        cells, std::max<std::uint64_t>(n + 1, 2 * ell));

                    for (const double p_fail : {0.0, 0.2}) {
                        const bool exact = p_fail == 0.0;
                        // auto
                        {
                            SearchConfig cfg(derive_seed(seed, 1), p_fail);
                            CostLedger ledger;
                            const RunReport rep = multiply_auto(inst.a, inst.b, cfg, ledger);
                            exact ? check_exact(rep.entries) : check_sound(rep.entries);
                            if (exact) {
                                // replay the rounds to isolate the final one (criterion 8)
                                SearchConfig replay(cfg.seed, 0.0);
                                CostLedger last;
                                std::uint64_t lambda = cells >= 2 ? 2 : 1;
                                while (lambda < rep.lambda_final) {
                                    CostLedger skip;
                                    multiply_known_lambda(inst.a, inst.b, lambda, replay, skip);
                                    lambda = std::min(lambda * 2, cells);
                                }
                                multiply_known_lambda(inst.a, inst.b, rep.lambda_final, replay,
                                                      last);
                                const double logf = std::max(
                                    1.0, std::log2(static_cast<double>(rep.lambda_final)));
                                const double ratio =
                                    static_cast<double>(ledger.quantum_units) /
                                    (logf * static_cast<double>(std::max<std::uint64_t>(
                                                1, last.quantum_units)));
                                out.worst_doubling_ratio =
                                    std::max(out.worst_doubling_ratio, ratio);
                            }
                        }
                        // direct
                        {
                            SearchConfig cfg(derive_seed(seed, 2), p_fail);
                            CostLedger ledger;
                            const EntrySet es =
                                multiply_direct(inst.a, inst.b, direct_cap, cfg, ledger);
                            exact ? check_exact(es) : check_sound(es);
                        }
                        // reduce
                        {
                            SearchConfig cfg(derive_seed(seed, 3), p_fail);
                            CostLedger ledger;
                            const EntrySet es =
                                multiply_known_lambda(inst.a, inst.b, reduce_cap, cfg, ledger);
                            exact ? check_exact(es) : check_sound(es);
                        }
                        // theorem2 (valid parameterization needs n >= 16 at lambda = n^2)
                        if (n >= 16) {
                            SearchConfig cfg(derive_seed(seed, 4), p_fail);
                            CostLedger ledger;
                            const EntrySet es =
                                theorem2_multiply(inst.a, inst.b, cells, cfg, ledger);
                            exact ? check_exact(es) : check_sound(es);
                        }
                    }
                }
            }
        }
    }
    return out;
}

// ---- criterion 2 -----------------------------------------------------------

struct StoreOutcome {
    bool agree = true;
    std::uint64_t worst_op = 0;
    double cap = 0.0;
};

StoreOutcome run_store_model() {
    StoreOutcome out;
    const std::uint32_t a = 200, b = 200;
    CostLedger ledger;
    CollisionStore store(a, b, ledger);

    std::vector<std::vector<bool>> adj(a, std::vector<bool>(b, true));
    std::vector<std::uint32_t> degree(a, b);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> present;
    for (std::uint32_t u = 0; u < a; ++u)
        for (std::uint32_t v = 0; v < b; ++v) present.emplace_back(u, v);

    const double log_ab = std::log2(static_cast<double>(a) * b) + 1.0;
    out.cap = 2.0 * log_ab * log_ab;  // C = 2
    std::mt19937_64 rng(0xC2);

    for (int step = 0; step < 10000 && out.agree; ++step) {
        const std::uint64_t before = ledger.ds_ops;
        const auto u = static_cast<std::uint32_t>(rng() % a);
        const auto v = static_cast<std::uint32_t>(rng() % b);
        switch (rng() % 6) {
            case 0:
                out.agree = store.get_degree(u) == degree[u];
                break;
            case 1:
                out.agree = store.check_connection(u, v) == adj[u][v];
                break;
            case 2: {
                const auto d = static_cast<std::uint32_t>(rng() % (b + 1));
                std::uint64_t expect = 0;
                for (const auto dg : degree) expect += dg <= d ? 1 : 0;
                out.agree = store.count_with_degree_at_most(d) == expect;
                break;
            }
            case 3: {
                const auto d = static_cast<std::uint32_t>(rng() % (b + 1));
                std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
                for (std::uint32_t x = 0; x < a; ++x)
                    if (degree[x] <= d) keys.emplace_back(degree[x], x);
                if (keys.empty()) break;
                std::sort(keys.begin(), keys.end());
                const std::uint64_t rank = 1 + rng() % keys.size();
                out.agree =
                    store.get_vert_with_degree_at_most(rank, d) == keys[rank - 1].second;
                break;
            }
            case 4: {
                const std::uint64_t missing = b - degree[u];
                if (missing == 0) break;
                std::uint64_t rank = 1 + rng() % missing, seen = 0;
                std::uint32_t expect = 0;
                for (std::uint32_t x = 0; x < b; ++x) {
                    if (!adj[u][x] && ++seen == rank) {
                        expect = x;
                        break;
                    }
                }
                out.agree = store.get_nonneighbor(rank, u) == expect;
                break;
            }
            default: {
                if (present.empty()) break;
                const std::size_t pick = rng() % present.size();
                const auto [ru, rv] = present[pick];
                present[pick] = present.back();
                present.pop_back();
                store.remove_edge(ru, rv);
                adj[ru][rv] = false;
                --degree[ru];
                break;
            }
        }
        out.worst_op = std::max(out.worst_op, ledger.ds_ops - before);
    }
    return out;
}

// ---- criterion 4 -----------------------------------------------------------

double lemma_rate(const BoolMatrix& a, const BoolMatrix& b, std::uint32_t r, int trials,
                  std::uint64_t seed) {
    const EntrySet product = brute_force_product(a, b);
    std::vector<EntrySet::Key> keys;
    for (const auto& [key, wit] : product.items()) {
        (void)wit;
        keys.push_back(key);
    }
    std::mt19937_64 rng(seed);
    int accepted = 0;
    for (int t = 0; t < trials; ++t) {
        const auto& key = keys[rng() % keys.size()];
        if (lemma3_trial(a, b, r, key.first, key.second, rng())) ++accepted;
    }
    return static_cast<double>(accepted) / trials;
}

// ---- scaling helpers -------------------------------------------------------

struct SlopeOutcome {
    double slope = 0.0;
    bool exact = true;
};

SlopeOutcome sparse_scaling() {  // criterion 5
    SlopeOutcome out;
    std::vector<std::pair<double, double>> pts;
    const std::uint32_t n = 512;
    for (const std::uint64_t ell : {2, 8, 32, 128, 512}) {
        for (int trial = 0; trial < 5; ++trial) {
            const std::uint64_t seed = derive_seed(0xC5, n, ell, trial);
            const auto inst = generate_planted(n, ell, PlantMode::rectangles, seed);
            SearchConfig cfg(derive_seed(seed, 1), 0.0);
            CostLedger ledger;
            // lambda just above ell: the run completes its sweep unsaturated,
            // matching the known-bound setting ell <= lambda <= 2*ell
            const EntrySet es = multiply_direct(inst.a, inst.b, ell + 1, cfg, ledger);
            out.exact = out.exact && es.size() == ell;
            pts.emplace_back(std::log(static_cast<double>(ell)),
                             std::log(static_cast<double>(ledger.quantum_units)));
        }
    }
    out.slope = ls_slope(pts);
    return out;
}

SlopeOutcome dense_scaling() {  // criterion 6
    SlopeOutcome out;
    std::vector<std::pair<double, double>> pts;
    const std::uint32_t n = 128;
    for (const std::uint64_t ell : {128, 512, 2048, 8192}) {
        for (int trial = 0; trial < 3; ++trial) {
            const std::uint64_t seed = derive_seed(0xC6, n, ell, trial);
            const auto inst = generate_planted(n, ell, PlantMode::rectangles, seed);
            SearchConfig cfg(derive_seed(seed, 1), 0.0);
            CostLedger ledger;
            const EntrySet es =
                reduce_and_multiply(inst.a, inst.b, ell, theorem1_block_count(n, ell),
                                    std::nullopt, std::nullopt, cfg, ledger);
            out.exact = out.exact && es.size() == ell;
            pts.emplace_back(std::log(static_cast<double>(ell)),
                             std::log(static_cast<double>(ledger.quantum_units)));
        }
    }
    out.slope = ls_slope(pts);
    return out;
}

SlopeOutcome size_scaling() {  // criterion 7
    SlopeOutcome out;
    std::vector<std::pair<double, double>> pts;
    for (const std::uint32_t n : {64, 128, 256, 512}) {
        for (int trial = 0; trial < 3; ++trial) {
            const std::uint64_t seed = derive_seed(0xC7, n, n, trial);
            const auto inst = generate_planted(n, n, PlantMode::rectangles, seed);
            SearchConfig cfg(derive_seed(seed, 1), 0.0);
            CostLedger ledger;
            const EntrySet es = multiply_known_lambda(inst.a, inst.b, n, cfg, ledger);
            out.exact = out.exact && es.size() == n;
            pts.emplace_back(std::log(static_cast<double>(n)),
                             std::log(static_cast<double>(ledger.quantum_units)));
        }
    }
    out.slope = ls_slope(pts);
    return out;
}

// ---- criterion 9 -----------------------------------------------------------

struct RobustnessOutcome {
    int exact = 0;
    int sound = 0;
    int runs = 100;
};

RobustnessOutcome robustness_runs() {
    RobustnessOutcome out;
    const auto inst = generate_planted(64, 256, PlantMode::rectangles, 0xC9);
    const EntrySet truth = brute_force_product(inst.a, inst.b);
    std::vector<int> exact_flags(out.runs, 0), sound_flags(out.runs, 0);

#pragma omp parallel for schedule(dynamic)
    for (int run = 0; run < out.runs; ++run) {
        SearchConfig cfg(derive_seed(0xC9F, run), 0.2);
        CostLedger ledger;
        const EntrySet es = multiply_known_lambda(inst.a, inst.b, 512, cfg, ledger);
        exact_flags[run] = es.keys_equal(truth) ? 1 : 0;
        sound_flags[run] =
            (es.keys_subset_of(truth) && witnesses_valid(es, inst.a, inst.b)) ? 1 : 0;
    }
    for (int run = 0; run < out.runs; ++run) {
        out.exact += exact_flags[run];
        out.sound += sound_flags[run];
    }
    return out;
}

} // namespace

int main() {
    // 1: exactness over the seeded grid, all modes, both generators
    ExactnessOutcome exactness;
    bool grid_threw = false;
    const double t1 = timed_seconds([&] {
        try {
            exactness = run_exactness_grid();
        } catch (const std::logic_error&) {
            grid_threw = true;
            counting_bound_violated = true;
        }
    });
    report(1,
           !grid_threw && exactness.instances >= 200 && exactness.mismatches == 0 &&
               exactness.false_positives == 0,
           std::to_string(exactness.instances) + " instances, " +
               std::to_string(exactness.runs) + " runs, " +
               std::to_string(exactness.mismatches) + " mismatches, " +
               std::to_string(exactness.false_positives) + " false positives (" +
               std::to_string(t1) + " s)");

    // 2: store model-based agreement and per-op cost cap
    StoreOutcome store{};
    const double t2 = timed_seconds([&] { store = run_store_model(); });
    report(2, store.agree && static_cast<double>(store.worst_op) <= store.cap,
           std::string("agreement=") + (store.agree ? "yes" : "no") + ", worst per-op ds_ops " +
               std::to_string(store.worst_op) + " <= " + std::to_string(store.cap) + " (" +
               std::to_string(t2) + " s)");

    // 3: the in-proof counting inequality never fired during criterion 1
    report(3, !counting_bound_violated,
           counting_bound_violated ? "counting bound assertion fired"
                                   : "counting bound assertion never fired");

    // 4: subarray bound at (100, 10, 1000) and the single-row adversary
    double rate_uniform = 0, rate_adversarial = 0;
    const double t4 = timed_seconds([&] {
        const auto inst = generate_planted(100, 1000, PlantMode::bernoulli, 0xC4);
        rate_uniform = lemma_rate(inst.a, inst.b, 10, 2000, 0xC4F);

        BoolMatrix a(100, 100), b(100, 100);
        a.set(0, 0, true);
        for (std::uint32_t j = 0; j < 99; ++j) b.set(0, j, true);
        rate_adversarial = lemma_rate(a, b, 10, 2000, 0xC4FF);
    });
    report(4, rate_uniform >= 0.88 && rate_adversarial >= 0.88,
           "uniform rate " + std::to_string(rate_uniform) + ", single-row rate " +
               std::to_string(rate_adversarial) + " (threshold 0.88, " + std::to_string(t4) +
               " s)");

    // 5: sparse-regime slope at n = 512
    SlopeOutcome sparse{};
    const double t5 = timed_seconds([&] { sparse = sparse_scaling(); });
    report(5, sparse.exact && sparse.slope >= 0.35 && sparse.slope <= 0.65,
           "slope " + std::to_string(sparse.slope) + " in [0.35, 0.65], runs exact=" +
               (sparse.exact ? "yes" : "no") + " (" + std::to_string(t5) + " s)");

    // 6: dense-regime slope at n = 128
    SlopeOutcome dense{};
    const double t6 = timed_seconds([&] { dense = dense_scaling(); });
    report(6, dense.exact && dense.slope >= 0.8 && dense.slope <= 1.2,
           "slope " + std::to_string(dense.slope) + " in [0.8, 1.2], runs exact=" +
               (dense.exact ? "yes" : "no") + " (" + std::to_string(t6) + " s)");

    // 7: n-scaling at ell = n
    SlopeOutcome sized{};
    const double t7 = timed_seconds([&] { sized = size_scaling(); });
    report(7, sized.exact && sized.slope >= 1.3 && sized.slope <= 1.7,
           "slope " + std::to_string(sized.slope) + " in [1.3, 1.7], runs exact=" +
               (sized.exact ? "yes" : "no") + " (" + std::to_string(t7) + " s)");

    // 8: doubling overhead across the criterion-1 auto runs
    report(8, exactness.worst_doubling_ratio <= 4.0 && exactness.worst_doubling_ratio > 0.0,
           "worst cumulative / (log2(lambda) * final round) = " +
               std::to_string(exactness.worst_doubling_ratio) + " <= 4");

    // 9: repetition robustness under p_fail = 0.2
    RobustnessOutcome robust{};
    const double t9 = timed_seconds([&] { robust = robustness_runs(); });
    report(9, robust.exact >= 97 && robust.sound == robust.runs,
           std::to_string(robust.exact) + "/100 exact, " + std::to_string(robust.sound) +
               "/100 sound (" + std::to_string(t9) + " s)");

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
