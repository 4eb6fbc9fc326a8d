// Timing comparison between the OpenMP kernels and their single-threaded
// runs: the brute-force witness product (parallel vs serial reference) and
// the blocking reduction's block fan-out. Also checks that thread count does
// not change any result.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmm/blocking.hpp"
#include "bmm/bool_matrix.hpp"
#include "bmm/driver.hpp"
#include "bmm/generate.hpp"

namespace {

double time_ms(const auto& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::cout << "threads available: " << threads << "\n\n";

    {
        const std::uint32_t n = 1024;
        const auto inst = bmm::generate_planted(n, 200000, bmm::PlantMode::bernoulli, 7);
        bmm::EntrySet serial, parallel;
        const double t_serial =
            time_ms([&] { serial = bmm::brute_force_product_serial(inst.a, inst.b); });
        const double t_parallel = time_ms([&] { parallel = bmm::brute_force_product(inst.a, inst.b); });
        std::cout << "brute-force product, n=" << n << ", ell=" << serial.size() << '\n';
        std::cout << "  serial reference: " << t_serial << " ms\n";
        std::cout << "  OpenMP kernel:    " << t_parallel << " ms  (speedup "
                  << t_serial / t_parallel << "x)\n";
        std::cout << "  results equal:    " << (serial == parallel ? "yes" : "NO") << "\n\n";
    }

    {
        const std::uint32_t n = 128;
        const std::uint64_t ell = 2048;
        const auto inst = bmm::generate_planted(n, ell, bmm::PlantMode::rectangles, 11);
        const std::uint32_t r = bmm::theorem1_block_count(n, ell);

        auto run = [&] {
            bmm::SearchConfig cfg(99, 0.0);
            bmm::CostLedger ledger;
            return bmm::reduce_and_multiply(inst.a, inst.b, ell, r, std::nullopt, std::nullopt,
                                            cfg, ledger);
        };

        bmm::EntrySet single, multi;
#ifdef _OPENMP
        omp_set_num_threads(1);
#endif
        const double t_single = time_ms([&] { single = run(); });
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        const double t_multi = time_ms([&] { multi = run(); });
        std::cout << "blocking reduction, n=" << n << ", ell=" << ell << ", r=" << r << '\n';
        std::cout << "  1 thread:  " << t_single << " ms\n";
        std::cout << "  " << threads << " threads: " << t_multi << " ms  (speedup "
                  << t_single / t_multi << "x)\n";
        std::cout << "  results equal: " << (single == multi ? "yes" : "NO") << '\n';
    }
    return 0;
}
