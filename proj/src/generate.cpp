#include "bmm/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace bmm {

namespace {

struct Rectangle {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> cols;
    std::uint32_t witness = 0;
};

// Single-row rectangles with distinct witness columns and pairwise-disjoint
// rows, so areas add exactly to the target: q = clamp(min(16, target),
// ceil(target/n), n) pieces of near-equal width. Feasible for every target
// up to n^2.
PlantedInstance plant_rectangles(std::uint32_t n, std::uint64_t target, std::mt19937_64& rng) {
    PlantedInstance inst{BoolMatrix(n, n), BoolMatrix(n, n), target};
    if (target == 0) return inst;

    std::vector<std::uint32_t> row_pool(n), col_order(n), witness_pool(n);
    std::iota(row_pool.begin(), row_pool.end(), 0u);
    std::iota(col_order.begin(), col_order.end(), 0u);
    std::iota(witness_pool.begin(), witness_pool.end(), 0u);
    std::shuffle(row_pool.begin(), row_pool.end(), rng);
    std::shuffle(col_order.begin(), col_order.end(), rng);
    std::shuffle(witness_pool.begin(), witness_pool.end(), rng);

    const std::uint64_t min_pieces = (target + n - 1) / n;  // widths cannot exceed n
    std::uint64_t pieces = std::min<std::uint64_t>(16, target);
    if (pieces < min_pieces) pieces = min_pieces;
    if (pieces > n) pieces = n;

    std::vector<Rectangle> rects;
    for (std::uint64_t p = 0; p < pieces; ++p) {
        const auto lo = static_cast<std::uint32_t>(p * target / pieces);
        const auto hi = static_cast<std::uint32_t>((p + 1) * target / pieces);
        if (lo == hi) continue;
        Rectangle rect;
        rect.rows.push_back(row_pool[rects.size()]);
        rect.cols.assign(col_order.begin(), col_order.begin() + (hi - lo));
        rect.witness = witness_pool[rects.size()];
        rects.push_back(std::move(rect));
    }

    for (const auto& rect : rects) {
        for (const std::uint32_t i : rect.rows) inst.a.set(i, rect.witness, true);
        for (const std::uint32_t j : rect.cols) inst.b.set(rect.witness, j, true);
    }
    const std::uint64_t measured = count_product_nonzeros(inst.a, inst.b);
    if (measured != target) {
        throw std::logic_error("generate_planted: rectangle plant missed the target count");
    }
    return inst;
}

PlantedInstance plant_bernoulli(std::uint32_t n, std::uint64_t target, std::mt19937_64& rng) {
    // Expected non-zeros of the product with i.i.d. density p on both
    // factors is n^2 * (1 - (1 - p^2)^n); invert by bisection.
    const double cells = static_cast<double>(n) * n;
    const double want = static_cast<double>(target);
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double expected = cells * (1.0 - std::pow(1.0 - mid * mid, n));
        (expected < want ? lo : hi) = mid;
    }
    const double density = 0.5 * (lo + hi);

    PlantedInstance inst{BoolMatrix(n, n), BoolMatrix(n, n), 0};
    std::bernoulli_distribution coin(density);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (coin(rng)) inst.a.set(i, j, true);
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (coin(rng)) inst.b.set(i, j, true);
        }
    }
    inst.true_nonzeros = count_product_nonzeros(inst.a, inst.b);
    return inst;
}

} // namespace

PlantedInstance generate_planted(std::uint32_t n, std::uint64_t target_nonzeros, PlantMode mode,
                                 std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_planted: n must be positive");
    if (target_nonzeros > static_cast<std::uint64_t>(n) * n) {
        throw std::invalid_argument("generate_planted: target exceeds n^2");
    }
    std::mt19937_64 rng(seed);
    return mode == PlantMode::rectangles ? plant_rectangles(n, target_nonzeros, rng)
                                         : plant_bernoulli(n, target_nonzeros, rng);
}

} // namespace bmm
