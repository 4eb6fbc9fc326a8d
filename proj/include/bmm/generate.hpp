#pragma once

#include <cstdint>

#include "bmm/bool_matrix.hpp"

namespace bmm {

enum class PlantMode { rectangles, bernoulli };

struct PlantedInstance {
    BoolMatrix a;
    BoolMatrix b;
    std::uint64_t true_nonzeros = 0;
};

/// Deterministic (per seed) n x n instance whose product has a controlled
/// number of non-zero entries.
///
/// rectangles: plants row-disjoint rectangles R_t x S_t, each on its own
/// witness column, so the product's non-zero count is exactly the target.
/// bernoulli: solves the i.i.d. entry density whose expected non-zero count
/// matches the target, draws the factors, and reports the measured count.
///
/// target_nonzeros must be at most n^2.
PlantedInstance generate_planted(std::uint32_t n, std::uint64_t target_nonzeros, PlantMode mode,
                                 std::uint64_t seed);

} // namespace bmm
