#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bmm/bool_matrix.hpp"
#include "bmm/cost_ledger.hpp"
#include "bmm/entry_set.hpp"
#include "bmm/search.hpp"

namespace bmm {

enum class MultiplyMode { direct, reduce, theorem2 };

std::string to_string(MultiplyMode mode);

struct ReduceInfo {
    std::uint32_t r = 1;
    double delta = 0.0;
    std::uint32_t repetitions = 1;
};

/// Outcome of one top-level multiplication.
struct RunReport {
    EntrySet entries;
    CostLedger ledger;
    std::uint64_t lambda_final = 0;
    MultiplyMode mode = MultiplyMode::direct;
    std::optional<ReduceInfo> params;
    std::uint64_t seed = 0;
};

/// Smallest r with r^2 * n >= lambda, i.e. ceil(sqrt(lambda / n)).
std::uint32_t theorem1_block_count(std::uint32_t n, std::uint64_t lambda);

/// min(ceil(c * n / sqrt(lambda)), n).
std::uint32_t theorem2_block_count(std::uint32_t n, std::uint64_t lambda, std::uint32_t c);

/// Default constant for the theorem-2 reduction's block count.
inline constexpr std::uint32_t kTheorem2Constant = 15;

/// Capped multiplication without any blocking: wraps the factors in counted
/// identity views and runs the collision sweep directly. Valid for any
/// rectangular pair with matching inner dimension and any cap.
EntrySet multiply_direct(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                         SearchConfig& cfg, CostLedger& ledger);

/// Multiplication given an upper bound lambda on the product's non-zero
/// count: the collision sweep when lambda <= n, otherwise the randomized
/// blocking reduction with r = ceil(sqrt(lambda/n)) blocks per axis.
/// Requires square factors and 1 <= lambda <= n^2.
EntrySet multiply_known_lambda(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                               SearchConfig& cfg, CostLedger& ledger);

/// Which route multiply_known_lambda takes, and its reduce parameters.
MultiplyMode resolve_mode(std::uint32_t n, std::uint64_t lambda);
std::optional<ReduceInfo> resolve_reduce_info(std::uint32_t n, std::uint64_t lambda);

/// Multiplication with no prior bound: doubles lambda (2, 4, 8, ...) until a
/// round comes back unsaturated, then stops. The report carries the union of
/// all rounds, the cumulative ledger, and the final round's mode/parameters.
RunReport multiply_auto(const BoolMatrix& a, const BoolMatrix& b, SearchConfig& cfg,
                        CostLedger& ledger);

/// Black-box reduction mode: blocking with r = ceil(c*n/sqrt(lambda)) and a
/// global missing bound of n^2, where each block pair is handed to the
/// lambda-capped multiplier. Requires n <= lambda <= n^2 and that
/// 100n/r + 100n^2/r^2 <= lambda (checked at runtime; violations throw
/// std::invalid_argument naming the constraint).
EntrySet theorem2_multiply(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                           SearchConfig& cfg, CostLedger& ledger);

} // namespace bmm
