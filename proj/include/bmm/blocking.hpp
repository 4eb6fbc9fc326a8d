#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bmm/bool_matrix.hpp"
#include "bmm/cost_ledger.hpp"
#include "bmm/entry_set.hpp"
#include "bmm/oracle.hpp"
#include "bmm/search.hpp"

namespace bmm {

/// Threshold on per-subarray non-zeros for an r x r decomposition of an
/// n x n product with at most missing_bound non-zeros:
///   10 * (L * ceil(n/r)^2 / (n-1)^2 + 2*ceil(n/r) - 1).
/// Requires n >= 2 and 1 <= r <= n.
double delta_bound(std::uint32_t n, std::uint32_t r, std::uint64_t missing_bound);

/// Default repetition count for the randomized reduction: enough rounds that
/// a per-round per-entry miss probability of 1/10 drops below n^-3.
std::uint32_t default_repetitions(std::uint32_t n);

/// One draw of the reduction's randomness: row/column permutations plus the
/// r contiguous blocks per axis. sigma maps original to permuted positions;
/// sigma_inv undoes it (likewise tau for columns).
struct BlockPlan {
    std::uint32_t n = 0;
    std::uint32_t r = 1;
    std::uint64_t missing_bound = 0;
    double delta = 0.0;
    std::vector<std::uint32_t> sigma, sigma_inv;
    std::vector<std::uint32_t> tau, tau_inv;

    static std::uint32_t block_start(std::uint32_t n, std::uint32_t r, std::uint32_t index) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) * n / r);
    }
    std::uint32_t row_start(std::uint32_t s) const { return block_start(n, r, s); }
    std::uint32_t row_size(std::uint32_t s) const { return block_start(n, r, s + 1) - row_start(s); }
    std::uint32_t col_start(std::uint32_t t) const { return block_start(n, r, t); }
    std::uint32_t col_size(std::uint32_t t) const { return block_start(n, r, t + 1) - col_start(t); }
};

BlockPlan make_block_plan(std::uint32_t n, std::uint32_t r, std::uint64_t missing_bound,
                          std::mt19937_64& rng);

/// View of block s of the row-permuted left factor: row_size(s) x n, entry
/// (p, q) reading A[sigma_inv[row_start(s) + p], q] through the handle.
MatrixView block_row_view(const OracleHandle& left, const BlockPlan& plan, std::uint32_t s);

/// View of block t of the column-permuted right factor: n x col_size(t).
MatrixView block_col_view(const OracleHandle& right, const BlockPlan& plan, std::uint32_t t);

/// Classical randomized reduction: `repetitions` rounds of fresh uniform
/// permutations, an r x r block decomposition, and a capped sub-multiplier
/// per block pair, with results mapped back through the permutations and
/// unioned. Requires square n x n factors, missing_bound >= n and n >= 2.
/// block_cap defaults to floor(delta_bound(n, r, missing_bound)); repetitions
/// defaults to default_repetitions(n). Block pairs run in parallel when
/// OpenMP is enabled; results are deterministic for a given config seed
/// either way. When cfg.p_fail > 0 each block product is internally repeated
/// to restore a high per-call success probability.
EntrySet reduce_and_multiply(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t missing_bound,
                             std::uint32_t r, std::optional<std::uint64_t> block_cap,
                             std::optional<std::uint32_t> repetitions, SearchConfig& cfg,
                             CostLedger& ledger);

/// One Monte-Carlo trial of the subarray bound: draws uniform permutations
/// and reports whether the block that entry (i, j) of the product lands in
/// holds at most delta_bound(n, r, ell) non-zeros, where ell is the true
/// non-zero count. (i, j) must be a non-zero of the product.
bool lemma3_trial(const BoolMatrix& a, const BoolMatrix& b, std::uint32_t r, std::uint32_t i,
                  std::uint32_t j, std::uint64_t seed);

} // namespace bmm
