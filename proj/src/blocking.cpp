#include "bmm/blocking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bmm/collision_finder.hpp"

namespace bmm {

double delta_bound(std::uint32_t n, std::uint32_t r, std::uint64_t missing_bound) {
    if (n < 2) throw std::invalid_argument("delta_bound: n must be at least 2");
    if (r < 1 || r > n) throw std::invalid_argument("delta_bound: r must be in [1, n]");
    const auto block = static_cast<double>((n + r - 1) / r);  // ceil(n/r)
    const double spread = static_cast<double>(n - 1) * static_cast<double>(n - 1);
    const double value =
        10.0 * (static_cast<double>(missing_bound) * block * block / spread + 2.0 * block - 1.0);
    if (n >= 3) {
        const double coarse =
            100.0 * (static_cast<double>(n) + static_cast<double>(missing_bound) / r) / r;
        if (value > coarse * (1.0 + 1e-12)) {
            throw std::logic_error("delta_bound: coarse domination failed");
        }
    }
    return value;
}

std::uint32_t default_repetitions(std::uint32_t n) {
    if (n < 2) return 1;
    const auto reps = static_cast<std::uint32_t>(std::ceil(3.0 * std::log10(static_cast<double>(n))));
    return reps > 0 ? reps : 1;
}

namespace {

std::vector<std::uint32_t> random_permutation(std::uint32_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& perm) {
    std::vector<std::uint32_t> inv(perm.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

} // namespace

BlockPlan make_block_plan(std::uint32_t n, std::uint32_t r, std::uint64_t missing_bound,
                          std::mt19937_64& rng) {
    BlockPlan plan;
    plan.n = n;
    plan.r = r;
    plan.missing_bound = missing_bound;
    plan.delta = delta_bound(n, r, missing_bound);
    plan.sigma = random_permutation(n, rng);
    plan.sigma_inv = invert(plan.sigma);
    plan.tau = random_permutation(n, rng);
    plan.tau_inv = invert(plan.tau);
    return plan;
}

MatrixView block_row_view(const OracleHandle& left, const BlockPlan& plan, std::uint32_t s) {
    const std::uint32_t start = plan.row_start(s);
    return MatrixView(left, plan.row_size(s), plan.n,
                      std::span<const std::uint32_t>(plan.sigma_inv).subspan(start), {});
}

MatrixView block_col_view(const OracleHandle& right, const BlockPlan& plan, std::uint32_t t) {
    const std::uint32_t start = plan.col_start(t);
    return MatrixView(right, plan.n, plan.col_size(t), {},
                      std::span<const std::uint32_t>(plan.tau_inv).subspan(start));
}

EntrySet reduce_and_multiply(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t missing_bound,
                             std::uint32_t r, std::optional<std::uint64_t> block_cap,
                             std::optional<std::uint32_t> repetitions, SearchConfig& cfg,
                             CostLedger& ledger) {
    const std::uint32_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n) {
        throw std::invalid_argument("reduce_and_multiply: factors must be square and same size");
    }
    if (n < 2) throw std::invalid_argument("reduce_and_multiply: n must be at least 2");
    if (missing_bound < n) {
        throw std::invalid_argument("reduce_and_multiply: missing bound must be at least n");
    }
    const double delta = delta_bound(n, r, missing_bound);
    const std::uint64_t cap = block_cap.value_or(static_cast<std::uint64_t>(delta));
    const std::uint32_t reps = repetitions.value_or(default_repetitions(n));
    // Internal amplification of each block product when single searches can
    // spuriously fail; one pass suffices for exact search.
    const std::uint32_t inner_reps = cfg.p_fail > 0.0 ? default_repetitions(n) + 1 : 1;

    EntrySet result;
    for (std::uint32_t rep = 0; rep < reps; ++rep) {
        const BlockPlan plan = make_block_plan(n, r, missing_bound, cfg.rng);

        // Seeds are drawn up front so the block fan-out is deterministic
        // regardless of thread count.
        const std::size_t slots = static_cast<std::size_t>(r) * r * inner_reps;
        std::vector<std::uint64_t> seeds(slots);
        for (auto& s : seeds) s = cfg.rng();

        std::vector<EntrySet> partial(slots);
        std::vector<CostLedger> ledgers(slots);

#pragma omp parallel for collapse(2) schedule(dynamic)
        for (std::uint32_t s = 0; s < r; ++s) {
            for (std::uint32_t t = 0; t < r; ++t) {
                for (std::uint32_t pass = 0; pass < inner_reps; ++pass) {
                    const std::size_t slot =
                        (static_cast<std::size_t>(s) * r + t) * inner_reps + pass;
                    SearchConfig block_cfg(seeds[slot], cfg.p_fail);
                    CostLedger& block_ledger = ledgers[slot];
                    const OracleHandle left(a, OracleSide::a, block_ledger);
                    const OracleHandle right(b, OracleSide::b, block_ledger);
                    const MatrixView va = block_row_view(left, plan, s);
                    const MatrixView vb = block_col_view(right, plan, t);
                    const EntrySet local =
                        find_up_to_lambda_entries(va, vb, cap, block_cfg, block_ledger);
                    EntrySet& mapped = partial[slot];
                    for (const auto& [key, wit] : local.items()) {
                        const std::uint32_t i = plan.sigma_inv[plan.row_start(s) + key.first];
                        const std::uint32_t j = plan.tau_inv[plan.col_start(t) + key.second];
                        mapped.insert(i, j, wit);
                    }
                }
            }
        }

        for (std::size_t slot = 0; slot < slots; ++slot) {
            result.merge_from(partial[slot]);
            ledger += ledgers[slot];
        }
    }
    return result;
}

bool lemma3_trial(const BoolMatrix& a, const BoolMatrix& b, std::uint32_t r, std::uint32_t i,
                  std::uint32_t j, std::uint64_t seed) {
    const std::uint32_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n) {
        throw std::invalid_argument("lemma3_trial: factors must be square and same size");
    }
    const EntrySet product = brute_force_product(a, b);
    if (!product.contains_key(i, j)) {
        throw std::invalid_argument("lemma3_trial: (i, j) is not a non-zero of the product");
    }
    const double delta = delta_bound(n, r, product.size());

    std::mt19937_64 rng(seed);
    const auto sigma = random_permutation(n, rng);
    const auto tau = random_permutation(n, rng);

    const auto block_of = [&](std::uint32_t permuted) {
        // Inverse of block_start: the unique s with start(s) <= permuted < start(s+1).
        auto s = static_cast<std::uint32_t>(static_cast<std::uint64_t>(permuted) * r / n);
        while (BlockPlan::block_start(n, r, s + 1) <= permuted) ++s;
        while (BlockPlan::block_start(n, r, s) > permuted) --s;
        return s;
    };
    const std::uint32_t s = block_of(sigma[i]);
    const std::uint32_t t = block_of(tau[j]);
    const std::uint32_t rs = BlockPlan::block_start(n, r, s);
    const std::uint32_t re = BlockPlan::block_start(n, r, s + 1);
    const std::uint32_t cs = BlockPlan::block_start(n, r, t);
    const std::uint32_t ce = BlockPlan::block_start(n, r, t + 1);

    std::uint64_t in_block = 0;
    for (const auto& [key, wit] : product.items()) {
        (void)wit;
        const std::uint32_t pr = sigma[key.first];
        const std::uint32_t pc = tau[key.second];
        if (pr >= rs && pr < re && pc >= cs && pc < ce) ++in_block;
    }
    return static_cast<double>(in_block) <= delta;
}

} // namespace bmm
