#include "bmm/driver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bmm/blocking.hpp"
#include "bmm/collision_finder.hpp"
#include "bmm/oracle.hpp"

namespace bmm {

std::string to_string(MultiplyMode mode) {
    switch (mode) {
        case MultiplyMode::direct: return "direct";
        case MultiplyMode::reduce: return "reduce";
        case MultiplyMode::theorem2: return "theorem2";
    }
    return "unknown";
}

std::uint32_t theorem1_block_count(std::uint32_t n, std::uint64_t lambda) {
    auto r = static_cast<std::uint64_t>(
        std::ceil(std::sqrt(static_cast<double>(lambda) / static_cast<double>(n))));
    if (r == 0) r = 1;
    while (r > 1 && (r - 1) * (r - 1) * n >= lambda) --r;
    while (r * r * n < lambda) ++r;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t theorem2_block_count(std::uint32_t n, std::uint64_t lambda, std::uint32_t c) {
    const double raw = static_cast<double>(c) * n / std::sqrt(static_cast<double>(lambda));
    auto r = static_cast<std::uint64_t>(std::ceil(raw));
    if (r == 0) r = 1;
    if (r > n) r = n;
    return static_cast<std::uint32_t>(r);
}

EntrySet multiply_direct(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                         SearchConfig& cfg, CostLedger& ledger) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply_direct: inner dimensions disagree");
    }
    const OracleHandle left(a, OracleSide::a, ledger);
    const OracleHandle right(b, OracleSide::b, ledger);
    const MatrixView va(left);
    const MatrixView vb(right);
    return find_up_to_lambda_entries(va, vb, lambda, cfg, ledger);
}

namespace {

std::uint32_t require_square(const BoolMatrix& a, const BoolMatrix& b, const char* who) {
    const std::uint32_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n) {
        throw std::invalid_argument(std::string(who) + ": factors must be square and same size");
    }
    return n;
}

} // namespace

MultiplyMode resolve_mode(std::uint32_t n, std::uint64_t lambda) {
    return lambda <= n ? MultiplyMode::direct : MultiplyMode::reduce;
}

std::optional<ReduceInfo> resolve_reduce_info(std::uint32_t n, std::uint64_t lambda) {
    if (lambda <= n) return std::nullopt;
    const std::uint32_t r = theorem1_block_count(n, lambda);
    return ReduceInfo{r, delta_bound(n, r, lambda), default_repetitions(n)};
}

EntrySet multiply_known_lambda(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                               SearchConfig& cfg, CostLedger& ledger) {
    const std::uint32_t n = require_square(a, b, "multiply_known_lambda");
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
    if (lambda < 1 || lambda > cells) {
        throw std::invalid_argument("multiply_known_lambda: lambda must be in [1, n^2]");
    }
    if (lambda <= n) return multiply_direct(a, b, lambda, cfg, ledger);
    const std::uint32_t r = theorem1_block_count(n, lambda);
    return reduce_and_multiply(a, b, lambda, r, std::nullopt, std::nullopt, cfg, ledger);
}

RunReport multiply_auto(const BoolMatrix& a, const BoolMatrix& b, SearchConfig& cfg,
                        CostLedger& ledger) {
    const std::uint32_t n = require_square(a, b, "multiply_auto");
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;

    RunReport report;
    report.seed = cfg.seed;
    std::uint64_t lambda = cells >= 2 ? 2 : 1;
    while (true) {
        const EntrySet round = multiply_known_lambda(a, b, lambda, cfg, ledger);
        report.entries.merge_from(round);
        report.lambda_final = lambda;
        report.mode = resolve_mode(n, lambda);
        report.params = resolve_reduce_info(n, lambda);
        // Unsaturated round: the cap was not hit, so nothing was left behind.
        if (round.size() < lambda) break;
        if (lambda == cells) break;  // complete product, nothing more to find
        lambda = std::min(lambda * 2, cells);
    }
    report.ledger = ledger;
    return report;
}

EntrySet theorem2_multiply(const BoolMatrix& a, const BoolMatrix& b, std::uint64_t lambda,
                           SearchConfig& cfg, CostLedger& ledger) {
    const std::uint32_t n = require_square(a, b, "theorem2_multiply");
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
    if (lambda < n || lambda > cells) {
        throw std::invalid_argument("theorem2_multiply: lambda must be in [n, n^2]");
    }
    const std::uint32_t r = theorem2_block_count(n, lambda, kTheorem2Constant);
    const double block_load = 100.0 * n / r + 100.0 * static_cast<double>(n) * n / r /
                                                  static_cast<double>(r);
    if (block_load > static_cast<double>(lambda)) {
        throw std::invalid_argument(
            "theorem2_multiply: per-block load bound 100n/r + 100n^2/r^2 = " +
            std::to_string(block_load) + " exceeds lambda = " + std::to_string(lambda) +
            " at r = " + std::to_string(r) + " (c = " + std::to_string(kTheorem2Constant) +
            "); choose a larger lambda for this n");
    }
    return reduce_and_multiply(a, b, cells, r, lambda, std::nullopt, cfg, ledger);
}

} // namespace bmm
