#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "bmm/cost_ledger.hpp"

namespace bmm {

/// Smallest r with r * r >= n.
inline std::uint64_t isqrt_ceil(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    while (r * r < n) ++r;
    return r;
}

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child stream seed for fan-out work; stable regardless of thread count.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base ^ 0x5851f42d4c957f2dULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

/// Shared knobs for the simulated search primitives. p_fail injects the
/// bounded-error behaviour of quantum search: with probability p_fail a
/// single invocation reports "not found" even though marked elements exist.
/// p_fail = 0 makes every primitive exact. A config is single-threaded.
struct SearchConfig {
    double p_fail = 0.0;
    std::uint64_t seed = 0;
    std::mt19937_64 rng;

    SearchConfig() : rng(0) {}
    explicit SearchConfig(std::uint64_t seed_, double p_fail_ = 0.0)
        : p_fail(p_fail_), seed(seed_), rng(seed_) {}

    bool inject_failure() {
        if (p_fail <= 0.0) return false;
        return std::bernoulli_distribution(p_fail)(rng);
    }
};

/// Simulated Grover search over {0, ..., domain-1}.
///
/// Correctness is obtained classically: the domain is scanned in a fresh
/// uniformly random order and the first marked index is returned, so the
/// result is uniform over the marked set. Cost is charged symbolically:
///   quantum_units += ceil(sqrt(domain)) * max(declared_unit, largest
///   quantum charge observed in any single predicate evaluation).
/// The predicate receives a scratch ledger; nested searches charge their
/// quantum units there (folded in via the max above, never summed), while
/// their classical counters are added to `ledger`. Each evaluation also
/// costs one classical_op. The predicate must not change the underlying
/// state during one invocation.
template <typename Pred>
std::optional<std::uint64_t> grover_search(std::uint64_t domain, Pred&& marked,
                                           std::uint64_t declared_unit, SearchConfig& cfg,
                                           CostLedger& ledger) {
    if (domain == 0) return std::nullopt;
    std::uint64_t unit = declared_unit > 0 ? declared_unit : 1;
    const std::uint64_t sweep = isqrt_ceil(domain);
    if (cfg.inject_failure()) {
        ledger.quantum_units += sweep * unit;
        return std::nullopt;
    }

    std::optional<std::uint64_t> hit;
    auto evaluate = [&](std::uint64_t idx) {
        CostLedger sub;
        const bool ok = marked(idx, sub);
        ledger.absorb_classical(sub);
        ++ledger.classical_ops;
        if (sub.quantum_units > unit) unit = sub.quantum_units;
        return ok;
    };

    if (domain == 1) {
        if (evaluate(0)) hit = 0;
    } else {
        std::vector<std::uint64_t> order(domain);
        std::iota(order.begin(), order.end(), std::uint64_t{0});
        for (std::uint64_t t = 0; t < domain && !hit; ++t) {
            std::uniform_int_distribution<std::uint64_t> pick(t, domain - 1);
            std::swap(order[t], order[pick(cfg.rng)]);
            if (evaluate(order[t])) hit = order[t];
        }
    }
    ledger.quantum_units += sweep * unit;
    return hit;
}

/// Simulated extremum finding over {0, ..., domain-1}: returns the index
/// maximizing key() among indices passing filter(), ties broken by smallest
/// index, or nullopt if nothing passes. Charged like a plain search:
/// quantum_units += ceil(sqrt(domain)) * unit. Evaluations cost classical
/// ops; the exact answer comes from a full scan.
template <typename KeyFn, typename FilterFn>
std::optional<std::uint64_t> find_max_by_key(std::uint64_t domain, KeyFn&& key, FilterFn&& filter,
                                             std::uint64_t unit, SearchConfig& cfg,
                                             CostLedger& ledger) {
    if (domain == 0) return std::nullopt;
    ledger.quantum_units += isqrt_ceil(domain) * (unit > 0 ? unit : 1);
    if (cfg.inject_failure()) return std::nullopt;

    std::optional<std::uint64_t> best;
    std::uint64_t best_key = 0;
    for (std::uint64_t i = 0; i < domain; ++i) {
        ++ledger.classical_ops;
        if (!filter(i)) continue;
        const std::uint64_t k = key(i);
        ++ledger.classical_ops;
        if (!best || k > best_key) {
            best = i;
            best_key = k;
        }
    }
    return best;
}

} // namespace bmm
