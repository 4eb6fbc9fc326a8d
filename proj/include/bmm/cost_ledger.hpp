#pragma once

#include <cstdint>

namespace bmm {

/// Run-cost counters for one multiplication run.
///
/// quantum_units is the symbolic price of the simulated quantum searches
/// (each search charges ceil(sqrt(domain)) times its per-evaluation unit);
/// everything the classical simulation actually executes on top of that is
/// tracked separately so the charged model stays clean:
///   - oracle_queries_a/b count every entry read through an OracleHandle,
///   - ds_ops counts nodes touched inside the collision store,
///   - classical_ops counts predicate/key evaluations performed by the
///     simulated searches.
/// All counters are monotone within a run; merging is componentwise addition.
struct CostLedger {
    std::uint64_t oracle_queries_a = 0;
    std::uint64_t oracle_queries_b = 0;
    std::uint64_t quantum_units = 0;
    std::uint64_t ds_ops = 0;
    std::uint64_t classical_ops = 0;

    CostLedger& operator+=(const CostLedger& other) {
        oracle_queries_a += other.oracle_queries_a;
        oracle_queries_b += other.oracle_queries_b;
        quantum_units += other.quantum_units;
        ds_ops += other.ds_ops;
        classical_ops += other.classical_ops;
        return *this;
    }

    friend CostLedger operator+(CostLedger lhs, const CostLedger& rhs) {
        lhs += rhs;
        return lhs;
    }

    /// Fold a nested search's scratch ledger into this one, except its
    /// quantum charge: the enclosing search folds that in as a per-evaluation
    /// unit (max, not sum), so adding it here would double-count.
    void absorb_classical(const CostLedger& sub) {
        oracle_queries_a += sub.oracle_queries_a;
        oracle_queries_b += sub.oracle_queries_b;
        ds_ops += sub.ds_ops;
        classical_ops += sub.classical_ops;
    }

    bool operator==(const CostLedger&) const = default;
};

} // namespace bmm
