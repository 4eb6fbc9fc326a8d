#pragma once

#include <cassert>
#include <cstdint>
#include <span>

#include "bmm/bool_matrix.hpp"
#include "bmm/cost_ledger.hpp"

namespace bmm {

enum class OracleSide { a, b };

/// Counted access to one input matrix: every entry read through the handle
/// increments the matching oracle counter by one. A handle mutates only its
/// ledger; distinct (handle, ledger) pairs may live on distinct threads.
class OracleHandle {
public:
    OracleHandle(const BoolMatrix& matrix, OracleSide side, CostLedger& ledger)
        : matrix_(&matrix), side_(side), ledger_(&ledger) {}

    bool query(std::uint32_t row, std::uint32_t col) const {
        if (side_ == OracleSide::a) {
            ++ledger_->oracle_queries_a;
        } else {
            ++ledger_->oracle_queries_b;
        }
        return matrix_->get(row, col);
    }

    const BoolMatrix& matrix() const { return *matrix_; }
    OracleSide side() const { return side_; }

private:
    const BoolMatrix* matrix_;
    OracleSide side_;
    CostLedger* ledger_;
};

/// Window onto an oracle with optional row/column index remapping. Views are
/// pure index arithmetic: nothing is copied and every read passes through
/// (and is counted by) the underlying handle. An empty map means identity.
class MatrixView {
public:
    explicit MatrixView(const OracleHandle& handle)
        : handle_(&handle), rows_(handle.matrix().rows()), cols_(handle.matrix().cols()) {}

    MatrixView(const OracleHandle& handle, std::uint32_t rows, std::uint32_t cols,
               std::span<const std::uint32_t> row_map, std::span<const std::uint32_t> col_map)
        : handle_(&handle), rows_(rows), cols_(cols), row_map_(row_map), col_map_(col_map) {
        assert(row_map_.empty() || row_map_.size() >= rows_);
        assert(col_map_.empty() || col_map_.size() >= cols_);
    }

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    bool get(std::uint32_t r, std::uint32_t c) const {
        assert(r < rows_ && c < cols_);
        const std::uint32_t rr = row_map_.empty() ? r : row_map_[r];
        const std::uint32_t cc = col_map_.empty() ? c : col_map_[c];
        return handle_->query(rr, cc);
    }

private:
    const OracleHandle* handle_;
    std::uint32_t rows_;
    std::uint32_t cols_;
    std::span<const std::uint32_t> row_map_;
    std::span<const std::uint32_t> col_map_;
};

} // namespace bmm
