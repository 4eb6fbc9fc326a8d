#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmm/entry_set.hpp"

namespace bmm {

/// Bit-packed Boolean matrix. Rows are padded to 64-bit word boundaries so
/// whole rows can be OR-ed word-wise. Immutable use after construction is
/// safe to share across threads.
class BoolMatrix {
public:
    BoolMatrix(std::uint32_t rows, std::uint32_t cols);

    static BoolMatrix identity(std::uint32_t n);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    std::uint32_t words_per_row() const { return words_per_row_; }

    bool get(std::uint32_t r, std::uint32_t c) const {
        return (words_[static_cast<std::size_t>(r) * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::uint32_t r, std::uint32_t c, bool value);

    std::span<const std::uint64_t> row_words(std::uint32_t r) const {
        return {words_.data() + static_cast<std::size_t>(r) * words_per_row_, words_per_row_};
    }

    /// Number of 1-entries in the matrix.
    std::uint64_t popcount() const;

    bool operator==(const BoolMatrix&) const = default;

private:
    std::uint32_t rows_;
    std::uint32_t cols_;
    std::uint32_t words_per_row_;
    std::vector<std::uint64_t> words_;
};

/// Exact Boolean product with the smallest valid witness per non-zero entry.
/// This is the reference oracle for every search-based algorithm in the
/// library; it reads the matrices directly (no oracle counting, no RNG).
/// Row-parallel when OpenMP is enabled.
EntrySet brute_force_product(const BoolMatrix& a, const BoolMatrix& b);

/// Single-threaded reference implementation of brute_force_product, kept as
/// the comparison baseline for the parallel kernel.
EntrySet brute_force_product_serial(const BoolMatrix& a, const BoolMatrix& b);

/// Number of non-zero entries of the product, without materializing
/// witnesses. Row-parallel when OpenMP is enabled.
std::uint64_t count_product_nonzeros(const BoolMatrix& a, const BoolMatrix& b);

} // namespace bmm
