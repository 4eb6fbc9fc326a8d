#include "bmm/bool_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace bmm {

BoolMatrix::BoolMatrix(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("BoolMatrix: dimensions must be positive");
    }
    words_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

BoolMatrix BoolMatrix::identity(std::uint32_t n) {
    BoolMatrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BoolMatrix::set(std::uint32_t r, std::uint32_t c, bool value) {
    auto& word = words_[static_cast<std::size_t>(r) * words_per_row_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value) {
        word |= mask;
    } else {
        word &= ~mask;
    }
}

std::uint64_t BoolMatrix::popcount() const {
    std::uint64_t total = 0;
    for (const std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

namespace {

void check_inner(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("product: a.cols() must equal b.rows()");
    }
}

// OR of b's rows selected by row i of a, then per set bit the smallest
// witness, appended to out in column order.
void product_row(const BoolMatrix& a, const BoolMatrix& b, std::uint32_t i,
                 std::vector<std::uint64_t>& acc, std::vector<WitnessedEntry>& out) {
    const std::uint32_t wpr = b.words_per_row();
    acc.assign(wpr, 0);
    std::vector<std::uint32_t> row_witnesses;
    const auto a_row = a.row_words(i);
    for (std::uint32_t wk = 0; wk < a.words_per_row(); ++wk) {
        std::uint64_t bits = a_row[wk];
        while (bits != 0) {
            const auto k = static_cast<std::uint32_t>(wk * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            row_witnesses.push_back(k);
            const auto b_row = b.row_words(k);
            for (std::uint32_t w = 0; w < wpr; ++w) acc[w] |= b_row[w];
        }
    }
    for (std::uint32_t w = 0; w < wpr; ++w) {
        std::uint64_t bits = acc[w];
        while (bits != 0) {
            const auto j = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            for (const std::uint32_t k : row_witnesses) {
                if (b.get(k, j)) {
                    out.push_back({i, j, k});
                    break;
                }
            }
        }
    }
}

} // namespace

EntrySet brute_force_product_serial(const BoolMatrix& a, const BoolMatrix& b) {
    check_inner(a, b);
    EntrySet result;
    std::vector<std::uint64_t> acc;
    std::vector<WitnessedEntry> row;
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
        row.clear();
        product_row(a, b, i, acc, row);
        for (const auto& e : row) result.insert(e.row, e.col, e.witness);
    }
    return result;
}

EntrySet brute_force_product(const BoolMatrix& a, const BoolMatrix& b) {
    check_inner(a, b);
    const std::uint32_t rows = a.rows();
    std::vector<std::vector<WitnessedEntry>> per_row(rows);

#pragma omp parallel
    {
        std::vector<std::uint64_t> acc;
#pragma omp for schedule(dynamic, 16)
        for (std::uint32_t i = 0; i < rows; ++i) {
            product_row(a, b, i, acc, per_row[i]);
        }
    }

    EntrySet result;
    for (const auto& row : per_row) {
        for (const auto& e : row) result.insert(e.row, e.col, e.witness);
    }
    return result;
}

std::uint64_t count_product_nonzeros(const BoolMatrix& a, const BoolMatrix& b) {
    check_inner(a, b);
    const std::uint32_t rows = a.rows();
    const std::uint32_t wpr = b.words_per_row();
    std::uint64_t total = 0;

#pragma omp parallel reduction(+ : total)
    {
        std::vector<std::uint64_t> acc(wpr);
#pragma omp for schedule(dynamic, 16)
        for (std::uint32_t i = 0; i < rows; ++i) {
            for (auto& w : acc) w = 0;
            const auto a_row = a.row_words(i);
            for (std::uint32_t wk = 0; wk < a.words_per_row(); ++wk) {
                std::uint64_t bits = a_row[wk];
                while (bits != 0) {
                    const auto k = static_cast<std::uint32_t>(wk * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                    const auto b_row = b.row_words(k);
                    for (std::uint32_t w = 0; w < wpr; ++w) acc[w] |= b_row[w];
                }
            }
            for (const std::uint64_t w : acc) total += static_cast<std::uint64_t>(std::popcount(w));
        }
    }
    return total;
}

} // namespace bmm
