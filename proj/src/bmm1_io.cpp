#include "bmm/bmm1_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <vector>

namespace bmm {

namespace {

// Strict decimal u64 token scan; rejects anything but [0-9]+ fields
// separated by single spaces.
struct LineScanner {
    const std::string& text;
    std::size_t pos = 0;
    bool need_separator = false;

    std::optional<std::uint64_t> next_number() {
        if (pos >= text.size()) return std::nullopt;
        if (need_separator) {
            if (text[pos] != ' ') return std::nullopt;
            ++pos;
        }
        need_separator = true;
        std::uint64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos) return std::nullopt;
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }
    bool done() const { return pos == text.size(); }
};

} // namespace

BoolMatrix read_bmm1(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw Bmm1ParseError(1, "missing header");
    if (line.rfind("BMM1 ", 0) != 0) throw Bmm1ParseError(1, "header must start with 'BMM1'");

    LineScanner header{line, 5};
    const auto rows = header.next_number();
    const auto cols = header.next_number();
    const auto nnz = header.next_number();
    if (!rows || !cols || !nnz || !header.done()) {
        throw Bmm1ParseError(1, "malformed header, expected 'BMM1 <rows> <cols> <nnz>'");
    }
    if (*rows == 0 || *cols == 0) throw Bmm1ParseError(1, "dimensions must be positive");
    if (*rows > 0xffffffffULL || *cols > 0xffffffffULL) {
        throw Bmm1ParseError(1, "dimensions too large");
    }
    if (*nnz > *rows * *cols) throw Bmm1ParseError(1, "nnz exceeds rows*cols");

    BoolMatrix matrix(static_cast<std::uint32_t>(*rows), static_cast<std::uint32_t>(*cols));
    std::uint64_t prev_i = 0, prev_j = 0;
    for (std::uint64_t e = 0; e < *nnz; ++e) {
        ++line_no;
        if (!std::getline(in, line)) {
            throw Bmm1ParseError(line_no, "unexpected end of file, expected a coordinate line");
        }
        LineScanner scan{line, 0};
        const auto i = scan.next_number();
        const auto j = scan.next_number();
        if (!i || !j || !scan.done()) {
            throw Bmm1ParseError(line_no, "expected '<i> <j>'");
        }
        if (*i < 1 || *i > *rows || *j < 1 || *j > *cols) {
            throw Bmm1ParseError(line_no, "coordinate (" + std::to_string(*i) + ", " +
                                              std::to_string(*j) + ") out of range");
        }
        if (e > 0) {
            if (*i == prev_i && *j == prev_j) {
                throw Bmm1ParseError(line_no, "duplicate coordinate");
            }
            if (*i < prev_i || (*i == prev_i && *j < prev_j)) {
                throw Bmm1ParseError(line_no, "coordinates not in row-major order");
            }
        }
        prev_i = *i;
        prev_j = *j;
        matrix.set(static_cast<std::uint32_t>(*i - 1), static_cast<std::uint32_t>(*j - 1), true);
    }
    ++line_no;
    if (std::getline(in, line) && !line.empty()) {
        throw Bmm1ParseError(line_no, "trailing content after " + std::to_string(*nnz) +
                                          " coordinate lines");
    }
    return matrix;
}

BoolMatrix read_bmm1(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
    return read_bmm1(in);
}

void write_bmm1(const BoolMatrix& matrix, std::ostream& out) {
    out << "BMM1 " << matrix.rows() << ' ' << matrix.cols() << ' ' << matrix.popcount() << '\n';
    for (std::uint32_t i = 0; i < matrix.rows(); ++i) {
        for (std::uint32_t j = 0; j < matrix.cols(); ++j) {
            if (matrix.get(i, j)) out << (i + 1) << ' ' << (j + 1) << '\n';
        }
    }
}

void write_bmm1(const BoolMatrix& matrix, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_bmm1(matrix, out);
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

} // namespace bmm
