#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bmm/bool_matrix.hpp"

namespace bmm {

/// Parse failure in a BMM1 stream; `line` is the 1-based offending line.
class Bmm1ParseError : public std::runtime_error {
public:
    Bmm1ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// BMM1 text format: one header line `BMM1 <rows> <cols> <nnz>`, then exactly
/// nnz lines `<i> <j>` with 1-based coordinates in row-major order and no
/// duplicates; listed entries are 1, everything else 0. Decimal ASCII, LF
/// line endings.
BoolMatrix read_bmm1(std::istream& in);
BoolMatrix read_bmm1(const std::filesystem::path& path);

void write_bmm1(const BoolMatrix& matrix, std::ostream& out);
void write_bmm1(const BoolMatrix& matrix, const std::filesystem::path& path);

} // namespace bmm
