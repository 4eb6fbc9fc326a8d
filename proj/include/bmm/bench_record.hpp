#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace bmm {

/// One CSV row of a benchmark or multiplication run.
struct BenchRecord {
    std::uint32_t n = 0;
    std::uint64_t ell = 0;
    std::uint64_t lambda_final = 0;
    std::string mode;
    std::uint64_t quantum_units = 0;
    std::uint64_t oracle_queries_a = 0;
    std::uint64_t oracle_queries_b = 0;
    std::uint64_t ds_ops = 0;
    std::uint64_t classical_ops = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "n,ell,lambda_final,mode,quantum_units,oracle_queries_A,oracle_queries_B,ds_ops,"
    "classical_ops,wall_ms,seed";

std::string to_csv_row(const BenchRecord& record);

/// Appends rows, writing the header only when the file is new or empty.
void append_csv(const std::filesystem::path& path, std::span<const BenchRecord> records);

} // namespace bmm
