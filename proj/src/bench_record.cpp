#include "bmm/bench_record.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bmm {

std::string to_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.ell << ',' << r.lambda_final << ',' << r.mode << ','
        << r.quantum_units << ',' << r.oracle_queries_a << ',' << r.oracle_queries_b << ','
        << r.ds_ops << ',' << r.classical_ops << ',';
    out.setf(std::ios::fixed);
    out.precision(3);
    out << r.wall_ms << ',' << r.seed;
    return out.str();
}

void append_csv(const std::filesystem::path& path, std::span<const BenchRecord> records) {
    const bool need_header =
        !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for appending");
    if (need_header) out << kBenchCsvHeader << '\n';
    for (const auto& record : records) out << to_csv_row(record) << '\n';
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

} // namespace bmm
