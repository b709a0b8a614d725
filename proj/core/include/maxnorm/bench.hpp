#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxnorm/instances.hpp"
#include "maxnorm/labeling.hpp"

namespace maxnorm {

struct BenchRecord {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t num_clauses = 0;
    std::string backend;
    /// Clause-processing loop only; generation and sorting are excluded.
    double seconds = 0.0;
};

inline constexpr const char* kBenchCsvHeader = "width,height,num_clauses,backend,seconds";

/// Called after every measured run, e.g. for progress output.
using BenchObserver = std::function<void(const BenchRecord&, const SolveResult&)>;

/// For each spec: generate and sort once, then time `repetitions` solves per
/// backend, one record each. Runs are strictly sequential.
std::vector<BenchRecord> run_benchmark(const std::vector<GridSpec>& sizes,
                                       const std::vector<Backend>& backends,
                                       std::size_t repetitions,
                                       const BenchObserver& observer = {});

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
/// Throws std::runtime_error on I/O failure.
void write_bench_csv_file(const std::filesystem::path& path,
                          const std::vector<BenchRecord>& records);

}  // namespace maxnorm
