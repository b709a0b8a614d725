#include "maxnorm/bench.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "maxnorm/problem_io.hpp"

namespace maxnorm {

std::vector<BenchRecord> run_benchmark(const std::vector<GridSpec>& sizes,
                                       const std::vector<Backend>& backends,
                                       std::size_t repetitions,
                                       const BenchObserver& observer) {
    std::vector<BenchRecord> records;
    for (const GridSpec& spec : sizes) {
        const LabelingProblem problem = gen_grid_instance(spec);
        const std::vector<ClauseItem> sequence = clause_sequence(problem);
        for (Backend backend : backends) {
            for (std::size_t rep = 0; rep < repetitions; ++rep) {
                const SolveResult result = solve_sequence(problem.num_vars, sequence, backend);
                BenchRecord rec{spec.width, spec.height, sequence.size(),
                                std::string(backend_name(backend)), result.seconds};
                if (observer) {
                    observer(rec, result);
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << r.width << ',' << r.height << ',' << r.num_clauses << ',' << r.backend << ','
            << format_double(r.seconds) << '\n';
    }
}

void write_bench_csv_file(const std::filesystem::path& path,
                          const std::vector<BenchRecord>& records) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_bench_csv(out, records);
    if (!out.flush()) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace maxnorm
