// maxnorm: command-line front end for max-norm optimal binary labeling.
//
//   maxnorm gen --width W --height H --seed S --out FILE
//   maxnorm solve FILE [--backend incremental|aspvall] [--out FILE]
//   maxnorm oracle FILE
//   maxnorm bench --sizes 8,16,32,64 --backends incremental,aspvall --reps 3 --seed S --csv FILE
//   maxnorm verify --trials K --max-n 12 --seed S

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxnorm/bench.hpp"
#include "maxnorm/instances.hpp"
#include "maxnorm/labeling.hpp"
#include "maxnorm/oracle.hpp"
#include "maxnorm/problem_io.hpp"
#include "maxnorm/verify.hpp"

namespace {

using namespace maxnorm;

// "64" means 64x64; "64x32" means width 64, height 32.
GridSpec parse_size(const std::string& text, std::uint64_t seed) {
    GridSpec spec;
    spec.seed = seed;
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            spec.width = spec.height = std::stoul(text);
        } else {
            spec.width = std::stoul(text.substr(0, x));
            spec.height = std::stoul(text.substr(x + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--sizes", "bad size '" + text + "'");
    }
    if (spec.width == 0 || spec.height == 0) {
        throw CLI::ValidationError("--sizes", "sizes must be positive");
    }
    return spec;
}

int run_gen(std::size_t width, std::size_t height, std::uint64_t seed, const std::string& out) {
    const LabelingProblem p = gen_grid_instance({width, height, seed});
    write_problem_file(out, p);
    return 0;
}

int run_solve(const std::string& file, const std::string& backend, const std::string& out) {
    const LabelingProblem p = read_problem_file(file);
    const SolveResult r = mc_solve(p, parse_backend(backend));
    const double e = energy_max(p, r.labeling);
    if (out.empty()) {
        write_labeling(std::cout, r.labeling, e);
    } else {
        std::ofstream os(out);
        if (!os) {
            throw std::runtime_error("cannot write " + out);
        }
        write_labeling(os, r.labeling, e);
    }
    std::cerr << "accepted " << r.accepted << " rejected " << r.rejected << " in "
              << r.seconds << " s (" << backend << ")\n";
    return 0;
}

int run_oracle(const std::string& file) {
    const LabelingProblem p = read_problem_file(file);
    const OracleResult r = brute_force_min_energy(p);
    write_labeling(std::cout, r.argmin, r.value);
    return 0;
}

int run_bench(const std::vector<std::string>& sizes, const std::vector<std::string>& backends,
              std::size_t reps, std::uint64_t seed, const std::string& csv) {
    std::vector<GridSpec> specs;
    for (const std::string& s : sizes) {
        specs.push_back(parse_size(s, seed));
    }
    std::vector<Backend> parsed;
    for (const std::string& b : backends) {
        parsed.push_back(parse_backend(b));
    }
    const auto progress = [](const BenchRecord& rec, const SolveResult& r) {
        std::cerr << rec.width << 'x' << rec.height << ' ' << rec.backend << ": "
                  << rec.seconds << " s, " << rec.num_clauses << " clauses, accepted "
                  << r.accepted << '\n';
    };
    const std::vector<BenchRecord> records = run_benchmark(specs, parsed, reps, progress);
    if (csv.empty() || csv == "-") {
        write_bench_csv(std::cout, records);
    } else {
        write_bench_csv_file(csv, records);
    }
    return 0;
}

int run_verify(std::size_t trials, std::size_t max_n, std::uint64_t seed) {
    if (max_n > kMaxOracleVars) {
        throw CLI::ValidationError("--max-n", "at most " + std::to_string(kMaxOracleVars));
    }
    const VerifyReport report = run_verification({trials, max_n, seed});
    for (const std::string& f : report.failures) {
        std::cout << "FAIL " << f << '\n';
    }
    std::cout << "trials " << report.trials << " failed " << report.failed_trials << " steps "
              << report.steps << '\n';
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-norm optimal binary labeling via incremental 2-SAT"};
    app.require_subcommand(1);

    std::size_t width = 0;
    std::size_t height = 0;
    std::uint64_t seed = 0;
    std::string out;
    auto* gen = app.add_subcommand("gen", "Generate a random 4-connected grid problem");
    gen->add_option("--width", width, "Grid width")->required()->check(CLI::PositiveNumber);
    gen->add_option("--height", height, "Grid height")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out, "Output problem file")->required();

    std::string file;
    std::string backend = "incremental";
    std::string solve_out;
    auto* solve = app.add_subcommand("solve", "Solve a problem file");
    solve->add_option("file", file, "Problem file")->required()->check(CLI::ExistingFile);
    solve->add_option("--backend", backend, "incremental or aspvall")
        ->check(CLI::IsMember({"incremental", "aspvall"}));
    solve->add_option("--out", solve_out, "Write the labeling here instead of stdout");

    std::string oracle_file;
    auto* oracle = app.add_subcommand("oracle", "Brute-force minimum of the max-norm energy");
    oracle->add_option("file", oracle_file, "Problem file")->required()->check(CLI::ExistingFile);

    std::vector<std::string> sizes{"8", "16", "32", "64"};
    std::vector<std::string> backends{"incremental", "aspvall"};
    std::size_t reps = 3;
    std::uint64_t bench_seed = 0;
    std::string csv;
    auto* bench = app.add_subcommand("bench", "Time both backends on random grids");
    bench->add_option("--sizes", sizes, "Grid sizes: N for NxN or WxH")->delimiter(',');
    bench->add_option("--backends", backends, "Backends to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"incremental", "aspvall"}));
    bench->add_option("--reps", reps, "Repetitions per size and backend");
    bench->add_option("--seed", bench_seed, "PRNG seed");
    bench->add_option("--csv", csv, "CSV output path (stdout if omitted)");

    std::size_t trials = 1000;
    std::size_t max_n = 12;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "Randomized oracle-equivalence suite");
    verify->add_option("--trials", trials, "Number of random instances");
    verify->add_option("--max-n", max_n, "Largest variable count");
    verify->add_option("--seed", verify_seed, "PRNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            return run_gen(width, height, seed, out);
        }
        if (*solve) {
            return run_solve(file, backend, solve_out);
        }
        if (*oracle) {
            return run_oracle(oracle_file);
        }
        if (*bench) {
            return run_bench(sizes, backends, reps, bench_seed, csv);
        }
        if (*verify) {
            return run_verify(trials, max_n, verify_seed);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
