#include "maxnorm/verify.hpp"

#include <random>
#include <sstream>
#include <string>

#include "maxnorm/implication_graph.hpp"
#include "maxnorm/instances.hpp"
#include "maxnorm/oracle.hpp"

namespace maxnorm {

bool verify_instance(const LabelingProblem& p, std::vector<std::string>& failures,
                     std::size_t* steps) {
    const std::size_t before = failures.size();
    const auto fail = [&](const std::string& what) { failures.push_back(what); };

    const std::vector<ClauseItem> sequence = clause_sequence(p);
    const SolveResult inc = solve_sequence(p.num_vars, sequence, Backend::Incremental);
    const SolveResult base = solve_sequence(p.num_vars, sequence, Backend::Aspvall);
    const OracleResult best = brute_force_min_energy(p);

    if (steps != nullptr) {
        *steps += sequence.size();
    }
    if (inc.accepted_mask != base.accepted_mask) {
        fail("backends accepted different clause sets");
    }
    for (const SolveResult* r : {&inc, &base}) {
        const double e = energy_max(p, r->labeling);
        if (e != best.value) {
            std::ostringstream os;
            os << "E_inf " << e << " differs from optimum " << best.value;
            fail(os.str());
        }
    }

    ImplicationGraph g(p.num_vars);
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        if (inc.accepted_mask[k]) {
            g.add_clause(sequence[k].clause);
        }
    }
    if (!satisfies_all_clauses(g, inc.labeling)) {
        fail("labeling violates an accepted clause");
    }
    TruthAssignment flipped = inc.labeling;
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        flipped.flip(var);
        if (satisfies_all_clauses(g, flipped)) {
            fail("variable x" + std::to_string(var) + " is not pinned");
        }
        flipped.flip(var);
    }
    return failures.size() == before;
}

VerifyReport run_verification(const VerifyOptions& opts) {
    VerifyReport report;
    std::mt19937_64 rng(opts.seed);
    const std::size_t max_n = opts.max_n == 0 ? 1 : opts.max_n;

    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        RandomInstanceOptions ro;
        ro.num_vars = 1 + rng() % max_n;
        ro.shape = (trial % 2 == 0) ? GraphShape::Grid : GraphShape::Sparse;
        ro.edge_density = 0.15 + 0.5 * uniform01(rng);
        ro.non_submodular_fraction = (trial % 3 == 0) ? 1.0 : (trial % 3 == 1 ? 0.5 : 0.0);
        ro.quantize_levels = (trial % 5 == 0) ? 4 : 0;
        const LabelingProblem p = gen_random_instance(rng, ro);

        std::vector<std::string> failures;
        ++report.trials;
        if (!verify_instance(p, failures, &report.steps)) {
            ++report.failed_trials;
            for (const std::string& f : failures) {
                report.failures.push_back("trial " + std::to_string(trial) + ": " + f);
            }
        }
    }
    return report;
}

}  // namespace maxnorm
