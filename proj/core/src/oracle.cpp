#include "maxnorm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxnorm {

namespace {

void check_cap(const LabelingProblem& p, std::size_t cap) {
    if (p.num_vars > cap) {
        throw std::invalid_argument("oracle supports at most " + std::to_string(cap) +
                                    " variables, got " + std::to_string(p.num_vars));
    }
}

bool bit(std::uint64_t code, std::uint32_t var) { return ((code >> (var - 1)) & 1U) != 0; }

double max_energy_of_code(const LabelingProblem& p, std::uint64_t code) {
    double m = 0.0;
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        m = std::max(m, p.unary[var - 1].cost[bit(code, var) ? 1 : 0]);
    }
    for (const PairwiseTerm& t : p.pairwise) {
        m = std::max(m, t.at(bit(code, t.i), bit(code, t.j)));
    }
    return m;
}

}  // namespace

OracleResult brute_force_min_energy(const LabelingProblem& p) {
    check_cap(p, kMaxOracleVars);
    p.validate();
    const std::uint64_t count = std::uint64_t{1} << p.num_vars;
    double best = max_energy_of_code(p, 0);
    std::uint64_t best_code = 0;
    for (std::uint64_t code = 1; code < count; ++code) {
        const double e = max_energy_of_code(p, code);
        if (e < best) {
            best = e;
            best_code = code;
        }
    }
    return {best, TruthAssignment::from_code(p.num_vars, best_code)};
}

TruthAssignment brute_force_lexmo_best(const LabelingProblem& p) {
    check_cap(p, kMaxLexmoOracleVars);
    p.validate();
    const std::uint64_t count = std::uint64_t{1} << p.num_vars;

    std::vector<double> best;
    std::vector<double> current;
    std::uint64_t best_code = 0;
    for (std::uint64_t code = 0; code < count; ++code) {
        current.clear();
        for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
            current.push_back(p.unary[var - 1].cost[bit(code, var) ? 1 : 0]);
        }
        for (const PairwiseTerm& t : p.pairwise) {
            current.push_back(t.at(bit(code, t.i), bit(code, t.j)));
        }
        std::sort(current.begin(), current.end(), std::greater<>());
        if (code == 0 || std::lexicographical_compare(current.begin(), current.end(),
                                                      best.begin(), best.end())) {
            best.swap(current);
            best_code = code;
        }
    }
    return TruthAssignment::from_code(p.num_vars, best_code);
}

}  // namespace maxnorm
