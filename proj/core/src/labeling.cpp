#include "maxnorm/labeling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "maxnorm/aspvall.hpp"
#include "maxnorm/implication_graph.hpp"
#include "maxnorm/incremental.hpp"

namespace maxnorm {

namespace {

constexpr std::uint64_t kPairwiseKind = std::uint64_t{1} << 62;

std::uint64_t tiebreak_key(bool pairwise, std::uint64_t index, unsigned config) {
    return (pairwise ? kPairwiseKind : 0) | (index << 2) | config;
}

void check_cost(double c, const std::string& where) {
    if (!std::isfinite(c) || c < 0.0) {
        throw InvalidProblem(where + ": term values must be finite and non-negative");
    }
}

}  // namespace

void LabelingProblem::validate() const {
    if (num_vars == 0) {
        throw InvalidProblem("problem has no variables");
    }
    if (unary.size() != num_vars) {
        throw InvalidProblem("expected " + std::to_string(num_vars) + " unary terms, got " +
                             std::to_string(unary.size()));
    }
    for (std::size_t k = 0; k < unary.size(); ++k) {
        for (double c : unary[k].cost) {
            check_cost(c, "unary term " + std::to_string(k + 1));
        }
    }
    std::vector<std::uint64_t> pairs;
    pairs.reserve(pairwise.size());
    for (std::size_t e = 0; e < pairwise.size(); ++e) {
        const PairwiseTerm& t = pairwise[e];
        const std::string where = "pairwise term " + std::to_string(e + 1);
        if (t.i < 1 || t.i > num_vars || t.j < 1 || t.j > num_vars) {
            throw InvalidProblem(where + ": variable index out of range");
        }
        if (t.i == t.j) {
            throw InvalidProblem(where + ": pair of a variable with itself");
        }
        pairs.push_back((std::uint64_t{std::min(t.i, t.j)} << 32) | std::max(t.i, t.j));
        for (double c : t.cost) {
            check_cost(c, where);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    const auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    if (dup != pairs.end()) {
        throw InvalidProblem("duplicate pair (" + std::to_string(*dup >> 32) + ", " +
                             std::to_string(*dup & 0xffffffffU) + ")");
    }
}

std::vector<ClauseItem> clause_sequence(const LabelingProblem& p) {
    std::vector<ClauseItem> items;
    items.reserve(p.num_clauses());
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        for (unsigned a = 0; a < 2; ++a) {
            items.push_back({unit_clause(label_differs(var, a != 0)), p.unary[var - 1].cost[a],
                             tiebreak_key(false, var, a)});
        }
    }
    for (std::size_t e = 0; e < p.pairwise.size(); ++e) {
        const PairwiseTerm& t = p.pairwise[e];
        for (unsigned config = 0; config < 4; ++config) {
            const bool a = (config & 2U) != 0;
            const bool b = (config & 1U) != 0;
            items.push_back({{label_differs(t.i, a), label_differs(t.j, b)}, t.cost[config],
                             tiebreak_key(true, e, config)});
        }
    }
    std::sort(items.begin(), items.end(), [](const ClauseItem& x, const ClauseItem& y) {
        if (x.weight != y.weight) {
            return x.weight > y.weight;
        }
        return x.tiebreak < y.tiebreak;
    });
    return items;
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Incremental:
            return "incremental";
        case Backend::Aspvall:
            return "aspvall";
    }
    return "unknown";
}

Backend parse_backend(std::string_view name) {
    if (name == "incremental") {
        return Backend::Incremental;
    }
    if (name == "aspvall") {
        return Backend::Aspvall;
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

SolveResult solve_sequence(std::size_t num_vars, std::span<const ClauseItem> sequence,
                           Backend backend) {
    using Clock = std::chrono::steady_clock;

    ImplicationGraph g(num_vars);
    SolveResult result;
    result.accepted_mask.resize(sequence.size());

    if (backend == Backend::Incremental) {
        IncrementalSolver solver(num_vars);
        TruthAssignment witness(num_vars);
        const auto start = Clock::now();
        for (std::size_t k = 0; k < sequence.size(); ++k) {
            result.accepted_mask[k] = solver.check_solvable(g, sequence[k].clause, witness);
        }
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        result.labeling = std::move(witness);
        result.total_visited = solver.total_visited();
        result.max_visited = solver.max_visited();
    } else {
        BaselineSolver solver(num_vars);
        const auto start = Clock::now();
        for (std::size_t k = 0; k < sequence.size(); ++k) {
            result.accepted_mask[k] = solver.check_solvable(g, sequence[k].clause);
        }
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        result.labeling = solver.witness();
    }

    result.accepted = static_cast<std::size_t>(
        std::count(result.accepted_mask.begin(), result.accepted_mask.end(), true));
    result.rejected = sequence.size() - result.accepted;
    return result;
}

SolveResult mc_solve(const LabelingProblem& p, Backend backend) {
    p.validate();
    const std::vector<ClauseItem> sequence = clause_sequence(p);
    return solve_sequence(p.num_vars, sequence, backend);
}

double energy_p(const LabelingProblem& p, const TruthAssignment& l, double power) {
    double sum = 0.0;
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        sum += std::pow(p.unary[var - 1].cost[l[var] ? 1 : 0], power);
    }
    for (const PairwiseTerm& t : p.pairwise) {
        sum += std::pow(t.at(l[t.i], l[t.j]), power);
    }
    return sum;
}

double energy_max(const LabelingProblem& p, const TruthAssignment& l) {
    double m = 0.0;
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        m = std::max(m, p.unary[var - 1].cost[l[var] ? 1 : 0]);
    }
    for (const PairwiseTerm& t : p.pairwise) {
        m = std::max(m, t.at(l[t.i], l[t.j]));
    }
    return m;
}

std::vector<double> lexmo_vector(const LabelingProblem& p, const TruthAssignment& l) {
    std::vector<double> v;
    v.reserve(p.num_terms());
    for (std::uint32_t var = 1; var <= p.num_vars; ++var) {
        v.push_back(p.unary[var - 1].cost[l[var] ? 1 : 0]);
    }
    for (const PairwiseTerm& t : p.pairwise) {
        v.push_back(t.at(l[t.i], l[t.j]));
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::weak_ordering lexmo_compare(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("lexmo_compare: vectors differ in length");
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) {
            return std::weak_ordering::less;
        }
        if (a[k] > b[k]) {
            return std::weak_ordering::greater;
        }
    }
    return std::weak_ordering::equivalent;
}

bool is_submodular(const PairwiseTerm& term, double power) {
    const auto f = [power](double x) { return std::pow(x, power); };
    return f(term.cost[0]) + f(term.cost[3]) <= f(term.cost[1]) + f(term.cost[2]);
}

}  // namespace maxnorm
