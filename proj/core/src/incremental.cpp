#include "maxnorm/incremental.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace maxnorm {

IncrementalSolver::IncrementalSolver(std::size_t num_vars) : stamp_(2 * num_vars, 0) {
    queue_.reserve(64);
}

void IncrementalSolver::next_epoch() {
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
}

void IncrementalSolver::record_visit_count(std::size_t count) {
    last_visited_ = count;
    total_visited_ += count;
    max_visited_ = std::max(max_visited_, count);
    ++num_queries_;
}

bool IncrementalSolver::solve_with_assumptions(const ImplicationGraph& g,
                                               std::span<const Literal> assumptions,
                                               TruthAssignment& witness) {
    if (stamp_.size() < g.num_vertices()) {
        stamp_.resize(g.num_vertices(), 0);
    }
    if (check_contracts_) {
        if (witness.size() != g.num_vars() || !satisfies_formula(g, witness)) {
            throw ContractViolation("witness does not satisfy the formula");
        }
        for (Literal a : assumptions) {
            if (std::find(assumptions.begin(), assumptions.end(), a.complement()) !=
                assumptions.end()) {
                throw ContractViolation("assumption set contains a complementary pair");
            }
        }
    }

    next_epoch();
    queue_.clear();
    for (Literal a : assumptions) {
        if (!in_visited(a.vertex())) {
            stamp_[a.vertex()] = epoch_;
            queue_.push_back(a.vertex());
        }
    }

    // FIFO over queue_; everything ever pushed is the visited set.
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const std::uint32_t v = queue_[head];
        if (agrees(Literal::from_vertex(v), witness)) {
            continue;
        }
        for (std::uint32_t w : g.successors(v)) {
            if (in_visited(w ^ 1U)) {
                record_visit_count(queue_.size());
                return false;
            }
            if (!in_visited(w)) {
                stamp_[w] = epoch_;
                queue_.push_back(w);
            }
        }
    }

    for (std::uint32_t v : queue_) {
        witness.make_true(Literal::from_vertex(v));
    }
    record_visit_count(queue_.size());
    return true;
}

bool IncrementalSolver::check_solvable(ImplicationGraph& g, const Clause& c,
                                       TruthAssignment& witness) {
    if (c.a.var() > g.num_vars() || c.b.var() > g.num_vars()) {
        throw std::out_of_range("clause variable outside [1, n]");
    }
    bool satisfiable = satisfies_clause(c, witness);
    if (!satisfiable) {
        if (c.is_unit()) {
            const std::array<Literal, 1> a{c.a};
            satisfiable = solve_with_assumptions(g, a, witness);
        } else {
            const std::array<std::array<Literal, 2>, 3> sets{{
                {c.a, c.b},
                {c.a.complement(), c.b},
                {c.a, c.b.complement()},
            }};
            for (const auto& a : sets) {
                if (solve_with_assumptions(g, a, witness)) {
                    satisfiable = true;
                    break;
                }
            }
        }
    }
    if (satisfiable) {
        g.add_clause(c);
    }
    return satisfiable;
}

}  // namespace maxnorm
