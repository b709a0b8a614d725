#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "maxnorm/implication_graph.hpp"

namespace maxnorm {

/// Raised by the optional contract checks when a caller passes a witness
/// that does not satisfy the graph, or a self-conflicting assumption set.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Incremental 2-SAT under assumptions, driven by a witness assignment that
/// satisfies the current formula.
///
/// A query only explores the vertices reachable from the assumptions without
/// leaving a vertex that already agrees with the witness. The visited set is
/// an epoch-stamped array, so each query costs time proportional to the
/// explored region rather than to the graph size.
///
/// One instance serves graphs of up to `num_vars` variables and must not be
/// shared between threads.
class IncrementalSolver {
public:
    explicit IncrementalSolver(std::size_t num_vars);

    /// Returns true iff the formula of `g` stays satisfiable with every
    /// literal of `assumptions` forced true. On success `witness` is updated
    /// to a satisfying assignment that agrees with all assumptions; on
    /// failure it is left untouched. `g` is never modified.
    ///
    /// Requires `witness` to satisfy `g` and `assumptions` to contain no
    /// complementary pair; checked only when contract checks are enabled.
    bool solve_with_assumptions(const ImplicationGraph& g,
                                std::span<const Literal> assumptions,
                                TruthAssignment& witness);

    /// Adds `c` to `g` iff the resulting formula is satisfiable, keeping
    /// `witness` satisfying. Assumption sets are tried in the order
    /// {a, b}, {~a, b}, {a, ~b} ({a} for unit clauses). On false, `g` and
    /// `witness` are unchanged.
    bool check_solvable(ImplicationGraph& g, const Clause& c, TruthAssignment& witness);

    /// Enables O(V + E) precondition checks that throw ContractViolation.
    /// Defaults to on in builds without NDEBUG.
    void set_contract_checks(bool enabled) { check_contracts_ = enabled; }

    /// Vertices inserted into the visited set by the last query.
    std::size_t last_visited() const { return last_visited_; }
    std::uint64_t total_visited() const { return total_visited_; }
    std::size_t max_visited() const { return max_visited_; }
    std::uint64_t num_queries() const { return num_queries_; }

private:
    bool in_visited(std::uint32_t vertex) const { return stamp_[vertex] == epoch_; }
    void next_epoch();
    void record_visit_count(std::size_t count);

    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> queue_;
    std::uint32_t epoch_ = 0;

#ifdef NDEBUG
    bool check_contracts_ = false;
#else
    bool check_contracts_ = true;
#endif

    std::size_t last_visited_ = 0;
    std::uint64_t total_visited_ = 0;
    std::size_t max_visited_ = 0;
    std::uint64_t num_queries_ = 0;
};

}  // namespace maxnorm
