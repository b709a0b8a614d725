#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxnorm/implication_graph.hpp"

namespace maxnorm {

/// Component id per vertex. Ids follow reverse topological order of the
/// condensation: an edge between distinct components always goes from a
/// larger id to a smaller one.
struct SccResult {
    std::vector<std::uint32_t> component;
    std::uint32_t num_components = 0;
};

/// Iterative Tarjan with reusable scratch buffers.
class SccFinder {
public:
    const SccResult& run(const ImplicationGraph& g);

private:
    struct Frame {
        std::uint32_t vertex;
        std::uint32_t next_edge;
    };

    SccResult result_;
    std::vector<std::uint32_t> index_;
    std::vector<std::uint32_t> lowlink_;
    std::vector<std::uint8_t> on_stack_;
    std::vector<std::uint32_t> stack_;
    std::vector<Frame> frames_;
};

SccResult strongly_connected_components(const ImplicationGraph& g);

struct AspvallResult {
    bool satisfiable = false;
    std::optional<TruthAssignment> witness;
};

/// From-scratch 2-SAT decision via SCCs.
AspvallResult aspvall_solve(const ImplicationGraph& g);

/// Per-clause baseline: adds `c` tentatively, re-solves the whole formula,
/// and rolls the clause back if it made the formula unsatisfiable.
class BaselineSolver {
public:
    explicit BaselineSolver(std::size_t num_vars) : witness_(num_vars) {}

    bool check_solvable(ImplicationGraph& g, const Clause& c);

    /// Witness from the most recent satisfiable solve (all-zeros initially).
    const TruthAssignment& witness() const { return witness_; }

private:
    bool solve(const ImplicationGraph& g);

    SccFinder scc_;
    TruthAssignment witness_;
};

/// Stateless form of BaselineSolver::check_solvable.
bool baseline_check_solvable(ImplicationGraph& g, const Clause& c);

}  // namespace maxnorm
