#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "maxnorm/literal.hpp"

namespace maxnorm {

/// Costs of labeling one variable 0 or 1.
struct UnaryTerm {
    std::array<double, 2> cost{};
};

/// Costs of the four joint labels of an adjacent pair, indexed a*2 + b.
struct PairwiseTerm {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::array<double, 4> cost{};

    double at(bool a, bool b) const { return cost[(a ? 2 : 0) + (b ? 1 : 0)]; }
};

/// Binary labeling problem: unary[k] belongs to variable k+1.
struct LabelingProblem {
    std::size_t num_vars = 0;
    std::vector<UnaryTerm> unary;
    std::vector<PairwiseTerm> pairwise;

    std::size_t num_terms() const { return num_vars + pairwise.size(); }
    std::size_t num_clauses() const { return 2 * num_vars + 4 * pairwise.size(); }

    /// Throws InvalidProblem on an empty problem, size mismatch, index out of
    /// range, self-pair, repeated unordered pair, or a negative/non-finite cost.
    void validate() const;
};

/// A configuration-forbidding clause queued for the greedy pass.
///
/// `tiebreak` orders equal weights: unary before pairwise, then variable or
/// edge index, then configuration code.
struct ClauseItem {
    Clause clause;
    double weight = 0.0;
    std::uint64_t tiebreak = 0;
};

/// Literal that is true iff variable `var` does not take label `label`.
constexpr Literal label_differs(std::uint32_t var, bool label) { return {var, label}; }

/// All 2n + 4|N| clauses, by non-increasing weight, ties by tiebreak key.
std::vector<ClauseItem> clause_sequence(const LabelingProblem& p);

enum class Backend { Incremental, Aspvall };

std::string_view backend_name(Backend b);
/// Throws std::invalid_argument for unknown names.
Backend parse_backend(std::string_view name);

struct SolveResult {
    TruthAssignment labeling;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    /// accepted_mask[k] is set iff the k-th clause of the sequence was kept.
    std::vector<bool> accepted_mask;
    /// Wall time of the clause-processing loop only.
    double seconds = 0.0;
    /// Visited-set statistics of the incremental backend (zero otherwise).
    std::uint64_t total_visited = 0;
    std::size_t max_visited = 0;
};

/// Greedy pass over an already ordered clause sequence.
SolveResult solve_sequence(std::size_t num_vars, std::span<const ClauseItem> sequence,
                           Backend backend);

/// Builds the clause sequence and runs the greedy pass. The returned labeling
/// minimizes energy_max over all labelings.
SolveResult mc_solve(const LabelingProblem& p, Backend backend = Backend::Incremental);

double energy_p(const LabelingProblem& p, const TruthAssignment& l, double power);
double energy_max(const LabelingProblem& p, const TruthAssignment& l);

/// The n + |N| applicable term values, sorted non-increasingly.
std::vector<double> lexmo_vector(const LabelingProblem& p, const TruthAssignment& l);

/// Lexicographic comparison of two sorted term vectors; `less` means `a` is
/// preferred. Throws std::invalid_argument on a length mismatch.
std::weak_ordering lexmo_compare(std::span<const double> a, std::span<const double> b);

/// phi(0,0)^p + phi(1,1)^p <= phi(0,1)^p + phi(1,0)^p.
bool is_submodular(const PairwiseTerm& term, double power);

}  // namespace maxnorm
