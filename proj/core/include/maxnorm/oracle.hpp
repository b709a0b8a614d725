#pragma once

#include <cstddef>

#include "maxnorm/labeling.hpp"

namespace maxnorm {

inline constexpr std::size_t kMaxOracleVars = 25;
inline constexpr std::size_t kMaxLexmoOracleVars = 20;

struct OracleResult {
    double value = 0.0;
    TruthAssignment argmin;
};

/// Exhaustive minimum of energy_max. Labelings are enumerated as binary
/// codes from 0 (bit k = label of variable k+1) and the first minimizer
/// wins. Throws std::invalid_argument above kMaxOracleVars.
OracleResult brute_force_min_energy(const LabelingProblem& p);

/// Exhaustive Lex-MO optimum, same enumeration and tie rule.
/// Throws std::invalid_argument above kMaxLexmoOracleVars.
TruthAssignment brute_force_lexmo_best(const LabelingProblem& p);

}  // namespace maxnorm
