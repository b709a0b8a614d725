#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "maxnorm/labeling.hpp"

namespace maxnorm {

struct VerifyOptions {
    std::size_t trials = 1000;
    std::size_t max_n = 12;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    std::size_t trials = 0;
    std::size_t failed_trials = 0;
    /// Outer-loop steps whose accept/reject decision was compared.
    std::size_t steps = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed_trials == 0; }
};

/// Checks one problem: both backends reach the brute-force optimum of
/// energy_max, accept identical clause sets, and return a labeling that
/// satisfies every accepted clause with every variable pinned. Appends a
/// message to `failures` per violated property; returns true if none.
bool verify_instance(const LabelingProblem& p, std::vector<std::string>& failures,
                     std::size_t* steps = nullptr);

/// Randomized suite over grids and sparse graphs with n <= max_n, mixing
/// continuous, heavily tied and non-submodular weights.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace maxnorm
