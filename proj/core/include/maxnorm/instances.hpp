#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "maxnorm/labeling.hpp"

namespace maxnorm {

/// Uniform double in [0, 1): the top 53 bits of one mt19937_64 draw times
/// 2^-53. Spelled out so instances do not depend on the standard library's
/// distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct GridSpec {
    std::size_t width = 1;
    std::size_t height = 1;
    std::uint64_t seed = 0;
};

/// Closed-form clause count 2WH + 4(W(H-1) + H(W-1)).
std::size_t grid_num_clauses(std::size_t width, std::size_t height);

/// Random W x H grid with 4-connectivity.
///
/// Pixel (x, y) is variable y*W + x + 1. Pairwise terms are emitted in
/// row-major pixel order, right neighbour before lower neighbour. Weights are
/// drawn from mt19937_64(seed) via uniform01: first phi0, phi1 for every
/// variable in order, then phi00, phi01, phi10, phi11 for every pair in order.
LabelingProblem gen_grid_instance(const GridSpec& spec);

enum class GraphShape { Grid, Sparse };

struct RandomInstanceOptions {
    std::size_t num_vars = 8;
    GraphShape shape = GraphShape::Sparse;
    /// Expected fraction of all n(n-1)/2 pairs present (Sparse only).
    double edge_density = 0.3;
    /// Probability that a pairwise term is rearranged to violate
    /// submodularity at p = 1.
    double non_submodular_fraction = 0.0;
    /// When > 0, weights are multiples of 1/levels, producing many ties.
    unsigned quantize_levels = 0;
    /// Redraw until all 2n + 4|N| weights are pairwise distinct.
    bool distinct_weights = false;
};

/// Small random problem for oracle comparisons. Grid shapes pick a random
/// W x H with W*H == num_vars when possible (falling back to 1 x n).
LabelingProblem gen_random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opts);

}  // namespace maxnorm
