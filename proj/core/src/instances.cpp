#include "maxnorm/instances.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace maxnorm {

namespace {

std::vector<PairwiseTerm> grid_edges(std::size_t width, std::size_t height) {
    std::vector<PairwiseTerm> edges;
    edges.reserve(width * (height - 1) + height * (width - 1));
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const auto v = static_cast<std::uint32_t>(y * width + x + 1);
            if (x + 1 < width) {
                edges.push_back({v, v + 1, {}});
            }
            if (y + 1 < height) {
                edges.push_back({v, static_cast<std::uint32_t>(v + width), {}});
            }
        }
    }
    return edges;
}

double draw_weight(std::mt19937_64& rng, unsigned levels) {
    const double u = uniform01(rng);
    if (levels == 0) {
        return u;
    }
    return static_cast<double>(static_cast<unsigned>(u * levels)) / levels;
}

// Moves the two largest values to (0,0) and (1,1).
void make_non_submodular(PairwiseTerm& t) {
    std::array<double, 4> v = t.cost;
    std::sort(v.begin(), v.end());
    t.cost = {v[3], v[0], v[1], v[2]};
}

bool all_distinct(const LabelingProblem& p) {
    std::vector<double> w;
    w.reserve(p.num_clauses());
    for (const UnaryTerm& u : p.unary) {
        w.insert(w.end(), u.cost.begin(), u.cost.end());
    }
    for (const PairwiseTerm& t : p.pairwise) {
        w.insert(w.end(), t.cost.begin(), t.cost.end());
    }
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

}  // namespace

std::size_t grid_num_clauses(std::size_t width, std::size_t height) {
    return 2 * width * height + 4 * (width * (height - 1) + height * (width - 1));
}

LabelingProblem gen_grid_instance(const GridSpec& spec) {
    if (spec.width == 0 || spec.height == 0) {
        throw InvalidProblem("grid dimensions must be at least 1");
    }
    LabelingProblem p;
    p.num_vars = spec.width * spec.height;
    p.pairwise = grid_edges(spec.width, spec.height);
    p.unary.resize(p.num_vars);

    std::mt19937_64 rng(spec.seed);
    for (UnaryTerm& u : p.unary) {
        u.cost[0] = uniform01(rng);
        u.cost[1] = uniform01(rng);
    }
    for (PairwiseTerm& t : p.pairwise) {
        for (double& c : t.cost) {
            c = uniform01(rng);
        }
    }
    return p;
}

LabelingProblem gen_random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opts) {
    if (opts.num_vars == 0) {
        throw InvalidProblem("random instance needs at least one variable");
    }
    const std::size_t n = opts.num_vars;

    for (;;) {
        LabelingProblem p;
        p.num_vars = n;
        if (opts.shape == GraphShape::Grid) {
            std::vector<std::size_t> widths;
            for (std::size_t w = 1; w <= n; ++w) {
                if (n % w == 0) {
                    widths.push_back(w);
                }
            }
            const std::size_t w = widths[rng() % widths.size()];
            p.pairwise = grid_edges(w, n / w);
        } else {
            for (std::uint32_t i = 1; i <= n; ++i) {
                for (std::uint32_t j = i + 1; j <= n; ++j) {
                    if (uniform01(rng) < opts.edge_density) {
                        // Random orientation so both (i, j) orders get exercised.
                        if (rng() & 1U) {
                            p.pairwise.push_back({i, j, {}});
                        } else {
                            p.pairwise.push_back({j, i, {}});
                        }
                    }
                }
            }
        }

        p.unary.resize(n);
        for (UnaryTerm& u : p.unary) {
            u.cost = {draw_weight(rng, opts.quantize_levels), draw_weight(rng, opts.quantize_levels)};
        }
        for (PairwiseTerm& t : p.pairwise) {
            for (double& c : t.cost) {
                c = draw_weight(rng, opts.quantize_levels);
            }
            if (opts.non_submodular_fraction > 0.0 &&
                uniform01(rng) < opts.non_submodular_fraction) {
                make_non_submodular(t);
            }
        }

        if (!opts.distinct_weights || all_distinct(p)) {
            return p;
        }
    }
}

}  // namespace maxnorm
