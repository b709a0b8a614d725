#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "brute_sat.hpp"
#include "maxnorm/aspvall.hpp"
#include "maxnorm/incremental.hpp"

namespace maxnorm {
namespace {

// Transitive closure by repeated DFS; fine for the tiny graphs used here.
std::vector<std::vector<bool>> reachability(const ImplicationGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : g.successors(v)) {
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

TEST(Scc, EdgelessGraphHasSingletons) {
    const ImplicationGraph g(3);
    const SccResult r = strongly_connected_components(g);
    EXPECT_EQ(r.num_components, 6U);
}

TEST(Scc, TwoCycle) {
    // (~x1 | x2) & (x1 | ~x2): x1 <-> x2 and ~x1 <-> ~x2.
    ImplicationGraph g(2);
    g.add_clause({neg(1), pos(2)});
    g.add_clause({pos(1), neg(2)});
    const SccResult r = strongly_connected_components(g);
    EXPECT_EQ(r.num_components, 2U);
    EXPECT_EQ(r.component[pos(1).vertex()], r.component[pos(2).vertex()]);
    EXPECT_EQ(r.component[neg(1).vertex()], r.component[neg(2).vertex()]);
}

TEST(Scc, TwoClauseFormulaSeparatesX2) {
    // (x1 | x2) & (~x1 | x2): ~x2 -> x1 -> x2 and ~x2 -> ~x1 -> x2, acyclic.
    ImplicationGraph g(2);
    g.add_clause({pos(1), pos(2)});
    g.add_clause({neg(1), pos(2)});
    const SccResult r = strongly_connected_components(g);
    EXPECT_EQ(r.num_components, 4U);
    EXPECT_NE(r.component[neg(2).vertex()], r.component[pos(2).vertex()]);
    // x2 is a sink, ~x2 a source.
    EXPECT_LT(r.component[pos(2).vertex()], r.component[pos(1).vertex()]);
    EXPECT_LT(r.component[pos(1).vertex()], r.component[neg(2).vertex()]);
}

TEST(SccProperty, ComponentsAreMutualReachabilityInReverseTopologicalOrder) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        ImplicationGraph g(n);
        const std::size_t m = rng() % (3 * n + 1);
        for (std::size_t k = 0; k < m; ++k) {
            g.add_clause(testing::random_clause(rng, n));
        }
        const SccResult r = strongly_connected_components(g);
        const auto reach = reachability(g);
        for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
            for (std::uint32_t w = 0; w < g.num_vertices(); ++w) {
                ASSERT_EQ(r.component[u] == r.component[w], reach[u][w] && reach[w][u]);
            }
            for (std::uint32_t w : g.successors(u)) {
                if (r.component[u] != r.component[w]) {
                    ASSERT_LT(r.component[w], r.component[u]);
                }
            }
        }
    }
}

TEST(Scc, LongChainDoesNotRecurse) {
    const std::size_t n = 1'000'000;
    ImplicationGraph g(n);
    for (std::uint32_t v = 1; v < n; ++v) {
        g.add_clause({neg(v), pos(v + 1)});  // x_v -> x_{v+1}
    }
    const SccResult r = strongly_connected_components(g);
    EXPECT_EQ(r.num_components, 2 * n);
    EXPECT_LT(r.component[pos(n).vertex()], r.component[pos(1).vertex()]);
}

TEST(AspvallSolve, Examples) {
    ImplicationGraph g(2);
    g.add_clause({pos(1), pos(2)});
    g.add_clause({neg(1), pos(2)});
    g.add_clause({pos(1), neg(2)});
    const AspvallResult sat = aspvall_solve(g);
    ASSERT_TRUE(sat.satisfiable);
    EXPECT_EQ(*sat.witness, TruthAssignment(2, true));

    g.add_clause({neg(1), neg(2)});
    const AspvallResult unsat = aspvall_solve(g);
    EXPECT_FALSE(unsat.satisfiable);
    EXPECT_FALSE(unsat.witness.has_value());

    EXPECT_TRUE(aspvall_solve(ImplicationGraph(4)).satisfiable);
}

TEST(AspvallSolveProperty, MatchesBruteForce) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        ImplicationGraph g(n);
        const std::size_t m = rng() % (2 * n + 3);
        for (std::size_t k = 0; k < m; ++k) {
            g.add_clause(testing::random_clause(rng, n));
        }
        const AspvallResult r = aspvall_solve(g);
        ASSERT_EQ(r.satisfiable, testing::brute_force_sat(n, g.clauses())) << "trial " << trial;
        if (r.satisfiable) {
            ASSERT_TRUE(satisfies_formula(g, *r.witness));
            ASSERT_TRUE(satisfies_all_clauses(g, *r.witness));
        }
    }
}

TEST(BaselineCheckSolvable, SameOutcomesAsIncrementalExamples) {
    {
        ImplicationGraph g(2);
        EXPECT_TRUE(baseline_check_solvable(g, {pos(1), pos(2)}));
        EXPECT_EQ(g.num_edges(), 2U);
    }
    {
        ImplicationGraph g(1);
        g.add_clause(unit_clause(pos(1)));
        const ImplicationGraph before = g;
        EXPECT_FALSE(baseline_check_solvable(g, unit_clause(neg(1))));
        EXPECT_EQ(g, before);
    }
    {
        ImplicationGraph g(2);
        g.add_clause({neg(1), pos(2)});
        g.add_clause(unit_clause(pos(1)));
        const ImplicationGraph before = g;
        EXPECT_FALSE(baseline_check_solvable(g, unit_clause(neg(2))));
        EXPECT_EQ(g, before);
    }
}

TEST(BaselineProperty, AgreesWithIncrementalStepByStep) {
    std::mt19937_64 rng(41);
    for (int run = 0; run < 300; ++run) {
        const std::size_t n = 1 + rng() % 12;
        ImplicationGraph gi(n);
        ImplicationGraph gb(n);
        TruthAssignment t(n);
        IncrementalSolver inc(n);
        BaselineSolver base(n);
        for (int k = 0; k < 40; ++k) {
            const Clause c = testing::random_clause(rng, n);
            ASSERT_EQ(inc.check_solvable(gi, c, t), base.check_solvable(gb, c));
            ASSERT_EQ(gi.clauses().size(), gb.clauses().size());
            ASSERT_TRUE(satisfies_formula(gb, base.witness()));
        }
    }
}

}  // namespace
}  // namespace maxnorm
