#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brute_sat.hpp"
#include "maxnorm/implication_graph.hpp"

namespace maxnorm {
namespace {

bool has_edge(const ImplicationGraph& g, Literal from, Literal to) {
    const auto succ = g.successors(from.vertex());
    return std::find(succ.begin(), succ.end(), to.vertex()) != succ.end();
}

TEST(Literal, ComplementFlipsPolarityOnly) {
    EXPECT_EQ(literal_complement(pos(3)), neg(3));
    EXPECT_EQ(literal_complement(neg(3)), pos(3));
    EXPECT_EQ(literal_complement(literal_complement(pos(1))), pos(1));
    for (std::uint32_t v = 0; v < 64; ++v) {
        const Literal l = Literal::from_vertex(v);
        EXPECT_EQ(l.complement().var(), l.var());
        EXPECT_NE(l.complement().negated(), l.negated());
        EXPECT_EQ(l.complement().complement(), l);
    }
}

TEST(Literal, VertexLayout) {
    EXPECT_EQ(pos(1).vertex(), 0U);
    EXPECT_EQ(neg(1).vertex(), 1U);
    EXPECT_EQ(pos(5).vertex(), 8U);
    EXPECT_EQ(Literal::from_vertex(9), neg(5));
}

TEST(ImplicationGraph, NewGraph) {
    const ImplicationGraph one(1);
    EXPECT_EQ(one.num_vertices(), 2U);
    EXPECT_EQ(one.num_edges(), 0U);
    EXPECT_TRUE(one.clauses().empty());

    const ImplicationGraph grid(4096);
    EXPECT_EQ(grid.num_vertices(), 8192U);
    EXPECT_EQ(grid.num_edges(), 0U);

    EXPECT_THROW(ImplicationGraph(0), InvalidProblem);
}

TEST(ImplicationGraph, BinaryClauseAddsBothImplications) {
    ImplicationGraph g(2);
    g.add_clause({pos(1), pos(2)});
    EXPECT_EQ(g.num_edges(), 2U);
    EXPECT_TRUE(has_edge(g, neg(1), pos(2)));
    EXPECT_TRUE(has_edge(g, neg(2), pos(1)));
    EXPECT_EQ(g.clauses().size(), 1U);
}

TEST(ImplicationGraph, UnitClauseAddsSingleEdge) {
    ImplicationGraph g(1);
    g.add_clause(unit_clause(pos(1)));
    EXPECT_EQ(g.num_edges(), 1U);
    EXPECT_TRUE(has_edge(g, neg(1), pos(1)));
    EXPECT_TRUE(g.successors(pos(1).vertex()).empty());
}

TEST(ImplicationGraph, TwoClausesHandEnumerated) {
    // (x1 | x2) & (~x1 | x2): ~x1->x2, ~x2->x1, x1->x2, ~x2->~x1
    ImplicationGraph g(2);
    g.add_clause({pos(1), pos(2)});
    g.add_clause({neg(1), pos(2)});
    EXPECT_EQ(g.num_edges(), 4U);
    EXPECT_TRUE(has_edge(g, neg(1), pos(2)));
    EXPECT_TRUE(has_edge(g, neg(2), pos(1)));
    EXPECT_TRUE(has_edge(g, pos(1), pos(2)));
    EXPECT_TRUE(has_edge(g, neg(2), neg(1)));
}

TEST(ImplicationGraph, RejectsOutOfRangeVariables) {
    ImplicationGraph g(2);
    EXPECT_THROW(g.add_clause({pos(1), pos(3)}), std::out_of_range);
    EXPECT_THROW(g.add_clause(unit_clause(neg(7))), std::out_of_range);
    EXPECT_EQ(g.num_edges(), 0U);
}

TEST(ImplicationGraph, RemoveLastClauseRestoresState) {
    std::mt19937_64 rng(11);
    ImplicationGraph g(6);
    for (int k = 0; k < 20; ++k) {
        g.add_clause(testing::random_clause(rng, 6));
    }
    const ImplicationGraph before = g;
    g.add_clause(testing::random_clause(rng, 6));
    g.remove_last_clause();
    EXPECT_EQ(g, before);
}

TEST(Agrees, Polarity) {
    TruthAssignment t(2);
    t.set(2, true);
    EXPECT_TRUE(agrees(pos(2), t));
    EXPECT_FALSE(agrees(neg(2), t));
    t.set(2, false);
    EXPECT_TRUE(agrees(neg(2), t));
}

TEST(SatisfiesFormula, Examples) {
    ImplicationGraph empty(3);
    EXPECT_TRUE(satisfies_formula(empty, TruthAssignment(3)));

    ImplicationGraph g(2);
    g.add_clause({pos(1), pos(2)});
    EXPECT_FALSE(satisfies_formula(g, TruthAssignment::from_code(2, 0b00)));
    EXPECT_TRUE(satisfies_formula(g, TruthAssignment::from_code(2, 0b01)));
}

TEST(ImplicationGraphProperty, SkewSymmetryEdgeCountAndEdgewiseCheck) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        ImplicationGraph g(n);
        std::size_t units = 0;
        std::size_t binaries = 0;
        const std::size_t m = rng() % 20;
        for (std::size_t k = 0; k < m; ++k) {
            const Clause c = testing::random_clause(rng, n);
            (c.is_unit() ? units : binaries)++;
            g.add_clause(c);
        }
        ASSERT_EQ(g.num_edges(), 2 * binaries + units);

        for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
            for (std::uint32_t w : g.successors(u)) {
                ASSERT_TRUE(has_edge(g, Literal::from_vertex(w).complement(),
                                     Literal::from_vertex(u).complement()));
            }
        }

        for (int s = 0; s < 8; ++s) {
            const auto t = TruthAssignment::from_code(n, rng());
            ASSERT_EQ(satisfies_formula(g, t), satisfies_all_clauses(g, t));
        }
    }
}

}  // namespace
}  // namespace maxnorm
