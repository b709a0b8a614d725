#include "maxnorm/implication_graph.hpp"

#include <string>

namespace maxnorm {

std::string to_string(Literal l) {
    return (l.negated() ? "~x" : "x") + std::to_string(l.var());
}

TruthAssignment TruthAssignment::from_code(std::size_t num_vars, std::uint64_t code) {
    TruthAssignment t(num_vars);
    for (std::size_t k = 0; k < num_vars; ++k) {
        t.values_[k] = static_cast<std::uint8_t>((code >> k) & 1U);
    }
    return t;
}

ImplicationGraph::ImplicationGraph(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) {
        throw InvalidProblem("implication graph needs at least one variable");
    }
    head_.assign(2 * num_vars, kNoEdge);
}

void ImplicationGraph::push_edge(std::uint32_t from, std::uint32_t to) {
    edges_.push_back({to, head_[from]});
    head_[from] = static_cast<std::uint32_t>(edges_.size() - 1);
}

void ImplicationGraph::pop_edge(std::uint32_t from) {
    // The newest edge is always the head of its source's list.
    head_[from] = edges_.back().next;
    edges_.pop_back();
}

void ImplicationGraph::add_clause(const Clause& c) {
    if (c.a.var() < 1 || c.a.var() > num_vars_ || c.b.var() < 1 || c.b.var() > num_vars_) {
        throw std::out_of_range("clause variable outside [1, n]");
    }
    push_edge(c.a.complement().vertex(), c.b.vertex());
    if (!c.is_unit()) {
        push_edge(c.b.complement().vertex(), c.a.vertex());
    }
    clauses_.push_back(c);
}

void ImplicationGraph::remove_last_clause() {
    const Clause c = clauses_.back();
    clauses_.pop_back();
    if (!c.is_unit()) {
        pop_edge(c.b.complement().vertex());
    }
    pop_edge(c.a.complement().vertex());
}

void ImplicationGraph::reserve_clauses(std::size_t num_clauses) {
    edges_.reserve(edges_.size() + 2 * num_clauses);
    clauses_.reserve(clauses_.size() + num_clauses);
}

bool satisfies_formula(const ImplicationGraph& g, const TruthAssignment& t) {
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    for (std::uint32_t u = 0; u < n; ++u) {
        if (!agrees(Literal::from_vertex(u), t)) {
            continue;
        }
        for (std::uint32_t w : g.successors(u)) {
            if (!agrees(Literal::from_vertex(w), t)) {
                return false;
            }
        }
    }
    return true;
}

bool satisfies_all_clauses(const ImplicationGraph& g, const TruthAssignment& t) {
    for (const Clause& c : g.clauses()) {
        if (!satisfies_clause(c, t)) {
            return false;
        }
    }
    return true;
}

}  // namespace maxnorm
