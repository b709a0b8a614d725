#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <vector>

#include "maxnorm/literal.hpp"

namespace maxnorm {

/// Skew-symmetric implication graph of a 2-CNF formula over n variables.
///
/// Each clause (a | b) contributes the edges ~a -> b and ~b -> a; a unit
/// clause (a | a) contributes the single edge ~a -> a. Duplicate clauses are
/// stored as given.
///
/// Edges live in one arena in insertion order; every vertex threads its
/// out-edges through the arena newest first. Clauses arrive in arbitrary
/// vertex order, so this keeps insertion to two sequential appends plus one
/// head update instead of a per-vertex heap buffer.
class ImplicationGraph {
public:
    static constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

    struct Edge {
        std::uint32_t target;
        std::uint32_t next;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    /// Forward range over the successors of one vertex, newest edge first.
    class SuccessorRange {
    public:
        class iterator {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = std::uint32_t;
            using difference_type = std::ptrdiff_t;
            using pointer = const std::uint32_t*;
            using reference = std::uint32_t;

            iterator() = default;
            iterator(const Edge* edges, std::uint32_t e) : edges_(edges), e_(e) {}

            std::uint32_t operator*() const { return edges_[e_].target; }
            iterator& operator++() {
                e_ = edges_[e_].next;
                return *this;
            }
            iterator operator++(int) {
                iterator old = *this;
                ++*this;
                return old;
            }
            friend bool operator==(const iterator& x, const iterator& y) { return x.e_ == y.e_; }

        private:
            const Edge* edges_ = nullptr;
            std::uint32_t e_ = kNoEdge;
        };

        SuccessorRange(const Edge* edges, std::uint32_t head) : edges_(edges), head_(head) {}

        iterator begin() const { return {edges_, head_}; }
        iterator end() const { return {edges_, kNoEdge}; }
        bool empty() const { return head_ == kNoEdge; }

    private:
        const Edge* edges_;
        std::uint32_t head_;
    };

    /// Throws InvalidProblem when num_vars == 0.
    explicit ImplicationGraph(std::size_t num_vars);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_vertices() const { return head_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    SuccessorRange successors(std::uint32_t vertex) const {
        return {edges_.data(), head_[vertex]};
    }

    /// Raw edge access for traversals that keep their own cursor.
    std::uint32_t first_edge(std::uint32_t vertex) const { return head_[vertex]; }
    const Edge& edge(std::uint32_t e) const { return edges_[e]; }

    std::span<const Clause> clauses() const { return clauses_; }

    /// Adds the clause's edges without any satisfiability check.
    /// Throws std::out_of_range if a literal's variable is not in [1, n].
    void add_clause(const Clause& c);

    /// Undoes the most recent add_clause. Only used to roll back tentative
    /// insertions; general clause retraction is not supported.
    void remove_last_clause();

    /// Pre-allocates room for `num_clauses` more clauses.
    void reserve_clauses(std::size_t num_clauses);

    friend bool operator==(const ImplicationGraph&, const ImplicationGraph&) = default;

private:
    void push_edge(std::uint32_t from, std::uint32_t to);
    void pop_edge(std::uint32_t from);

    std::size_t num_vars_;
    std::vector<std::uint32_t> head_;
    std::vector<Edge> edges_;
    std::vector<Clause> clauses_;
};

/// Edge-wise check: no edge leads from a vertex agreeing with `t` to one
/// that does not.
bool satisfies_formula(const ImplicationGraph& g, const TruthAssignment& t);

/// Clause-by-clause evaluation over the stored clauses.
bool satisfies_all_clauses(const ImplicationGraph& g, const TruthAssignment& t);

}  // namespace maxnorm
