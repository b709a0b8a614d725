#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxnorm {

/// Raised for malformed problems: zero variables, out-of-range indices,
/// negative or non-finite term values, unparsable files.
class InvalidProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Boolean variable (1-based) with a polarity.
///
/// Literals double as implication-graph vertices: the vertex index is
/// 2*(var-1) + negated, so the complement of a vertex is `vertex ^ 1`.
class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(std::uint32_t var, bool negated)
        : code_(2 * (var - 1) + (negated ? 1U : 0U)) {}

    static constexpr Literal from_vertex(std::uint32_t vertex) {
        Literal l;
        l.code_ = vertex;
        return l;
    }

    constexpr std::uint32_t var() const { return (code_ >> 1) + 1; }
    constexpr bool negated() const { return (code_ & 1U) != 0; }
    constexpr std::uint32_t vertex() const { return code_; }
    constexpr Literal complement() const { return from_vertex(code_ ^ 1U); }

    friend constexpr bool operator==(Literal, Literal) = default;

private:
    std::uint32_t code_ = 0;
};

constexpr Literal pos(std::uint32_t var) { return {var, false}; }
constexpr Literal neg(std::uint32_t var) { return {var, true}; }

constexpr Literal literal_complement(Literal l) { return l.complement(); }

std::string to_string(Literal l);

/// Disjunction of two literals. A unit clause has a == b.
struct Clause {
    Literal a;
    Literal b;

    constexpr bool is_unit() const { return a == b; }
    friend constexpr bool operator==(const Clause&, const Clause&) = default;
};

constexpr Clause unit_clause(Literal l) { return {l, l}; }

/// Total assignment of {0,1} to variables 1..n. Also the binary labeling.
class TruthAssignment {
public:
    TruthAssignment() = default;
    explicit TruthAssignment(std::size_t num_vars, bool value = false)
        : values_(num_vars, value ? 1 : 0) {}

    std::size_t size() const { return values_.size(); }

    bool operator[](std::uint32_t var) const { return values_[var - 1] != 0; }
    void set(std::uint32_t var, bool value) { values_[var - 1] = value ? 1 : 0; }
    void flip(std::uint32_t var) { values_[var - 1] ^= 1; }

    /// Makes `l` evaluate to true.
    void make_true(Literal l) { values_[l.var() - 1] = l.negated() ? 0 : 1; }

    /// Bit k of `code` becomes the value of variable k+1.
    static TruthAssignment from_code(std::size_t num_vars, std::uint64_t code);

    friend bool operator==(const TruthAssignment&, const TruthAssignment&) = default;

private:
    std::vector<std::uint8_t> values_;
};

/// True iff `l` evaluates to true under `t`.
inline bool agrees(Literal l, const TruthAssignment& t) {
    return t[l.var()] != l.negated();
}

inline bool satisfies_clause(const Clause& c, const TruthAssignment& t) {
    return agrees(c.a, t) || agrees(c.b, t);
}

}  // namespace maxnorm
