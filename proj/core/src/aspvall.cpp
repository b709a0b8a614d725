#include "maxnorm/aspvall.hpp"

#include <algorithm>
#include <limits>

namespace maxnorm {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// x_i is true iff its component comes after ~x_i topologically, i.e. has the
// smaller reverse-topological id.
bool assign_from_components(const SccResult& scc, TruthAssignment& out) {
    const auto num_vars = static_cast<std::uint32_t>(out.size());
    for (std::uint32_t var = 1; var <= num_vars; ++var) {
        const std::uint32_t p = scc.component[pos(var).vertex()];
        const std::uint32_t q = scc.component[neg(var).vertex()];
        if (p == q) {
            return false;
        }
        out.set(var, p < q);
    }
    return true;
}

}  // namespace

const SccResult& SccFinder::run(const ImplicationGraph& g) {
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    index_.assign(n, kUnvisited);
    lowlink_.assign(n, 0);
    on_stack_.assign(n, 0);
    result_.component.assign(n, 0);
    result_.num_components = 0;
    stack_.clear();
    frames_.clear();

    std::uint32_t next_index = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index_[root] != kUnvisited) {
            continue;
        }
        index_[root] = lowlink_[root] = next_index++;
        stack_.push_back(root);
        on_stack_[root] = 1;
        frames_.push_back({root, g.first_edge(root)});

        while (!frames_.empty()) {
            Frame& f = frames_.back();
            if (f.next_edge != ImplicationGraph::kNoEdge) {
                const ImplicationGraph::Edge& e = g.edge(f.next_edge);
                f.next_edge = e.next;
                const std::uint32_t w = e.target;
                if (index_[w] == kUnvisited) {
                    index_[w] = lowlink_[w] = next_index++;
                    stack_.push_back(w);
                    on_stack_[w] = 1;
                    frames_.push_back({w, g.first_edge(w)});  // invalidates f
                } else if (on_stack_[w]) {
                    lowlink_[f.vertex] = std::min(lowlink_[f.vertex], index_[w]);
                }
                continue;
            }

            const std::uint32_t v = f.vertex;
            frames_.pop_back();
            if (lowlink_[v] == index_[v]) {
                std::uint32_t w;
                do {
                    w = stack_.back();
                    stack_.pop_back();
                    on_stack_[w] = 0;
                    result_.component[w] = result_.num_components;
                } while (w != v);
                ++result_.num_components;
            }
            if (!frames_.empty()) {
                const std::uint32_t parent = frames_.back().vertex;
                lowlink_[parent] = std::min(lowlink_[parent], lowlink_[v]);
            }
        }
    }
    return result_;
}

SccResult strongly_connected_components(const ImplicationGraph& g) {
    SccFinder finder;
    return finder.run(g);
}

AspvallResult aspvall_solve(const ImplicationGraph& g) {
    const SccResult scc = strongly_connected_components(g);
    TruthAssignment t(g.num_vars());
    if (!assign_from_components(scc, t)) {
        return {};
    }
    return {true, std::move(t)};
}

bool BaselineSolver::solve(const ImplicationGraph& g) {
    const SccResult& scc = scc_.run(g);
    TruthAssignment t(g.num_vars());
    if (!assign_from_components(scc, t)) {
        return false;
    }
    witness_ = std::move(t);
    return true;
}

bool BaselineSolver::check_solvable(ImplicationGraph& g, const Clause& c) {
    g.add_clause(c);
    if (solve(g)) {
        return true;
    }
    g.remove_last_clause();
    return false;
}

bool baseline_check_solvable(ImplicationGraph& g, const Clause& c) {
    BaselineSolver solver(g.num_vars());
    return solver.check_solvable(g, c);
}

}  // namespace maxnorm
