#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthocover/graph.hpp"

namespace orthocover {

inline constexpr std::uint64_t default_budget = 100'000'000;

/// Search-tree node limit shared by every search it is passed to.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

    std::uint64_t max_nodes() const { return max_nodes_; }
    std::uint64_t used() const { return used_; }
    bool exhausted() const { return used_ >= max_nodes_; }

    /// Charges one node; false once the limit has been reached.
    bool charge() {
        if (used_ >= max_nodes_) {
            return false;
        }
        ++used_;
        return true;
    }

private:
    std::uint64_t max_nodes_;
    std::uint64_t used_ = 0;
};

enum class SearchStatus { Found, ProvedNone, Inconclusive };

const char* to_string(SearchStatus status);

/// ProvedNone is only reported after the search space was exhausted within budget.
template <class T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<T> witness;
    std::uint64_t nodes_used = 0;

    bool found() const { return status == SearchStatus::Found; }

    static SearchOutcome make_found(T value, std::uint64_t nodes) {
        return {SearchStatus::Found, std::move(value), nodes};
    }
    static SearchOutcome make_none(std::uint64_t nodes) { return {SearchStatus::ProvedNone, std::nullopt, nodes}; }
    static SearchOutcome make_inconclusive(std::uint64_t nodes) {
        return {SearchStatus::Inconclusive, std::nullopt, nodes};
    }
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Backtracking over vertices (vertex 0 first, fixed to (0,0); the rest by descending degree,
/// ties by id). Prunes on properness in both coordinates, pair reuse, first-use order of new
/// colours in each coordinate, and a matching check that the unassigned vertices can still
/// receive distinct feasible pairs. Colour counts above 64 are rejected.
SearchOutcome<OrthogonalColouring> find_orthogonal_colouring(const Graph& g, std::size_t num_colours,
                                                             SearchBudget& budget);

struct OchiResult {
    std::size_t value = 0;
    OrthogonalColouring witness;
};

/// Tries N = ceil(sqrt(n)), ceil(sqrt(n))+1, ... and returns the first N with a witness.
/// Only Found or Inconclusive are possible. The empty graph has value 0.
SearchOutcome<OchiResult> ochi(const Graph& g, SearchBudget& budget);

/// Assigns every vertex a transversal index 0..k-1, class by class, with the first class
/// placed in order. Requires equal class sizes k <= 64 and independent classes.
SearchOutcome<Covering> find_independent_covering(const Graph& g, const Partition& p, SearchBudget& budget);

/// True iff the n^2-vertex graph has an orthogonal colouring with n colours.
/// Throws InvalidInput for a non-square order and BudgetExhausted when the search is cut off.
bool perfect_orthogonal_check(const Graph& g, SearchBudget& budget);

/// Result of constraint propagation on a partial assignment of vertices to transversals.
struct TransversalPropagation {
    /// Bitmask of transversal indices still possible for each vertex.
    std::vector<std::uint64_t> domains;
    /// Deductions in the order they were made, e.g. "y2 -> T1".
    std::vector<std::string> trace;
    /// Set when propagation reached a contradiction.
    std::optional<std::string> contradiction;

    std::optional<std::size_t> assigned(Vertex v) const;
};

/// Propagates the two covering rules (one vertex per class in each transversal, adjacent
/// vertices in different transversals) from the given fixed vertices until a fixpoint or a
/// contradiction. Vertex names are used in the trace when provided.
TransversalPropagation propagate_transversals(const Graph& g, const Partition& p,
                                              const std::vector<std::optional<std::size_t>>& fixed,
                                              const std::vector<std::string>& names = {});

}  // namespace orthocover
