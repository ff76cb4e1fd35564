#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthocover/graph.hpp"

namespace orthocover {

/// Raised when an input falls outside the range a construction is guaranteed to handle.
class PreconditionFailed : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

struct HallCovering {
    OrthogonalColouring colouring;
    Covering covering;
    /// Smallest available-colour set seen while colouring class m, indexed by m (0-based).
    std::vector<std::size_t> min_available;
};

/// Independent covering of an [n,k,k]-partite graph with n <= ceil(k/2), with respect to `p`.
///
/// The first colouring is the class index. The second colours class 0 by position and every
/// later class by a perfect matching between its vertices and the colours not yet used on
/// their neighbours, found with augmenting paths. Each colour then appears once per class,
/// so the second-colour classes are the transversals.
///
/// Throws PreconditionFailed when `p` is not an [n,k,k]-partition of `g` or n > ceil(k/2).
HallCovering hall_covering(const Graph& g, const Partition& p);

/// Checks the [n,k,r]-partite shape of (g, p) with r = k. Returns the first violation.
std::optional<std::string> nkk_violation(const Graph& g, const Partition& p);

/// Orthogonal colouring of the double star D_m with N = ceil(sqrt(m)) colours.
///
/// Roots get (0,0) and (1,1); leaves get the pairs of the maximal pattern for N truncated to
/// m/2-1 leaves per side. Throws PreconditionFailed when m >= N^2-1, where N+1 colours are needed.
OrthogonalColouring double_star_colouring(std::size_t m);

struct SwapOptions {
    /// Run even when the degree bound does not hold; the result may then be invalid.
    bool force = false;
    /// Re-check prefix properness and pair distinctness after every step.
    bool check_invariants = false;
};

/// One repaired conflict of the degenerate swap algorithm.
struct SwapStep {
    std::size_t position = 0;  // t, 0-based index in the degenerate ordering
    Vertex vertex = 0;         // v_t
    std::optional<Vertex> swapped_with;
    std::size_t earlier_neighbours = 0;  // |N_t(v_t)|
    std::size_t conflict_set = 0;        // |W|
    std::size_t same_colour_set = 0;     // |Y_t|
    std::size_t blocked = 0;             // |N(Y_t)|
    std::size_t candidates = 0;          // |X|
    bool vertex_in_conflict_set = false;
};

struct SwapResult {
    OrthogonalColouring colouring;
    std::size_t degeneracy = 0;
    std::size_t max_degree = 0;
    std::vector<Vertex> ordering;
    std::vector<SwapStep> steps;
    /// False only under `force`, when a conflict could not be repaired.
    bool valid = true;
};

/// Whether (2*max_degree + 2*degeneracy + 1)^2 < n, the bound that guarantees success.
bool degenerate_swap_applicable(std::size_t n, std::size_t max_degree, std::size_t degeneracy);

/// ceil(sqrt(n))-colour orthogonal colouring of a graph with small maximum degree relative to n.
///
/// Vertices are taken in degenerate order starting from the row-major assignment of distinct
/// pairs. When v_t clashes with an earlier neighbour it trades pairs with the smallest vertex
/// that neither shares a coordinate with an earlier neighbour of v_t nor is adjacent to a vertex
/// sharing a coordinate with v_t.
///
/// Throws PreconditionFailed when the bound fails (unless `force`), and std::logic_error if
/// an invariant breaks.
SwapResult degenerate_swap_colouring(const Graph& g, const SwapOptions& options = {});

}  // namespace orthocover
