#pragma once

#include <cstdint>

#include "orthocover/graph.hpp"

/// Brute-force reference answers, written without any of the pruning used by the
/// backtracking solvers so the two can be compared.
namespace orthocover::oracle {

/// Tries every one of the N^(2n) pair assignments. Throws InvalidInput above `limit` assignments.
bool orthogonal_colouring_exists_naive(const Graph& g, std::size_t num_colours,
                                       std::uint64_t limit = 200'000'000);

/// Enumerates every first colouring up to relabelling (restricted growth strings) and asks
/// whether the graph plus a clique on each first-colour class is N-colourable, counting
/// N-colourings by inclusion-exclusion over independent sets. Needs n <= 20 and n * min(N, n) <= 120.
bool orthogonal_colouring_exists(const Graph& g, std::size_t num_colours);

/// Smallest N with orthogonal_colouring_exists; 0 for the empty graph.
std::size_t orthogonal_chromatic_number(const Graph& g);

/// Tries all k^n maps of vertices to transversal indices.
bool independent_covering_exists_naive(const Graph& g, const Partition& p, std::uint64_t limit = 50'000'000);

}  // namespace orthocover::oracle
