#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "orthocover/graph.hpp"

namespace orthocover::testing {

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

// Sorted component sizes via depth-first search.
inline std::vector<std::size_t> component_sizes(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> sizes;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        std::size_t size = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbours(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

inline bool is_tree(const Graph& g) {
    return g.order() > 0 && g.size() + 1 == g.order() && component_sizes(g).size() == 1;
}

// Degeneracy as the largest minimum degree over all induced subgraphs; n <= 16.
inline std::size_t brute_force_degeneracy(const Graph& g) {
    const auto n = g.order();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t min_degree = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            std::size_t d = 0;
            for (Vertex w : g.neighbours(v)) d += mask >> w & 1;
            min_degree = std::min(min_degree, d);
        }
        best = std::max(best, min_degree);
    }
    return best;
}

}  // namespace orthocover::testing
