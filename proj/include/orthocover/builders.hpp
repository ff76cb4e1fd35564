#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orthocover/graph.hpp"

namespace orthocover {

struct PartitionedGraph {
    Graph graph;
    Partition partition;
};

struct NamedGraph {
    std::string name;
    Graph graph;
    Partition partition;
};

/// [n,k,r]-partite generation parameters: `parts` classes of `part_size`
/// vertices with a matching of `matching_size` edges between every class pair.
struct PartiteSpec {
    std::size_t parts = 0;
    std::size_t part_size = 0;
    std::size_t matching_size = 0;
    std::uint64_t seed = 0;
};

/// The counterexample [3,3,3]-partite graph with ids x0,x1,x2,y0,y1,y2,z0,z1,z2 = 0..8
/// and partition {x*},{y*},{z*}.
PartitionedGraph figure1_graph();

/// G1 = 3K_3, G2 = C_9, G3 = K_3 u C_6 on the x/y/z vertex layout with the {x*},{y*},{z*} partition.
std::vector<NamedGraph> three_333_graphs();

/// Names x0..x2, y0..y2, z0..z2 for the nine-vertex graphs.
std::vector<std::string> xyz_vertex_names();

/// Reference pair assignment "G1", "G2", "G3" or "D14", shifted to 0-based colours.
/// Throws InvalidInput for any other name.
OrthogonalColouring paper_colouring(std::string_view name);

/// D_m: roots 0 (x_0) and 1 (y_0) are adjacent; 2..m/2 are leaves of x_0, m/2+1..m-1 leaves of y_0.
Graph double_star(std::size_t m);
/// Names x0, y0, x1.., y1.. matching the double_star layout.
std::vector<std::string> double_star_vertex_names(std::size_t m);

/// D_{n^2-1} with its root edge subdivided by a new vertex n^2-1. n must be odd and >= 3.
Graph subdivided_double_star(std::size_t n);

/// Seeded [n,k,r]-partite graph (the name follows the r = k case used for Hall coverings);
/// class i holds vertices i*k .. i*k+k-1. Throws InvalidInput when r > k.
PartitionedGraph random_nkk(const PartiteSpec& spec);

/// Random attachment tree with every degree <= max_degree_cap.
Graph random_tree(std::size_t n, std::size_t max_degree_cap, std::uint64_t seed);

/// Each new vertex joins up to d random earlier vertices, respecting max_degree_cap.
Graph random_d_degenerate(std::size_t n, std::size_t d, std::size_t max_degree_cap, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// n^2 cells of an n x n board, adjacent iff they share a row or a column. Vertex r*n+c is cell (r,c).
Graph rook_graph(std::size_t n);

/// I_n.
Graph empty_graph(std::size_t n);

}  // namespace orthocover
