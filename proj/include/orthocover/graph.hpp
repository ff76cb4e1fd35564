#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthocover {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

/// Raised for malformed inputs: out-of-range ids, shape mismatches, broken preconditions.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized to u < v and stored sorted; adjacency lists are sorted
/// ascending. Self-loops, duplicate edges and out-of-range endpoints are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, std::vector<Edge> edges = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Ordered list of disjoint, non-empty vertex classes covering 0..n-1.
/// Class order is significant; vertices inside a class are kept sorted.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t n, std::vector<std::vector<Vertex>> classes);

    std::size_t order() const { return class_of_.size(); }
    std::size_t class_count() const { return classes_.size(); }
    const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
    const std::vector<Vertex>& operator[](std::size_t i) const { return classes_.at(i); }
    std::size_t class_of(Vertex v) const { return class_of_.at(v); }
    /// Common class size, or nullopt when the classes differ in size.
    std::optional<std::size_t> uniform_class_size() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }

private:
    std::vector<std::vector<Vertex>> classes_;
    std::vector<std::size_t> class_of_;
};

struct ColourPair {
    Colour first;
    Colour second;

    friend bool operator==(const ColourPair&, const ColourPair&) = default;
    friend auto operator<=>(const ColourPair&, const ColourPair&) = default;
};

/// A pair of vertex colourings stored as one (c1, c2) pair per vertex, both over 0..N-1.
class OrthogonalColouring {
public:
    OrthogonalColouring() = default;
    OrthogonalColouring(std::size_t num_colours, std::vector<ColourPair> pairs);

    std::size_t num_colours() const { return num_colours_; }
    std::size_t order() const { return pairs_.size(); }
    const std::vector<ColourPair>& pairs() const { return pairs_; }
    const ColourPair& operator[](Vertex v) const { return pairs_.at(v); }
    std::vector<Colour> first() const;
    std::vector<Colour> second() const;

    friend bool operator==(const OrthogonalColouring&, const OrthogonalColouring&) = default;

private:
    std::size_t num_colours_ = 0;
    std::vector<ColourPair> pairs_;
};

/// Ordered list of disjoint transversals T_0, T_1, ... jointly spanning 0..n-1.
/// Vertices inside a transversal are kept sorted.
class Covering {
public:
    Covering() = default;
    Covering(std::size_t n, std::vector<std::vector<Vertex>> transversals);

    std::size_t order() const { return order_; }
    std::size_t transversal_count() const { return transversals_.size(); }
    const std::vector<std::vector<Vertex>>& transversals() const { return transversals_; }
    const std::vector<Vertex>& operator[](std::size_t i) const { return transversals_.at(i); }

    friend bool operator==(const Covering&, const Covering&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::vector<Vertex>> transversals_;
};

struct GraphStats {
    std::size_t max_degree = 0;
    std::size_t degeneracy = 0;
    /// Every vertex has at most `degeneracy` neighbours earlier in this order.
    std::vector<Vertex> degenerate_ordering;
};

// Validators.

bool is_independent_set(const Graph& g, std::span<const Vertex> s);
bool is_proper(const Graph& g, std::span<const Colour> colours);
bool are_orthogonal(const OrthogonalColouring& c);
bool is_valid_orthogonal_colouring(const Graph& g, const OrthogonalColouring& c);
bool is_independent_transversal(const Graph& g, const Partition& p, std::span<const Vertex> t);
bool is_independent_covering(const Graph& g, const Partition& p, const Covering& c);

/// Human-readable description of the first violated condition, or nullopt if the colouring is valid.
std::optional<std::string> colouring_violation(const Graph& g, const OrthogonalColouring& c);
/// Same for an independent covering with respect to `p`.
std::optional<std::string> covering_violation(const Graph& g, const Partition& p, const Covering& c);

// Covering <-> colouring correspondence.

/// Vertex in class i and transversal j receives (i, j).
OrthogonalColouring covering_to_colouring(const Partition& p, const Covering& c);

struct PartitionedCovering {
    Partition partition;
    Covering covering;
};

/// Raised when the first-coordinate classes are not all of one size k, or the
/// second-coordinate classes do not all have as many vertices as there are first-coordinate classes.
class NotCoveringShaped : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Partition = first-coordinate colour classes, transversals = second-coordinate classes.
/// Unused colours are skipped, used ones keep ascending colour order.
PartitionedCovering colouring_to_covering(const Graph& g, const OrthogonalColouring& c);

/// Min-degree peeling, ties to the smallest id; ordering is the reversed removal order.
GraphStats stats(const Graph& g);

/// ceil(sqrt(n)) in exact integer arithmetic.
std::size_t ceil_sqrt(std::size_t n);

}  // namespace orthocover
