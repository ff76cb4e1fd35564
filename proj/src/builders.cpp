#include "orthocover/builders.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace orthocover {

namespace {

// Vertex layout shared by every nine-vertex graph.
enum Xyz : Vertex { x0, x1, x2, y0, y1, y2, z0, z1, z2 };

Partition xyz_partition() {
    return Partition(9, {{x0, x1, x2}, {y0, y1, y2}, {z0, z1, z2}});
}

// Pair labels exactly as printed next to each vertex in the figures.
struct FigurePair {
    Vertex vertex;
    int first;
    int second;
};

struct FigureColouring {
    int base;  // smallest colour label the figure uses
    std::size_t num_colours;
    std::vector<FigurePair> labels;
};

FigureColouring figure_g1() {
    return {0, 3, {
        {x2, 0, 0}, {y2, 1, 1}, {z0, 2, 2},
        {x1, 0, 1}, {y1, 1, 2}, {z1, 2, 0},
        {x0, 0, 2}, {y0, 1, 0}, {z2, 2, 1},
    }};
}

FigureColouring figure_g2() {
    return {0, 3, {
        {x2, 0, 0}, {y2, 1, 1}, {z0, 2, 0},
        {x1, 0, 1}, {y1, 1, 2}, {z1, 2, 1},
        {x0, 0, 2}, {y0, 1, 0}, {z2, 2, 2},
    }};
}

FigureColouring figure_g3() {
    return {0, 3, {
        {x2, 0, 0}, {y2, 1, 2}, {z0, 2, 1},
        {x1, 0, 1}, {y1, 1, 0}, {z1, 2, 2},
        {x0, 0, 2}, {y0, 2, 0}, {z2, 1, 1},
    }};
}

FigureColouring figure_d14() {
    // Left root x0 with its leaves top to bottom, then right root y0 with its leaves.
    return {1, 4, {
        {0, 1, 1},
        {2, 2, 3}, {3, 2, 4}, {4, 3, 2}, {5, 4, 2}, {6, 4, 3}, {7, 4, 4},
        {1, 2, 2},
        {8, 1, 3}, {9, 1, 4}, {10, 3, 1}, {11, 4, 1}, {12, 3, 3}, {13, 3, 4},
    }};
}

OrthogonalColouring load_figure(const FigureColouring& fig) {
    std::vector<ColourPair> pairs(fig.labels.size());
    for (const auto& label : fig.labels) {
        pairs.at(label.vertex) = ColourPair{static_cast<Colour>(label.first - fig.base),
                                            static_cast<Colour>(label.second - fig.base)};
    }
    return OrthogonalColouring(fig.num_colours, std::move(pairs));
}

}  // namespace

PartitionedGraph figure1_graph() {
    Graph g(9, {{x2, y2}, {x1, y1}, {x1, z1}, {y1, z1}, {x0, y0}, {y0, z2}, {x2, z2}, {y2, z0}, {x0, z0}});
    return {std::move(g), xyz_partition()};
}

std::vector<NamedGraph> three_333_graphs() {
    Graph g1(9, {{x2, y2}, {y2, z0}, {z0, x2},
                 {x1, y1}, {y1, z1}, {z1, x1},
                 {x0, y0}, {y0, z2}, {z2, x0}});
    // x0-y0-z2-x1-y1-z1-x2-y2-z0-x0
    Graph g2(9, {{x0, y0}, {y0, z2}, {z2, x1}, {x1, y1}, {y1, z1}, {z1, x2}, {x2, y2}, {y2, z0}, {z0, x0}});
    std::vector<NamedGraph> out;
    out.push_back({"G1", std::move(g1), xyz_partition()});
    out.push_back({"G2", std::move(g2), xyz_partition()});
    out.push_back({"G3", figure1_graph().graph, xyz_partition()});
    return out;
}

std::vector<std::string> xyz_vertex_names() {
    return {"x0", "x1", "x2", "y0", "y1", "y2", "z0", "z1", "z2"};
}

OrthogonalColouring paper_colouring(std::string_view name) {
    if (name == "G1") return load_figure(figure_g1());
    if (name == "G2") return load_figure(figure_g2());
    if (name == "G3") return load_figure(figure_g3());
    if (name == "D14") return load_figure(figure_d14());
    throw InvalidInput("unknown reference colouring '" + std::string(name) + "' (expected G1, G2, G3 or D14)");
}

Graph double_star(std::size_t m) {
    if (m < 2 || m % 2 != 0) {
        throw InvalidInput("double star D_m needs an even m >= 2, got " + std::to_string(m));
    }
    const auto half = m / 2;
    std::vector<Edge> edges{{0, 1}};
    for (Vertex leaf = 2; leaf <= half; ++leaf) {
        edges.push_back({0, leaf});
    }
    for (Vertex leaf = half + 1; leaf < m; ++leaf) {
        edges.push_back({1, leaf});
    }
    return Graph(m, std::move(edges));
}

std::vector<std::string> double_star_vertex_names(std::size_t m) {
    double_star(m);
    const auto half = m / 2;
    std::vector<std::string> names{"x0", "y0"};
    for (std::size_t i = 1; i < half; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i < half; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

Graph subdivided_double_star(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw InvalidInput("subdivided double star needs an odd n >= 3, got " + std::to_string(n));
    }
    const auto m = n * n - 1;
    auto edges = double_star(m).edges();
    std::erase(edges, Edge{0, 1});
    const auto centre = static_cast<Vertex>(m);
    edges.push_back({0, centre});
    edges.push_back({1, centre});
    return Graph(m + 1, std::move(edges));
}

PartitionedGraph random_nkk(const PartiteSpec& spec) {
    const auto k = spec.part_size;
    const auto r = spec.matching_size;
    if (r > k) {
        throw InvalidInput("matching size " + std::to_string(r) + " exceeds part size " + std::to_string(k));
    }
    if (k == 0 && spec.parts > 0) {
        throw InvalidInput("part size must be positive");
    }
    detail::Rng rng(spec.seed);
    std::vector<std::vector<Vertex>> classes(spec.parts);
    for (std::size_t i = 0; i < spec.parts; ++i) {
        classes[i].resize(k);
        std::iota(classes[i].begin(), classes[i].end(), static_cast<Vertex>(i * k));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < spec.parts; ++i) {
        for (std::size_t j = i + 1; j < spec.parts; ++j) {
            auto left = classes[i];
            auto right = classes[j];
            rng.partial_shuffle(left, r);
            rng.partial_shuffle(right, r);
            for (std::size_t e = 0; e < r; ++e) {
                edges.push_back({left[e], right[e]});
            }
        }
    }
    const auto n = spec.parts * k;
    return {Graph(n, std::move(edges)), Partition(n, std::move(classes))};
}

Graph random_tree(std::size_t n, std::size_t max_degree_cap, std::uint64_t seed) {
    if ((n == 2 && max_degree_cap < 1) || (n >= 3 && max_degree_cap < 2)) {
        throw InvalidInput("no tree on " + std::to_string(n) + " vertices has maximum degree <= " +
                           std::to_string(max_degree_cap));
    }
    detail::Rng rng(seed);
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges;
    const auto attempts_per_vertex = 10 * n;
    for (Vertex v = 1; v < n; ++v) {
        bool attached = false;
        for (std::size_t attempt = 0; attempt < attempts_per_vertex && !attached; ++attempt) {
            const auto parent = static_cast<Vertex>(rng.below(v));
            if (degree[parent] < max_degree_cap) {
                edges.push_back({parent, v});
                ++degree[parent];
                ++degree[v];
                attached = true;
            }
        }
        if (!attached) {
            throw std::runtime_error("random_tree: vertex " + std::to_string(v) + " found no parent after " +
                                     std::to_string(attempts_per_vertex) + " attempts");
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_d_degenerate(std::size_t n, std::size_t d, std::size_t max_degree_cap, std::uint64_t seed) {
    if (max_degree_cap < d) {
        throw InvalidInput("degree cap " + std::to_string(max_degree_cap) + " is below d = " + std::to_string(d));
    }
    detail::Rng rng(seed);
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges;
    std::vector<Vertex> eligible;
    for (Vertex v = 1; v < n; ++v) {
        eligible.clear();
        for (Vertex w = 0; w < v; ++w) {
            if (degree[w] < max_degree_cap) {
                eligible.push_back(w);
            }
        }
        const auto take = std::min(d, eligible.size());
        rng.partial_shuffle(eligible, take);
        for (std::size_t i = 0; i < take; ++i) {
            edges.push_back({eligible[i], v});
            ++degree[eligible[i]];
            ++degree[v];
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.unit() < edge_probability) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph rook_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n * n; ++a) {
        for (std::size_t b = a + 1; b < n * n; ++b) {
            if (a / n == b / n || a % n == b % n) {
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
        }
    }
    return Graph(n * n, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

}  // namespace orthocover
