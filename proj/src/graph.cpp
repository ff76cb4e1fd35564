#include "orthocover/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orthocover {

namespace {

std::string vertex_error(Vertex v, std::size_t n) {
    std::ostringstream out;
    out << "vertex " << v << " out of range for graph of order " << n;
    return out.str();
}

void check_vertex(Vertex v, std::size_t n) {
    if (v >= n) {
        throw InvalidInput(vertex_error(v, n));
    }
}

// Sorts every group and checks the groups are disjoint, non-empty and span 0..n-1.
// Returns the group index of each vertex.
std::vector<std::size_t> index_groups(std::size_t n, std::vector<std::vector<Vertex>>& groups,
                                      const char* what) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(n, unset);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        auto& group = groups[i];
        if (group.empty()) {
            throw InvalidInput(std::string(what) + " " + std::to_string(i) + " is empty");
        }
        std::sort(group.begin(), group.end());
        for (Vertex v : group) {
            check_vertex(v, n);
            if (owner[v] != unset) {
                throw InvalidInput("vertex " + std::to_string(v) + " appears in " + what + "s " +
                                   std::to_string(owner[v]) + " and " + std::to_string(i));
            }
            owner[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] == unset) {
            throw InvalidInput("vertex " + std::to_string(v) + " is not in any " + what);
        }
    }
    return owner;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    for (auto& e : edges_) {
        check_vertex(e.u, n);
        check_vertex(e.v, n);
        if (e.u == e.v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, list.size());
    }
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u, order());
    check_vertex(v, order());
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Partition::Partition(std::size_t n, std::vector<std::vector<Vertex>> classes)
    : classes_(std::move(classes)) {
    class_of_ = index_groups(n, classes_, "class");
}

std::optional<std::size_t> Partition::uniform_class_size() const {
    if (classes_.empty()) {
        return 0;
    }
    const auto k = classes_.front().size();
    for (const auto& cls : classes_) {
        if (cls.size() != k) {
            return std::nullopt;
        }
    }
    return k;
}

OrthogonalColouring::OrthogonalColouring(std::size_t num_colours, std::vector<ColourPair> pairs)
    : num_colours_(num_colours), pairs_(std::move(pairs)) {
    for (std::size_t v = 0; v < pairs_.size(); ++v) {
        if (pairs_[v].first >= num_colours_ || pairs_[v].second >= num_colours_) {
            throw InvalidInput("pair of vertex " + std::to_string(v) + " uses a colour outside 0.." +
                               std::to_string(num_colours_) + "-1");
        }
    }
}

std::vector<Colour> OrthogonalColouring::first() const {
    std::vector<Colour> out;
    out.reserve(pairs_.size());
    for (const auto& p : pairs_) {
        out.push_back(p.first);
    }
    return out;
}

std::vector<Colour> OrthogonalColouring::second() const {
    std::vector<Colour> out;
    out.reserve(pairs_.size());
    for (const auto& p : pairs_) {
        out.push_back(p.second);
    }
    return out;
}

Covering::Covering(std::size_t n, std::vector<std::vector<Vertex>> transversals)
    : order_(n), transversals_(std::move(transversals)) {
    index_groups(n, transversals_, "transversal");
}

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> member(g.order(), 0);
    for (Vertex v : s) {
        check_vertex(v, g.order());
        member[v] = 1;
    }
    for (Vertex v : s) {
        for (Vertex w : g.neighbours(v)) {
            if (member[w]) {
                return false;
            }
        }
    }
    return true;
}

bool is_proper(const Graph& g, std::span<const Colour> colours) {
    if (colours.size() != g.order()) {
        throw InvalidInput("colour vector has " + std::to_string(colours.size()) +
                           " entries for a graph of order " + std::to_string(g.order()));
    }
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return colours[e.u] == colours[e.v]; });
}

bool are_orthogonal(const OrthogonalColouring& c) {
    std::vector<char> seen(c.num_colours() * c.num_colours(), 0);
    for (const auto& p : c.pairs()) {
        auto& slot = seen[p.first * c.num_colours() + p.second];
        if (slot) {
            return false;
        }
        slot = 1;
    }
    return true;
}

std::optional<std::string> colouring_violation(const Graph& g, const OrthogonalColouring& c) {
    if (c.order() != g.order()) {
        throw InvalidInput("colouring has " + std::to_string(c.order()) + " pairs for a graph of order " +
                           std::to_string(g.order()));
    }
    for (const auto& e : g.edges()) {
        if (c[e.u].first == c[e.v].first) {
            return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   "} is monochromatic in the first colouring (colour " + std::to_string(c[e.u].first) + ")";
        }
        if (c[e.u].second == c[e.v].second) {
            return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   "} is monochromatic in the second colouring (colour " + std::to_string(c[e.u].second) + ")";
        }
    }
    std::map<ColourPair, Vertex> owner;
    for (Vertex v = 0; v < c.order(); ++v) {
        auto [it, inserted] = owner.emplace(c[v], v);
        if (!inserted) {
            return "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                   " share the pair (" + std::to_string(c[v].first) + "," + std::to_string(c[v].second) + ")";
        }
    }
    return std::nullopt;
}

bool is_valid_orthogonal_colouring(const Graph& g, const OrthogonalColouring& c) {
    return !colouring_violation(g, c).has_value();
}

namespace {

std::optional<std::string> transversal_violation(const Graph& g, const Partition& p,
                                                 std::span<const Vertex> t) {
    std::vector<int> hits(p.class_count(), 0);
    for (Vertex v : t) {
        check_vertex(v, g.order());
        if (++hits[p.class_of(v)] > 1) {
            return "contains two vertices of class " + std::to_string(p.class_of(v));
        }
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] == 0) {
            return "misses class " + std::to_string(i);
        }
    }
    for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = a + 1; b < t.size(); ++b) {
            if (g.adjacent(t[a], t[b])) {
                return "contains the edge {" + std::to_string(std::min(t[a], t[b])) + "," +
                       std::to_string(std::max(t[a], t[b])) + "}";
            }
        }
    }
    return std::nullopt;
}

void check_partition(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) {
        throw InvalidInput("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                           std::to_string(g.order()));
    }
}

}  // namespace

bool is_independent_transversal(const Graph& g, const Partition& p, std::span<const Vertex> t) {
    check_partition(g, p);
    return !transversal_violation(g, p, t).has_value();
}

std::optional<std::string> covering_violation(const Graph& g, const Partition& p, const Covering& c) {
    check_partition(g, p);
    if (c.order() != g.order()) {
        return "covering spans " + std::to_string(c.order()) + " vertices, graph has " +
               std::to_string(g.order());
    }
    for (std::size_t i = 0; i < c.transversal_count(); ++i) {
        if (auto why = transversal_violation(g, p, c[i])) {
            return "transversal " + std::to_string(i) + " " + *why;
        }
    }
    return std::nullopt;
}

bool is_independent_covering(const Graph& g, const Partition& p, const Covering& c) {
    return !covering_violation(g, p, c).has_value();
}

OrthogonalColouring covering_to_colouring(const Partition& p, const Covering& c) {
    if (p.order() != c.order()) {
        throw InvalidInput("covering spans " + std::to_string(c.order()) + " vertices, partition has " +
                           std::to_string(p.order()));
    }
    std::vector<ColourPair> pairs(p.order());
    for (std::size_t j = 0; j < c.transversal_count(); ++j) {
        for (Vertex v : c[j]) {
            pairs[v] = ColourPair{static_cast<Colour>(p.class_of(v)), static_cast<Colour>(j)};
        }
    }
    return OrthogonalColouring(std::max(p.class_count(), c.transversal_count()), std::move(pairs));
}

PartitionedCovering colouring_to_covering(const Graph& g, const OrthogonalColouring& c) {
    if (auto why = colouring_violation(g, c)) {
        throw InvalidInput("not a valid orthogonal colouring: " + *why);
    }
    std::vector<std::vector<Vertex>> by_first(c.num_colours());
    std::vector<std::vector<Vertex>> by_second(c.num_colours());
    for (Vertex v = 0; v < c.order(); ++v) {
        by_first[c[v].first].push_back(v);
        by_second[c[v].second].push_back(v);
    }
    std::erase_if(by_first, [](const auto& cls) { return cls.empty(); });
    std::erase_if(by_second, [](const auto& cls) { return cls.empty(); });

    for (const auto& cls : by_first) {
        if (cls.size() != by_first.front().size()) {
            throw NotCoveringShaped("not covering-shaped: first-colouring classes have sizes " +
                                    std::to_string(by_first.front().size()) + " and " +
                                    std::to_string(cls.size()));
        }
    }
    for (const auto& cls : by_second) {
        if (cls.size() != by_first.size()) {
            throw NotCoveringShaped("not covering-shaped: a second-colouring class has " +
                                    std::to_string(cls.size()) + " vertices but the first colouring uses " +
                                    std::to_string(by_first.size()) + " colours");
        }
    }
    return {Partition(g.order(), std::move(by_first)), Covering(g.order(), std::move(by_second))};
}

GraphStats stats(const Graph& g) {
    const auto n = g.order();
    GraphStats out;
    out.max_degree = g.max_degree();

    std::vector<std::size_t> residual(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        residual[v] = g.degree(v);
        queue.emplace(residual[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> removal;
    removal.reserve(n);
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        out.degeneracy = std::max(out.degeneracy, deg);
        removed[v] = 1;
        removal.push_back(v);
        for (Vertex w : g.neighbours(v)) {
            if (!removed[w]) {
                queue.erase({residual[w], w});
                --residual[w];
                queue.emplace(residual[w], w);
            }
        }
    }
    out.degenerate_ordering.assign(removal.rbegin(), removal.rend());
    return out;
}

std::size_t ceil_sqrt(std::size_t n) {
    std::size_t r = 0;
    while (r * r < n) {
        ++r;
    }
    return r;
}

}  // namespace orthocover
