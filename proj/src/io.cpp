#include "orthocover/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace orthocover {

namespace {

using nlohmann::json;

json sorted_groups(const std::vector<std::vector<Vertex>>& groups) {
    json out = json::array();
    for (const auto& group : groups) {
        auto copy = group;
        std::sort(copy.begin(), copy.end());
        out.push_back(copy);
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing JSON field '") + key + "'");
    }
    return j.at(key);
}

std::vector<std::vector<Vertex>> read_groups(const json& j, const char* key, std::size_t& order) {
    std::vector<std::vector<Vertex>> groups;
    order = 0;
    try {
        groups = field(j, key).get<std::vector<std::vector<Vertex>>>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad '") + key + "' array: " + e.what());
    }
    for (const auto& group : groups) {
        for (Vertex v : group) order = std::max<std::size_t>(order, v + 1);
    }
    return groups;
}

}  // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"n", g.order()}, {"edges", edges}};
}

json to_json(const Partition& p) { return {{"classes", sorted_groups(p.classes())}}; }

json to_json(const OrthogonalColouring& c) {
    json pairs = json::array();
    for (const auto& p : c.pairs()) {
        pairs.push_back({p.first, p.second});
    }
    return {{"num_colours", c.num_colours()}, {"pairs", pairs}};
}

json to_json(const Covering& c) { return {{"transversals", sorted_groups(c.transversals())}}; }

Graph graph_from_json(const json& j) {
    try {
        const auto n = field(j, "n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InvalidInput("edge entries must be [u, v] pairs");
            }
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return Graph(n, std::move(edges));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad graph JSON: ") + e.what());
    }
}

Partition partition_from_json(const json& j) {
    std::size_t order = 0;
    auto classes = read_groups(j, "classes", order);
    return Partition(order, std::move(classes));
}

OrthogonalColouring colouring_from_json(const json& j) {
    try {
        const auto colours = field(j, "num_colours").get<std::size_t>();
        std::vector<ColourPair> pairs;
        for (const auto& p : field(j, "pairs")) {
            if (!p.is_array() || p.size() != 2) {
                throw InvalidInput("pair entries must be [c1, c2]");
            }
            pairs.push_back({p[0].get<Colour>(), p[1].get<Colour>()});
        }
        return OrthogonalColouring(colours, std::move(pairs));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad colouring JSON: ") + e.what());
    }
}

Covering covering_from_json(const json& j) {
    std::size_t order = 0;
    auto transversals = read_groups(j, "transversals", order);
    return Covering(order, std::move(transversals));
}

json read_json(const std::string& path) {
    try {
        if (path == "-") {
            return json::parse(std::cin);
        }
        std::ifstream in(path);
        if (!in) {
            throw InvalidInput("cannot open " + path);
        }
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("cannot parse " + path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    if (path == "-") {
        std::cout << j.dump() << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path);
    }
    out << j.dump() << '\n';
}

std::string export_dot(const Graph& g, const OrthogonalColouring* colouring, const std::vector<std::string>& names) {
    if (colouring && colouring->order() != g.order()) {
        throw InvalidInput("colouring has " + std::to_string(colouring->order()) + " pairs for a graph of order " +
                           std::to_string(g.order()));
    }
    if (!names.empty() && names.size() != g.order()) {
        throw InvalidInput("expected " + std::to_string(g.order()) + " vertex names");
    }
    auto name = [&](Vertex v) { return names.empty() ? "v" + std::to_string(v) : names[v]; };
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  \"" << name(v) << '"';
        if (colouring) {
            const auto& p = (*colouring)[v];
            out << " [label=\"(" << p.first << ',' << p.second << ")\"]";
        }
        out << ";\n";
    }
    for (const auto& e : g.edges()) {
        out << "  \"" << name(e.u) << "\" -- \"" << name(e.v) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace orthocover
