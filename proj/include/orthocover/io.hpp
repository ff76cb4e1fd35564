#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "orthocover/graph.hpp"

namespace orthocover {

// JSON interchange. Every array is written in ascending order so output is byte-stable.
//   Graph      {"n": int, "edges": [[u,v],...]}
//   Partition  {"classes": [[...],...]}
//   Colouring  {"num_colours": int, "pairs": [[c1,c2],...]}
//   Covering   {"transversals": [[...],...]}
// Partitions and coverings carry no vertex count; it is inferred from the largest id.

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const OrthogonalColouring& c);
nlohmann::json to_json(const Covering& c);

/// Parse errors and shape violations surface as InvalidInput.
Graph graph_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
OrthogonalColouring colouring_from_json(const nlohmann::json& j);
Covering covering_from_json(const nlohmann::json& j);

/// Reads a file, or standard input for "-".
nlohmann::json read_json(const std::string& path);
/// Writes `j` with a trailing newline to a file, or standard output for "-".
void write_json(const std::string& path, const nlohmann::json& j);

/// Deterministic DOT text: nodes in id order, edges in sorted order. A colouring, when given,
/// labels each node "(c1,c2)". `names` overrides the default node names v0, v1, ...
std::string export_dot(const Graph& g, const OrthogonalColouring* colouring = nullptr,
                       const std::vector<std::string>& names = {});

}  // namespace orthocover
