#pragma once

#include "annulus/embedding.hpp"
#include "annulus/graph.hpp"
#include "annulus/sweep.hpp"

#include "json.hpp"

#include <string>

namespace annulus::io {

using nlohmann::json;

// Instance: {dim, r1, r2, mode, points}; exact-integer mode adds "scale"
// (a rational string such as "3/10") and stores integer lattice coordinates.
json to_json(const AnnulusInstance& inst);
AnnulusInstance instance_from_json(const json& j);

// Graph: {n, edges:[[u,v],...]}, 0-based, u < v, lexicographically sorted.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Coloring: {colors, tokens, order}.
json to_json(const SweepColoring& col);
SweepColoring coloring_from_json(const json& j);

json to_json(const EmbedResult& res);

/// Parses a file; malformed JSON raises DomainError naming the path.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// An instance file yields its induced graph; a graph file is read directly.
Graph load_graph(const json& j, BuildOptions opts = {});

} // namespace annulus::io
