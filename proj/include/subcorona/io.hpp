#pragma once

#include <string>

#include <json.hpp>

#include "subcorona/corona.hpp"
#include "subcorona/graph.hpp"
#include "subcorona/poly.hpp"
#include "subcorona/spectra.hpp"

namespace subcorona {

// Edge-list text: header "n m", then one "i j" line per edge in sorted
// order. The parser skips blank lines and '#' comments.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

nlohmann::json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json labeling_json(const CoronaLabeling& lab);

// Coefficients constant-first as decimal strings, so arbitrary precision
// survives serialization.
nlohmann::json poly_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

nlohmann::json factors_json(const std::vector<std::pair<IntPoly, long>>& factors);

// {"values": [...], "clusters": [[value, count], ...]}
nlohmann::json spectrum_json(const Spectrum& values);
nlohmann::json clusters_json(const std::vector<SpectrumCluster>& clusters);

// A graph argument on the command line: either a family shorthand
// ("complete:5", "complete_bipartite:3,3", "complement_of:cycle:6") or a
// path to an edge-list/JSON file.
Graph graph_from_spec(const std::string& spec);

}  // namespace subcorona
