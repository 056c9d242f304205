#include "subcorona/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subcorona {

using nlohmann::json;

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    fail(errc::invalid_params, "edge list ended early");
  };

  std::istringstream header(next_line());
  long n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    fail(errc::invalid_params, "edge list needs an \"n m\" header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long k = 0; k < m; ++k) {
    std::istringstream row(next_line());
    int u = 0, v = 0;
    if (!(row >> u >> v)) fail(errc::invalid_params, "malformed edge line");
    edges.emplace_back(u, v);
  }
  return make_graph(static_cast<int>(n), std::move(edges));
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(errc::invalid_params, "graph JSON needs \"n\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(errc::invalid_params, "edge must be a pair");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return make_graph(j.at("n").get<int>(), std::move(edges));
}

json labeling_json(const CoronaLabeling& lab) {
  json original = json::array();
  for (int i = 0; i < lab.originals; ++i) original.push_back(lab.original_vertex(i));
  json inserted = json::array();
  for (int k = 0; k < lab.inserted; ++k) inserted.push_back(lab.inserted_vertex(k));
  json copies = json::array();
  for (int c = 0; c < lab.copies; ++c) {
    json one = json::array();
    for (int j = 0; j < lab.copy_size; ++j) one.push_back(lab.copy_vertex(c, j));
    copies.push_back(std::move(one));
  }
  return {{"original", std::move(original)},
          {"inserted", std::move(inserted)},
          {"copies", std::move(copies)}};
}

json poly_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

IntPoly poly_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else if (c.is_number_integer())
      coeffs.emplace_back(static_cast<long>(c.get<long long>()));
    else
      fail(errc::invalid_params, "polynomial coefficients must be integers or decimal strings");
  }
  return IntPoly(std::move(coeffs));
}

json factors_json(const std::vector<std::pair<IntPoly, long>>& factors) {
  json out = json::array();
  for (const auto& [factor, mult] : factors) out.push_back({poly_json(factor), mult});
  return out;
}

json spectrum_json(const Spectrum& values) {
  json clusters = json::array();
  for (const auto& cl : cluster(values)) clusters.push_back({cl.value, cl.count});
  return {{"values", values}, {"clusters", std::move(clusters)}};
}

json clusters_json(const std::vector<SpectrumCluster>& clusters) {
  json out = json::array();
  for (const auto& cl : clusters) out.push_back({cl.value, cl.count});
  return out;
}

namespace {

Graph graph_from_family_spec(const std::string& spec, size_t colon) {
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  const auto kind = parse_family_kind(head);
  if (!kind) fail(errc::invalid_params, "unknown graph family: " + head);
  if (*kind == FamilyKind::complement_of) return make_family(*kind, graph_from_spec(rest));

  // Parameters may be separated by ':' or ',': complete_bipartite:2:3 or 2,3.
  std::string normalized = rest;
  std::replace(normalized.begin(), normalized.end(), ':', ',');
  std::vector<long> params;
  std::istringstream in(normalized);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      params.push_back(std::stol(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      fail(errc::invalid_params, "family parameter is not an integer: " + token);
    }
  }
  return make_family(*kind, params);
}

}  // namespace

Graph graph_from_spec(const std::string& spec) {
  if (const size_t colon = spec.find(':'); colon != std::string::npos)
    return graph_from_family_spec(spec, colon);
  std::ifstream file(spec);
  if (!file) fail(errc::invalid_params, "cannot open graph file: " + spec);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(json::parse(text));
  return parse_edge_list(text);
}

}  // namespace subcorona
