#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subcorona/poly.hpp"

namespace subcorona {

// Simple undirected graph on vertices 0..n-1. Edges are stored with the
// smaller endpoint first and sorted lexicographically; that order also fixes
// edge indices wherever edges get their own identity (incidence columns,
// line-graph vertices, subdivision vertices).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  long m() const { return static_cast<long>(edges.size()); }
  bool operator==(const Graph& o) const = default;
};

// Validates vertex count and endpoints, orients each edge small-first,
// sorts, and rejects loops and duplicate edges.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

Graph complete(int k);
Graph path(int k);
Graph cycle(int k);
Graph empty_graph(int k);
Graph complete_bipartite(int p, int q);
Graph complement_of(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

enum class FamilyKind { complete, complete_bipartite, path, cycle, empty, complement_of };

const char* name(FamilyKind k);
std::optional<FamilyKind> parse_family_kind(const std::string& text);

// Dispatch to the family constructors by id. complement_of takes a Graph
// instead of sizes; everything else validates its parameter count and
// positivity (INVALID_PARAMS otherwise).
Graph make_family(FamilyKind kind, const std::vector<long>& params);
Graph make_family(FamilyKind kind, const Graph& base);

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

const char* name(MatrixKind k);

std::vector<int> degrees(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);
IntMatrix signless_laplacian_matrix(const Graph& g);
IntMatrix incidence_matrix(const Graph& g);  // n x m, column per edge
IntMatrix matrix_of(const Graph& g, MatrixKind kind);

// Common degree if the graph is regular (the 0-vertex graph is not).
std::optional<int> regularity(const Graph& g);

// Vertices are g's edge indices; distinct edges are adjacent iff they share
// an endpoint.
Graph line_graph(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace subcorona
