#pragma once

#include "subcorona/graph.hpp"

namespace subcorona {

enum class CoronaKind { vertex, edge };

const char* name(CoronaKind k);

struct CoronaSpec {
  Graph g1;
  Graph g2;
  CoronaKind kind = CoronaKind::vertex;
};

// Vertex layout of a subdivision graph or corona, all ranges contiguous:
//   originals: 0 .. n1-1                 (vertices of the base graph)
//   inserted:  n1 .. n1+m1-1             (one per base edge, in edge order)
//   copies:    n1+m1 + i*n2 + j          (vertex j of the i-th copy)
// The i-th copy attaches to original vertex i (vertex corona) or to inserted
// vertex n1+i (edge corona).
struct CoronaLabeling {
  int originals = 0;
  int inserted = 0;
  int copies = 0;
  int copy_size = 0;

  int original_vertex(int i) const { return i; }
  int inserted_vertex(int k) const { return originals + k; }
  int copy_vertex(int i, int j) const { return originals + inserted + i * copy_size + j; }
  int total() const { return originals + inserted + copies * copy_size; }
};

struct LabeledGraph {
  Graph graph;
  CoronaLabeling labeling;
};

// Replace every edge by a path of length two through a fresh vertex.
LabeledGraph subdivision(const Graph& g);

// Subdivide g1, add one copy of g2 per original vertex (vertex kind) or per
// inserted vertex (edge kind), and join the anchor to its whole copy.
// The edge kind needs g1 to have at least one edge.
LabeledGraph corona(const Graph& g1, const Graph& g2, CoronaKind kind);

inline LabeledGraph corona(const CoronaSpec& s) { return corona(s.g1, s.g2, s.kind); }

long corona_order(const CoronaSpec& s);  // vertex count without building the graph
long corona_size(const CoronaSpec& s);   // edge count without building the graph

}  // namespace subcorona
