#include "subcorona/corona.hpp"

#include <algorithm>

namespace subcorona {

const char* name(CoronaKind k) { return k == CoronaKind::vertex ? "vertex" : "edge"; }

LabeledGraph subdivision(const Graph& g) {
  const int n = g.n;
  const int m = static_cast<int>(g.m());
  std::vector<std::pair<int, int>> e;
  e.reserve(2 * m);
  for (int k = 0; k < m; ++k) {
    e.emplace_back(g.edges[k].first, n + k);
    e.emplace_back(g.edges[k].second, n + k);
  }
  return {make_graph(n + m, std::move(e)), CoronaLabeling{n, m, 0, 0}};
}

LabeledGraph corona(const Graph& g1, const Graph& g2, CoronaKind kind) {
  const int n1 = g1.n;
  const int m1 = static_cast<int>(g1.m());
  const int n2 = g2.n;
  if (n1 < 1) fail(errc::invalid_params, "corona base needs at least one vertex");
  if (n2 < 1)
    fail(errc::invalid_params,
         "corona copies need at least one vertex (use subdivision for zero copies)");
  if (kind == CoronaKind::edge && m1 == 0)
    fail(errc::edge_required, "edge corona needs the base graph to have an edge");

  CoronaLabeling lab{n1, m1, kind == CoronaKind::vertex ? n1 : m1, n2};
  std::vector<std::pair<int, int>> e;
  e.reserve(2 * m1 + static_cast<size_t>(lab.copies) * (n2 + g2.m()));
  for (int k = 0; k < m1; ++k) {
    e.emplace_back(g1.edges[k].first, lab.inserted_vertex(k));
    e.emplace_back(g1.edges[k].second, lab.inserted_vertex(k));
  }
  for (int i = 0; i < lab.copies; ++i) {
    const int anchor = kind == CoronaKind::vertex ? lab.original_vertex(i) : lab.inserted_vertex(i);
    for (auto [u, v] : g2.edges) e.emplace_back(lab.copy_vertex(i, u), lab.copy_vertex(i, v));
    for (int j = 0; j < n2; ++j) e.emplace_back(anchor, lab.copy_vertex(i, j));
  }
  return {make_graph(lab.total(), std::move(e)), lab};
}

long corona_order(const CoronaSpec& s) {
  const long n1 = s.g1.n, m1 = s.g1.m(), n2 = s.g2.n;
  return s.kind == CoronaKind::vertex ? n1 * (1 + n2) + m1 : m1 * (1 + n2) + n1;
}

long corona_size(const CoronaSpec& s) {
  const long n1 = s.g1.n, m1 = s.g1.m(), n2 = s.g2.n, m2 = s.g2.m();
  return s.kind == CoronaKind::vertex ? 2 * m1 + n1 * (n2 + m2) : m1 * (2 + n2 + m2);
}

}  // namespace subcorona
