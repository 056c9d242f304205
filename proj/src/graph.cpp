#include "subcorona/graph.hpp"

#include <algorithm>
#include <string>

namespace subcorona {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) fail(errc::invalid_params, "graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) fail(errc::invalid_params, "loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(errc::invalid_params, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::invalid_params, "duplicate edge");
  return Graph{n, std::move(edges)};
}

Graph complete(int k) {
  if (k <= 0) fail(errc::invalid_params, "complete graph needs a positive order");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph{k, std::move(e)};
}

Graph path(int k) {
  if (k <= 0) fail(errc::invalid_params, "path needs a positive order");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph{k, std::move(e)};
}

Graph cycle(int k) {
  if (k < 3) fail(errc::invalid_params, "cycle needs length at least 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, k - 1);
  std::sort(e.begin(), e.end());
  return Graph{k, std::move(e)};
}

Graph empty_graph(int k) {
  if (k <= 0) fail(errc::invalid_params, "graph needs at least one vertex");
  return Graph{k, {}};
}

Graph complete_bipartite(int p, int q) {
  if (p <= 0 || q <= 0) fail(errc::invalid_params, "bipartite parts must be positive");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
  return Graph{p + q, std::move(e)};
}

Graph complement_of(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (auto [u, v] : g.edges) adj[u][v] = true;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!adj[i][j]) e.emplace_back(i, j);
  return Graph{g.n, std::move(e)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(a.n + u, a.n + v);
  return make_graph(a.n + b.n, std::move(e));
}

const char* name(FamilyKind k) {
  switch (k) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::empty: return "empty";
    case FamilyKind::complement_of: return "complement_of";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(const std::string& text) {
  for (FamilyKind k : {FamilyKind::complete, FamilyKind::complete_bipartite, FamilyKind::path,
                       FamilyKind::cycle, FamilyKind::empty, FamilyKind::complement_of})
    if (text == name(k)) return k;
  return std::nullopt;
}

namespace {

int checked_size(long value) {
  if (value <= 0 || value > 1'000'000)
    fail(errc::invalid_params, "family size out of range: " + std::to_string(value));
  return static_cast<int>(value);
}

}  // namespace

Graph make_family(FamilyKind kind, const std::vector<long>& params) {
  auto arity = [&](size_t want) {
    if (params.size() != want)
      fail(errc::invalid_params, std::string(name(kind)) + " takes " + std::to_string(want) +
                                     (want == 1 ? " parameter" : " parameters"));
  };
  switch (kind) {
    case FamilyKind::complete:
      arity(1);
      return complete(checked_size(params[0]));
    case FamilyKind::complete_bipartite:
      arity(2);
      return complete_bipartite(checked_size(params[0]), checked_size(params[1]));
    case FamilyKind::path:
      arity(1);
      return path(checked_size(params[0]));
    case FamilyKind::cycle:
      arity(1);
      return cycle(checked_size(params[0]));
    case FamilyKind::empty:
      arity(1);
      return empty_graph(checked_size(params[0]));
    case FamilyKind::complement_of:
      fail(errc::invalid_params, "complement_of takes a graph, not sizes");
  }
  fail(errc::invalid_params, "unknown family");
}

Graph make_family(FamilyKind kind, const Graph& base) {
  if (kind != FamilyKind::complement_of)
    fail(errc::invalid_params, std::string(name(kind)) + " takes sizes, not a graph");
  return complement_of(base);
}

const char* name(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency: return "A";
    case MatrixKind::laplacian: return "L";
    case MatrixKind::signless_laplacian: return "Q";
  }
  return "?";
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.n, g.n);
  for (auto [u, v] : g.edges) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.n, g.n);
  auto deg = degrees(g);
  for (int i = 0; i < g.n; ++i) d.at(i, i) = deg[i];
  return d;
}

IntMatrix laplacian_matrix(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

IntMatrix signless_laplacian_matrix(const Graph& g) {
  return degree_matrix(g) + adjacency_matrix(g);
}

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix r(g.n, g.m());
  for (long e = 0; e < g.m(); ++e) {
    r.at(g.edges[e].first, e) = 1;
    r.at(g.edges[e].second, e) = 1;
  }
  return r;
}

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return adjacency_matrix(g);
    case MatrixKind::laplacian: return laplacian_matrix(g);
    case MatrixKind::signless_laplacian: return signless_laplacian_matrix(g);
  }
  fail(errc::invalid_params, "unknown matrix kind");
}

std::optional<int> regularity(const Graph& g) {
  auto d = degrees(g);
  if (d.empty()) return std::nullopt;
  for (int v : d)
    if (v != d[0]) return std::nullopt;
  return d[0];
}

Graph line_graph(const Graph& g) {
  const long m = g.m();
  if (m == 0) fail(errc::edge_required, "line graph of an edgeless graph");
  std::vector<std::pair<int, int>> e;
  for (long a = 0; a < m; ++a)
    for (long b = a + 1; b < m; ++b) {
      auto [u1, v1] = g.edges[a];
      auto [u2, v2] = g.edges[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return Graph{static_cast<int>(m), std::move(e)};
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

}  // namespace subcorona
