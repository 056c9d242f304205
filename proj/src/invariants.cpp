#include "subcorona/invariants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "subcorona/theorems.hpp"

namespace subcorona {

BigInt spanning_trees_oracle(const Graph& g) {
  if (!is_connected(g)) return 0;
  if (g.n == 1) return 1;
  const IntMatrix lap = laplacian_matrix(g);
  IntMatrix minor(g.n - 1, g.n - 1);
  for (long i = 0; i + 1 < g.n; ++i)
    for (long j = 0; j + 1 < g.n; ++j) minor.at(i, j) = lap.at(i, j);
  return det_exact(std::move(minor));
}

namespace {

long require_regular_base(const Graph& g1) {
  auto r = regularity(g1);
  if (!r) fail(errc::reg_required, "the base graph must be regular");
  return *r;
}

void require_connected_base(const Graph& g1) {
  if (!is_connected(g1)) fail(errc::disconnected, "the base graph must be connected");
}

void require_edge_if_needed(const CoronaSpec& spec) {
  if (spec.kind == CoronaKind::edge && spec.g1.m() == 0)
    fail(errc::edge_required, "edge corona needs the base graph to have an edge");
}

// prod_{i>=2} (1 + mu_i(G2)), exactly: strip the mu_1 = 0 root from the
// Laplacian characteristic polynomial and evaluate at -1 up to sign.
BigInt laplacian_shift_product(const Graph& g2) {
  const IntPoly phi = charpoly_exact(laplacian_matrix(g2));
  BigInt p = exact_divide(phi, IntPoly::x()).eval(BigInt(-1));
  if ((g2.n - 1) % 2 != 0) p = -p;
  return p;
}

}  // namespace

BigInt spanning_trees_formula(const CoronaSpec& spec) {
  const long r1 = require_regular_base(spec.g1);
  require_connected_base(spec.g1);
  require_edge_if_needed(spec);
  const long n1 = spec.g1.n, m1 = spec.g1.m(), n2 = spec.g2.n;
  const bool vertex = spec.kind == CoronaKind::vertex;

  const long scalar = vertex ? 2 + r1 + 2 * n2 : 2 + r1 + r1 * n2;
  const long copies = vertex ? n1 : m1;
  const long denominator = n1 + m1 + copies * n2;

  BigInt product;
  mpz_pow_ui(product.get_mpz_t(), laplacian_shift_product(spec.g2).get_mpz_t(),
             static_cast<unsigned long>(copies));

  BigRat value(scalar);
  value *= n1;
  value *= BigRat(spanning_trees_oracle(spec.g1));
  value *= BigRat(product);
  if (m1 >= n1)
    value *= BigRat(BigInt(1) << static_cast<unsigned long>(m1 - n1));
  else
    value /= BigRat(BigInt(1) << static_cast<unsigned long>(n1 - m1));
  value /= denominator;
  value.canonicalize();
  if (value.get_den() != 1)
    fail(errc::inexact_division, "closed-form spanning-tree count is not an integer");
  return value.get_num();
}

double kirchhoff_oracle(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "Kirchhoff index needs a connected graph");
  if (g.n <= 1) return 0.0;
  const Spectrum mu = eigenvalues_sym(laplacian_matrix(g));
  double sum = 0;
  for (size_t k = 1; k < mu.size(); ++k) sum += 1.0 / mu[k];
  return g.n * sum;
}

double kirchhoff_formula(const CoronaSpec& spec) {
  const long r1 = require_regular_base(spec.g1);
  require_connected_base(spec.g1);
  require_edge_if_needed(spec);
  const long n1 = spec.g1.n, m1 = spec.g1.m(), n2 = spec.g2.n;
  const bool vertex = spec.kind == CoronaKind::vertex;

  const double kf1 = kirchhoff_oracle(spec.g1);
  const Spectrum mu2 = eigenvalues_sym(laplacian_matrix(spec.g2));
  double reciprocal = 0;
  for (size_t k = 1; k < mu2.size(); ++k) reciprocal += 1.0 / (1.0 + mu2[k]);

  const double scalar = vertex ? 2.0 + r1 + 2.0 * n2 : 2.0 + r1 + static_cast<double>(r1) * n2;
  const double head = vertex ? (m1 + n1 - 2) / 2.0
                             : ((3.0 + n2) * m1 - (n2 + 1.0) * n1 - 2) / 2.0;
  const double per_copy = vertex ? static_cast<double>(n1) : static_cast<double>(m1);
  const double inner =
      head + (3.0 + r1 + n2) / scalar + scalar / n1 * kf1 + per_copy * reciprocal;
  return static_cast<double>(corona_order(spec)) * inner;
}

bool is_integral(const Spectrum& values, double tol) {
  return std::all_of(values.begin(), values.end(),
                     [&](double v) { return std::abs(v - std::round(v)) <= tol; });
}

bool is_integral(const std::vector<SpectrumCluster>& clusters, double tol) {
  return std::all_of(clusters.begin(), clusters.end(), [&](const SpectrumCluster& cl) {
    return std::abs(cl.value - std::round(cl.value)) <= tol;
  });
}

const char* name(IntegralFamily family) {
  switch (family) {
    case IntegralFamily::vertex_complete: return "vertex_complete";
    case IntegralFamily::vertex_bipartite: return "vertex_bipartite";
    case IntegralFamily::edge_complete: return "edge_complete";
    case IntegralFamily::edge_bipartite: return "edge_bipartite";
  }
  return "?";
}

std::optional<IntegralFamily> parse_integral_family(std::string_view text) {
  for (IntegralFamily f : {IntegralFamily::vertex_complete, IntegralFamily::vertex_bipartite,
                           IntegralFamily::edge_complete, IntegralFamily::edge_bipartite})
    if (text == name(f)) return f;
  return std::nullopt;
}

IntegralInstance integral_family(IntegralFamily family, const std::vector<long>& params) {
  auto arity = [&](size_t want) {
    if (params.size() != want)
      fail(errc::invalid_params, std::string(name(family)) + " takes " + std::to_string(want) +
                                     (want == 1 ? " parameter" : " parameters"));
  };
  IntegralInstance out;
  switch (family) {
    case IntegralFamily::vertex_complete: {
      arity(2);
      const long s = params[0], h = params[1];
      if (h < 2 || s < 3 || !(h * h < s * s && s * s < 2 * h * h + 2))
        fail(errc::invalid_params, "need h >= 2, s >= 3 and h^2 < s^2 < 2h^2 + 2");
      out.n1 = s * s - h * h;
      out.n2 = 2 * h * h - s * s + 2;
      out.spec = {complete(static_cast<int>(out.n1)), empty_graph(static_cast<int>(out.n2)),
                  CoronaKind::vertex};
      return out;
    }
    case IntegralFamily::edge_complete: {
      arity(1);
      const long t = params[0];
      if (t < 1) fail(errc::invalid_params, "need t >= 1");
      out.n1 = 2 * t + 3;
      out.n2 = t * t;
      out.spec = {complete(static_cast<int>(out.n1)), empty_graph(static_cast<int>(out.n2)),
                  CoronaKind::edge};
      return out;
    }
    case IntegralFamily::vertex_bipartite:
    case IntegralFamily::edge_bipartite: {
      arity(2);
      const long s = params[0], t = params[1];
      if (s < 1 || t < 1) fail(errc::invalid_params, "need s >= 1 and t >= 1");
      out.n1 = 4 * s * t * t * (2 * s * s + 3 * s + 1);
      out.n2 = t * t * (2 * s * s - 1) * (2 * s * s - 1);
      if (out.n1 > 4000)
        fail(errc::too_large, "bipartite base with " + std::to_string(2 * out.n1) +
                                  " vertices is beyond the supported size");
      out.spec = {complete_bipartite(static_cast<int>(out.n1), static_cast<int>(out.n1)),
                  empty_graph(static_cast<int>(out.n2)),
                  family == IntegralFamily::vertex_bipartite ? CoronaKind::vertex
                                                             : CoronaKind::edge};
      return out;
    }
  }
  fail(errc::invalid_params, "unknown family");
}

// ---------------------------------------------------------------------------
// Exact integer spectra
// ---------------------------------------------------------------------------

namespace {

struct SparseEntry {
  long i, j;
  BigInt v;
};

std::vector<SparseEntry> sparse_entries(const IntMatrix& m) {
  std::vector<SparseEntry> nz;
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) nz.push_back({i, j, m.at(i, j)});
  return nz;
}

std::vector<BigInt> sparse_apply(const std::vector<SparseEntry>& nz, long n,
                                 const std::vector<BigInt>& x) {
  std::vector<BigInt> y(n);
  for (const auto& e : nz) mpz_addmul(y[e.i].get_mpz_t(), e.v.get_mpz_t(), x[e.j].get_mpz_t());
  return y;
}

// Dense row-major n x n product Y = M * X through M's nonzeros.
std::vector<BigInt> sparse_dense_product(const std::vector<SparseEntry>& nz, long n,
                                         const std::vector<BigInt>& x) {
  std::vector<BigInt> y(static_cast<size_t>(n) * n);
  for (const auto& e : nz) {
    const BigInt* src = &x[static_cast<size_t>(e.j) * n];
    BigInt* dst = &y[static_cast<size_t>(e.i) * n];
    for (long k = 0; k < n; ++k)
      mpz_addmul(dst[k].get_mpz_t(), e.v.get_mpz_t(), src[k].get_mpz_t());
  }
  return y;
}

// Monic minimal polynomial of the vector b under M: first linear dependency
// among b, Mb, M^2 b, ... found by exact rational elimination.
std::optional<IntPoly> krylov_local_minpoly(const std::vector<SparseEntry>& nz, long n,
                                            std::vector<BigInt> b, long cap) {
  struct Reduced {
    std::vector<BigRat> w;      // echelon vector
    std::vector<BigRat> combo;  // expression in terms of Krylov indices
    long pivot;
  };
  std::vector<Reduced> basis;
  std::vector<BigInt> v = std::move(b);
  for (long step = 0; step <= cap; ++step) {
    std::vector<BigRat> w(v.begin(), v.end());
    std::vector<BigRat> combo(step + 1);
    combo[step] = 1;
    for (const auto& red : basis) {
      if (w[red.pivot] == 0) continue;
      BigRat factor = w[red.pivot] / red.w[red.pivot];
      for (long k = 0; k < n; ++k)
        if (red.w[k] != 0) w[k] -= factor * red.w[k];
      for (size_t k = 0; k < red.combo.size(); ++k) combo[k] -= factor * red.combo[k];
    }
    long pivot = -1;
    for (long k = 0; k < n; ++k)
      if (w[k] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) {
      std::vector<BigInt> coeffs(step + 1);
      for (long k = 0; k <= step; ++k) {
        combo[k].canonicalize();
        if (combo[k].get_den() != 1)
          fail(errc::inexact_division, "local minimal polynomial is not integral");
        coeffs[k] = combo[k].get_num();
      }
      return IntPoly(std::move(coeffs));
    }
    basis.push_back({std::move(w), std::move(combo), pivot});
    v = sparse_apply(nz, n, v);
  }
  return std::nullopt;  // degree exceeds cap
}

IntPoly monic_lcm(const IntPoly& a, const IntPoly& b) {
  if (a.degree() <= 0) return b;
  if (b.degree() <= 0) return a;
  return exact_divide(a * b, poly_gcd(a, b));
}

// Exact trace of M^k for k <= 4 given M's nonzeros and the dense square.
BigInt power_trace(const std::vector<SparseEntry>& nz, long n, const IntMatrix& m,
                   const std::vector<BigInt>* square, long k) {
  BigInt t;
  switch (k) {
    case 0: return BigInt(n);
    case 1:
      for (long i = 0; i < n; ++i) t += m.at(i, i);
      return t;
    case 2:
      for (const auto& e : nz) t += e.v * e.v;  // symmetry: sum M_ij * M_ji
      return t;
    case 3:
      for (const auto& e : nz)
        mpz_addmul(t.get_mpz_t(), e.v.get_mpz_t(),
                   (*square)[static_cast<size_t>(e.j) * n + e.i].get_mpz_t());
      return t;
    case 4:
      for (size_t k2 = 0; k2 < square->size(); ++k2)
        mpz_addmul(t.get_mpz_t(), (*square)[k2].get_mpz_t(), (*square)[k2].get_mpz_t());
      return t;
    default:
      fail(errc::too_large, "trace power beyond the iterative route");
  }
}

void require_symmetric_square(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::non_square, "spectrum of a non-square matrix");
  for (long i = 0; i < m.rows; ++i)
    for (long j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) fail(errc::not_symmetric, "spectrum of a non-symmetric matrix");
}

}  // namespace

std::vector<std::pair<BigInt, long>> exact_integer_spectrum(const IntMatrix& m, long degree_cap) {
  require_symmetric_square(m);
  const long n = m.rows;
  if (n == 0) return {};

  if (n <= 64) {
    auto roots = integer_root_factorization(charpoly_exact(m));
    if (!roots) fail(errc::invalid_params, "matrix spectrum is not integral");
    return *roots;
  }

  const long cap = std::min<long>(degree_cap, 5);  // traces computable up to M^4
  const auto nz = sparse_entries(m);

  // Candidate minimal polynomial: least common multiple of per-vector
  // minimal polynomials, grown until it exactly annihilates M.
  std::vector<std::vector<BigInt>> starts;
  starts.emplace_back(n, BigInt(1));  // all-ones
  IntPoly minp({1});
  long stable = 0;
  bool verified = false;
  for (long turn = 0; !verified; ++turn) {
    if (turn > 0) {
      if (turn > n) fail(errc::invalid_params, "minimal polynomial search did not stabilize");
      std::vector<BigInt> e(n);
      e[turn - 1] = 1;
      starts.push_back(std::move(e));
    }
    auto local = krylov_local_minpoly(nz, n, starts.back(), cap);
    if (!local) fail(errc::too_large, "minimal polynomial degree beyond the iterative route");
    IntPoly next = monic_lcm(minp, *local);
    if (next.degree() > cap)
      fail(errc::too_large, "minimal polynomial degree beyond the iterative route");
    if (next == minp) {
      ++stable;
    } else {
      minp = std::move(next);
      stable = 0;
    }
    if (stable < 2 && turn < n) continue;

    // Exact annihilation check p(M) == 0 by a dense Horner evaluation;
    // failure sends the search back for more start vectors.
    const long d = minp.degree();
    std::vector<BigInt> horner(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i) horner[static_cast<size_t>(i) * n + i] = 1;
    for (long k = d; k-- > 0;) {
      horner = sparse_dense_product(nz, n, horner);
      for (long i = 0; i < n; ++i) horner[static_cast<size_t>(i) * n + i] += minp[k];
    }
    verified = std::all_of(horner.begin(), horner.end(), [](const BigInt& v) { return v == 0; });
    if (!verified) stable = 0;
  }

  auto roots = integer_root_factorization(minp);
  if (!roots) fail(errc::invalid_params, "matrix spectrum is not integral");
  const long d = minp.degree();

  std::vector<BigInt> square;
  if (d >= 4) {
    std::vector<BigInt> dense(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) dense[static_cast<size_t>(i) * n + j] = m.at(i, j);
    square = sparse_dense_product(nz, n, dense);
  }

  // Multiplicities from the moment equations sum_i x_i lambda_i^k = tr(M^k),
  // k = 0..d-1 (a nonsingular Vandermonde system; exact p(M) = 0 with
  // square-free integer-rooted p makes the spectrum exactly {lambda_i}).
  std::vector<std::vector<BigRat>> system(d, std::vector<BigRat>(d + 1));
  for (long k = 0; k < d; ++k) {
    for (long i = 0; i < d; ++i) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), (*roots)[i].first.get_mpz_t(), static_cast<unsigned long>(k));
      system[k][i] = BigRat(pw);
    }
    system[k][d] = BigRat(power_trace(nz, n, m, &square, k));
  }
  for (long col = 0; col < d; ++col) {
    long pivot = col;
    while (pivot < d && system[pivot][col] == 0) ++pivot;
    if (pivot == d) fail(errc::invalid_params, "degenerate moment system");
    std::swap(system[col], system[pivot]);
    for (long row = 0; row < d; ++row) {
      if (row == col || system[row][col] == 0) continue;
      BigRat factor = system[row][col] / system[col][col];
      for (long k = col; k <= d; ++k) system[row][k] -= factor * system[col][k];
    }
  }
  std::vector<std::pair<BigInt, long>> out;
  BigInt total = 0;
  for (long i = 0; i < d; ++i) {
    BigRat x = system[i][d] / system[i][i];
    x.canonicalize();
    if (x.get_den() != 1 || x.get_num() <= 0)
      fail(errc::invalid_params, "matrix spectrum is not integral");
    out.emplace_back((*roots)[i].first, x.get_num().get_si());
    total += x.get_num();
  }
  if (total != n) fail(errc::invalid_params, "eigenvalue multiplicities do not sum to n");
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms, enumeration, cospectral pairs
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxEnum = 8;

struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, kMaxEnum> adj{};  // neighbor bitmasks
};

SmallGraph to_small(const Graph& g) {
  SmallGraph s;
  s.n = g.n;
  for (auto [u, v] : g.edges) {
    s.adj[u] |= static_cast<std::uint8_t>(1u << v);
    s.adj[v] |= static_cast<std::uint8_t>(1u << u);
  }
  return s;
}

Graph to_graph(const SmallGraph& s) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < s.n; ++v)
    for (int u = 0; u < v; ++u)
      if (s.adj[v] >> u & 1) edges.emplace_back(u, v);
  return make_graph(s.n, std::move(edges));
}

// Key packing: vertex pairs in colex order ((0,1),(0,2),(1,2),(0,3),...),
// earlier pair in a more significant bit. The first C(n-1,2) bits of a key
// are then exactly the key of the subgraph induced on 0..n-2, which is what
// makes extend-and-keep-canonical enumeration complete.
std::uint64_t labeled_key(const SmallGraph& g) {
  std::uint64_t key = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) key = key << 1 | (g.adj[v] >> u & 1);
  return key;
}

// Per-position block values of the identity labeling: block v holds the bits
// toward vertices 0..v-1, vertex 0 most significant.
std::array<int, kMaxEnum> block_values(const SmallGraph& g) {
  std::array<int, kMaxEnum> blocks{};
  for (int v = 1; v < g.n; ++v) {
    int value = 0;
    for (int u = 0; u < v; ++u) value = value << 1 | (g.adj[v] >> u & 1);
    blocks[v] = value;
  }
  return blocks;
}

// Does any relabeling produce a strictly smaller key? Depth-first over
// position assignments, comparing block by block: a smaller block decides
// immediately, a larger one prunes the branch.
bool smaller_relabeling(const SmallGraph& g, const std::array<int, kMaxEnum>& target) {
  std::array<int, kMaxEnum> place{};
  auto rec = [&](auto&& self, int pos, unsigned used) -> bool {
    if (pos == g.n) return false;
    for (int v = 0; v < g.n; ++v) {
      if (used >> v & 1) continue;
      int block = 0;
      for (int k = 0; k < pos; ++k) block = block << 1 | (g.adj[v] >> place[k] & 1);
      if (block < target[pos]) return true;
      if (block > target[pos]) continue;
      place[pos] = v;
      if (self(self, pos + 1, used | 1u << v)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

bool is_canonical(const SmallGraph& g) { return !smaller_relabeling(g, block_values(g)); }

std::vector<SmallGraph> enumerate_small(int n) {
  std::vector<SmallGraph> level{SmallGraph{1, {}}};
  for (int k = 2; k <= n; ++k) {
    std::vector<SmallGraph> next;
    for (const SmallGraph& g : level) {
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        SmallGraph h = g;
        h.n = k;
        h.adj[k - 1] = static_cast<std::uint8_t>(mask);
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1) h.adj[v] |= static_cast<std::uint8_t>(1u << (k - 1));
        if (is_canonical(h)) next.push_back(h);
      }
    }
    level = std::move(next);
  }
  return level;
}

void require_enumerable(int n) {
  if (n < 1) fail(errc::invalid_params, "need at least one vertex");
  if (n > kMaxEnum) fail(errc::too_large, "exhaustive enumeration is capped at 8 vertices");
}

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
  require_enumerable(g.n);
  SmallGraph s = to_small(g);
  std::array<int, kMaxEnum> order{};
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::uint64_t best = ~std::uint64_t{0};
  SmallGraph relabeled;
  relabeled.n = g.n;
  do {
    for (int v = 0; v < g.n; ++v) {
      std::uint8_t mask = 0;
      for (int u = 0; u < g.n; ++u)
        if (s.adj[order[v]] >> order[u] & 1) mask |= static_cast<std::uint8_t>(1u << u);
      relabeled.adj[v] = mask;
    }
    best = std::min(best, labeled_key(relabeled));
  } while (std::next_permutation(order.begin(), order.begin() + g.n));
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int n, bool regular_only) {
  require_enumerable(n);
  std::vector<Graph> out;
  for (const SmallGraph& s : enumerate_small(n)) {
    Graph g = to_graph(s);
    if (regular_only && !regularity(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<CospectralPair> cospectral_search(int n, MatrixKind which, bool regular_only) {
  const std::vector<Graph> graphs = enumerate_graphs(n, regular_only);
  std::map<std::vector<BigInt>, std::vector<size_t>> groups;
  for (size_t idx = 0; idx < graphs.size(); ++idx)
    groups[charpoly_exact(matrix_of(graphs[idx], which)).coeffs()].push_back(idx);

  std::vector<CospectralPair> pairs;
  for (const auto& [coeffs, members] : groups) {
    if (members.size() < 2) continue;
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        const Graph& first = graphs[members[a]];
        const Graph& second = graphs[members[b]];
        if (canonical_form(first) == canonical_form(second))
          fail(errc::invalid_params, "enumeration produced an isomorphic duplicate");
        pairs.push_back({first, second, IntPoly(coeffs)});
      }
  }
  return pairs;
}

const char* name(CoronaSide side) {
  return side == CoronaSide::vary_g1 ? "vary_g1" : "vary_g2";
}

bool verify_cospectral_corollary(const Graph& a, const Graph& b, const Graph& h, MatrixKind which,
                                 CoronaKind kind, CoronaSide side) {
  if (charpoly_exact(matrix_of(a, which)) != charpoly_exact(matrix_of(b, which)))
    fail(errc::hypothesis_not_met, "the pair is not cospectral for this matrix");
  if (side == CoronaSide::vary_g1) {
    const auto ra = regularity(a), rb = regularity(b);
    if (!ra || !rb || *ra != *rb)
      fail(errc::hypothesis_not_met, "the varying pair must be regular of equal degree");
    return direct_charpoly({a, h, kind}, which) == direct_charpoly({b, h, kind}, which);
  }
  if (!regularity(h)) fail(errc::hypothesis_not_met, "the fixed base graph must be regular");
  if (which != MatrixKind::laplacian &&
      !(coronal(matrix_of(a, which)) == coronal(matrix_of(b, which))))
    fail(errc::hypothesis_not_met, "the pair's coronals differ");
  return direct_charpoly({h, a, kind}, which) == direct_charpoly({h, b, kind}, which);
}

}  // namespace subcorona
