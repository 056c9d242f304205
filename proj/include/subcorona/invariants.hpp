#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "subcorona/corona.hpp"
#include "subcorona/poly.hpp"
#include "subcorona/spectra.hpp"

namespace subcorona {

// Number of spanning trees by the matrix-tree theorem (exact Laplacian
// cofactor determinant); 0 for disconnected graphs.
BigInt spanning_trees_oracle(const Graph& g);

// Closed-form spanning-tree count of the corona, evaluated exactly in
// rational arithmetic and asserted integral. Needs g1 regular and connected.
BigInt spanning_trees_formula(const CoronaSpec& spec);

// Kirchhoff index as n * sum of reciprocal nonzero Laplacian eigenvalues.
double kirchhoff_oracle(const Graph& g);

// Closed-form Kirchhoff index of the corona. Needs g1 regular and connected.
double kirchhoff_formula(const CoronaSpec& spec);

bool is_integral(const Spectrum& values, double tol);
bool is_integral(const std::vector<SpectrumCluster>& clusters, double tol);

// The four constructions of integral coronae: a complete or balanced
// complete-bipartite base with edgeless copies, sized so every eigenvalue
// is an integer.
enum class IntegralFamily { vertex_complete, vertex_bipartite, edge_complete, edge_bipartite };
const char* name(IntegralFamily family);
std::optional<IntegralFamily> parse_integral_family(std::string_view text);

struct IntegralInstance {
  long n1 = 0;
  long n2 = 0;
  CoronaSpec spec;  // not materialized: the largest instances have millions of vertices
};

// vertex_complete(s, h) with h >= 2, s >= 3, h^2 < s^2 < 2h^2 + 2;
// vertex_bipartite(s, t) and edge_bipartite(s, t) with s, t >= 1;
// edge_complete(t) with t >= 1.
IntegralInstance integral_family(IntegralFamily family, const std::vector<long>& params);

// Exact spectrum of a symmetric integer matrix whose eigenvalues are all
// integers. Small matrices go through the characteristic polynomial; large
// ones through an exact Krylov minimal polynomial (verified to annihilate
// the matrix) plus a trace/Vandermonde multiplicity solve, which needs the
// minimal polynomial's degree to stay tiny. Sorted ascending by value.
std::vector<std::pair<BigInt, long>> exact_integer_spectrum(const IntMatrix& m,
                                                            long degree_cap = 6);

// Minimum adjacency bit-string over all vertex permutations, packed with
// earlier (colex-ordered) vertex pairs in more significant bits. Equal
// values certify isomorphism, distinct values non-isomorphism. n <= 8.
std::uint64_t canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Every isomorphism class on exactly n vertices (n <= 8), one canonically
// labeled representative each.
std::vector<Graph> enumerate_graphs(int n, bool regular_only = false);

struct CospectralPair {
  Graph first;
  Graph second;
  IntPoly shared_charpoly;
};

// All unordered pairs of non-isomorphic graphs on exactly n vertices with
// identical exact characteristic polynomials of the chosen matrix.
std::vector<CospectralPair> cospectral_search(int n, MatrixKind which, bool regular_only = false);

enum class CoronaSide { vary_g1, vary_g2 };
const char* name(CoronaSide side);

// Checks one instance of the cospectrality transfer statements: with
// side == vary_g1, builds a (*) h and b (*) h (the pair must be cospectral
// regular graphs of equal degree); with side == vary_g2, builds h (*) a and
// h (*) b (the pair must be cospectral, and for A and Q must also share the
// same coronal). Returns whether the two coronae have identical exact
// characteristic polynomials; unmet hypotheses raise HYPOTHESIS_NOT_MET.
bool verify_cospectral_corollary(const Graph& a, const Graph& b, const Graph& h, MatrixKind which,
                                 CoronaKind kind, CoronaSide side);

}  // namespace subcorona
