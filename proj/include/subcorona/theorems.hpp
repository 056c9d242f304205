#pragma once

#include <optional>
#include <vector>

#include "subcorona/corona.hpp"
#include "subcorona/spectra.hpp"

namespace subcorona {

// Characteristic polynomial of a corona matrix in the factored shape the
// closed forms produce:
//
//   phi = (B/d)^copies * F^(m1-n1) * HE
//
// where B is the G2 block (charpoly of the G2 matrix, argument shifted by -1
// for L and Q), d the denominator of the reduced coronal Gamma = c/d of that
// matrix, F the flat factor, and HE the per-G1-eigenvalue product cleared of
// denominators and evaluated as homogeneous_eval(chi_G1, u, v). When
// m1 < n1 the F power is negative and folds into HE by exact division.
// Needs g1 regular; g2 is arbitrary.
struct FactoredCharPoly {
  std::vector<std::pair<IntPoly, long>> factors;  // (factor, multiplicity)
  IntPoly expanded;
};

// Factored form only; never expands the product, so it stays cheap even when
// the expanded degree is large.
std::vector<std::pair<IntPoly, long>> theorem_factors(const CoronaSpec& spec, MatrixKind which);

// Same factored form when the exact integer spectrum of g1's matrix (the one
// selected by `which`) is known: each distinct eigenvalue contributes one
// small factor with its multiplicity instead of one degree-n1 product, which
// keeps very large highly symmetric base graphs cheap. The multiplicities
// must sum to n1; requires m1 >= n1.
std::vector<std::pair<IntPoly, long>> theorem_factors(
    const CoronaSpec& spec, MatrixKind which,
    const std::vector<std::pair<BigInt, long>>& g1_spectrum);

FactoredCharPoly theorem_charpoly(const CoronaSpec& spec, MatrixKind which);

// Characteristic polynomial of the assembled corona itself (the oracle side
// of the verification pair).
IntPoly direct_charpoly(const CoronaSpec& spec, MatrixKind which);

// Roots of every factor (exact multiplicity bookkeeping) merged into one
// spectrum; the theorem-route spectrum for arbitrary G2.
Spectrum spectrum_from_factors(const std::vector<std::pair<IntPoly, long>>& factors);

// Closed-form spectrum assembly when G2 is regular too (adjacency and
// signless Laplacian): copy eigenvalues with one coronal-pole copy dropped,
// flat-factor roots with multiplicity |m1-n1|, and one cubic per G1
// eigenvalue. Returned as clusters so enormous multiplicities stay cheap.
std::vector<SpectrumCluster> theorem_spectrum_clusters(const CoronaSpec& spec, MatrixKind which);

Spectrum theorem_spectrum_regular(const CoronaSpec& spec, MatrixKind which);

// Adjacency spectrum of g (*) K_{p,q} through the biregular closed form:
// zeros plus one quartic per g eigenvalue, plus a flat cubic for the edge
// kind. Needs g regular with m >= n and p, q >= 1.
Spectrum kpq_spectrum(const Graph& g, int p, int q, CoronaKind kind);

struct VerifyReport {
  MatrixKind which = MatrixKind::adjacency;
  CoronaKind kind = CoronaKind::vertex;
  IntPoly theorem_poly;
  IntPoly direct_poly;
  bool exact_match = false;
  double spectrum_residual = 0;
  double elapsed_ms = 0;
};

// Theorem-vs-direct comparison over the requested matrices and kinds
// (defaults: all three matrices, both kinds), in fixed A/L/Q x vertex/edge
// order.
std::vector<VerifyReport> verify_corona(const Graph& g1, const Graph& g2,
                                        std::optional<MatrixKind> which = std::nullopt,
                                        std::optional<CoronaKind> kind = std::nullopt);

}  // namespace subcorona
