#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subcorona/poly.hpp"

namespace subcorona {

// Real eigenvalue / root multisets, sorted ascending.
using Spectrum = std::vector<double>;

struct SpectrumCluster {
  double value = 0;
  long count = 0;
};

// Greedy absolute-tolerance clustering of a value multiset; the reported
// value is the mean of each cluster's members.
std::vector<SpectrumCluster> cluster(Spectrum values, double tol = 1e-8);

// Eigenvalues of an exactly symmetric integer matrix.
Spectrum eigenvalues_sym(const IntMatrix& m);

// All real roots of p with multiplicity. Multiplicity is resolved exactly
// (square-free split via the integer-polynomial gcd) before any numerics, so
// repeated roots do not degrade accuracy; the companion matrix of each
// square-free part is balanced and fed to a dense eigensolver. Roots are
// clustered at 1e-8. A root with |imag| beyond tolerance raises
// COMPLEX_ROOTS; the zero polynomial raises INVALID_PARAMS.
Spectrum real_roots(const IntPoly& p);

// Same companion-matrix route for real (double) coefficients, ascending
// order; used for per-eigenvalue factor polynomials whose coefficients are
// themselves irrational eigenvalues.
Spectrum real_roots(const std::vector<double>& coeffs);

// Full integer-root factorization p = lead * prod (x - r_k)^(e_k), sorted by
// root. Roots are located numerically on square-free parts, then every root
// and every division is verified exactly; returns nullopt when any root
// (real or complex) is not an integer. p must be nonzero.
std::optional<std::vector<std::pair<BigInt, long>>> integer_root_factorization(const IntPoly& p);

// Entrywise comparison with per-entry tolerance tol * max(1, |a_k|).
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

// max_k |a_k - b_k| / max(1, |a_k|); infinity on length mismatch.
double spectra_residual(const Spectrum& a, const Spectrum& b);

}  // namespace subcorona
