#include "subcorona/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace subcorona {

namespace {

long require_regular(const Graph& g, const char* role) {
  auto r = regularity(g);
  if (!r) fail(errc::reg_required, std::string(role) + " must be regular");
  return *r;
}

struct ClearedParts {
  IntPoly base;  // copy block B/d
  IntPoly flat;  // F, exponent m1 - n1
  IntPoly u, v;  // per-G1-eigenvalue factor (u - t*v)/d
  long copies = 0;
};

// Clears the coronal Gamma = c/d out of the closed form, leaving
// phi = base^copies * flat^(m1-n1) * prod_i (u - t_i v) with every piece an
// integer polynomial, where t_i runs over the G1 eigenvalues of the same
// matrix kind (v carries the sign that makes this product come out right).
ClearedParts cleared_parts(long r1, long n1, long m1, const Graph& g2, CoronaKind kind,
                           MatrixKind which) {
  const long n2 = g2.n;
  if (kind == CoronaKind::edge && m1 == 0)
    fail(errc::edge_required, "edge corona needs the base graph to have an edge");

  const CharpolyResult cp2 = charpoly_with_adjugate_sum(matrix_of(g2, which));

  // L and Q blocks enter at argument x-1; adjacency at x.
  const bool shifted = which != MatrixKind::adjacency;
  RationalFunc gamma(cp2.adj_sum, cp2.chi);
  IntPoly block = cp2.chi;
  if (shifted) {
    gamma = gamma.shifted_arg(-1);
    block = block.shifted_arg(-1);
  }
  const IntPoly& c = gamma.num;
  const IntPoly& d = gamma.den;
  const IntPoly x = IntPoly::x();

  IntPoly u, v, flat;
  const bool vertex = kind == CoronaKind::vertex;
  switch (which) {
    case MatrixKind::adjacency:
      // factor: x^2 - Gamma x - r1 - lambda_i
      u = d * (x * x - IntPoly(BigInt(r1))) - c * x;
      v = d;
      flat = vertex ? x : d * x - c;
      break;
    case MatrixKind::laplacian: {
      // vertex factor: x^2 - (2+r1+n2+Gamma)x + 2n2 + 2Gamma + mu_i
      // edge factor:   x^2 - (2+r1+n2+Gamma)x + r1 n2 + r1 Gamma + mu_i
      IntPoly quad({vertex ? 2 * n2 : r1 * n2, -(2 + r1 + n2), 1});
      u = d * quad - c * IntPoly({vertex ? -2 : -r1, 1});
      v = -d;
      flat = vertex ? IntPoly({-2, 1}) : d * IntPoly({-2 - n2, 1}) - c;
      break;
    }
    case MatrixKind::signless_laplacian: {
      // vertex factor: x^2 - (2+r1+n2+Gamma)x + 2(r1+n2+Gamma) - nu_i
      // edge factor:   x^2 - (2+r1+n2+Gamma)x + r1(2+n2+Gamma) - nu_i
      IntPoly quad({vertex ? 2 * (r1 + n2) : r1 * (2 + n2), -(2 + r1 + n2), 1});
      u = d * quad - c * IntPoly({vertex ? -2 : -r1, 1});
      v = d;
      flat = vertex ? IntPoly({-2, 1}) : d * IntPoly({-2 - n2, 1}) - c;
      break;
    }
  }

  ClearedParts out;
  out.base = exact_divide(block, d);
  out.flat = std::move(flat);
  out.u = std::move(u);
  out.v = std::move(v);
  out.copies = vertex ? n1 : m1;
  return out;
}

ClearedParts cleared_parts(const CoronaSpec& spec, MatrixKind which) {
  const long r1 = require_regular(spec.g1, "the base graph");
  return cleared_parts(r1, spec.g1.n, spec.g1.m(), spec.g2, spec.kind, which);
}

void check_total_degree(const CoronaSpec& spec, const std::vector<std::pair<IntPoly, long>>& fs) {
  long total = 0;
  for (const auto& [f, mult] : fs) total += f.degree() * mult;
  if (total != corona_order(spec))
    fail(errc::invalid_params, "factored degree disagrees with the corona order");
}

}  // namespace

std::vector<std::pair<IntPoly, long>> theorem_factors(const CoronaSpec& spec, MatrixKind which) {
  ClearedParts t = cleared_parts(spec, which);
  const long n1 = spec.g1.n, m1 = spec.g1.m();
  const IntPoly chi1 = charpoly_exact(matrix_of(spec.g1, which));
  IntPoly he = homogeneous_eval(chi1, t.u, t.v);

  std::vector<std::pair<IntPoly, long>> fs;
  if (t.base.degree() > 0) fs.emplace_back(std::move(t.base), t.copies);
  if (m1 > n1) {
    fs.emplace_back(std::move(t.flat), m1 - n1);
    fs.emplace_back(std::move(he), 1);
  } else if (m1 == n1) {
    fs.emplace_back(std::move(he), 1);
  } else {
    // Negative flat exponent: the algebra guarantees flat^(n1-m1) divides
    // the eigenvalue product; exact_divide enforces it.
    fs.emplace_back(exact_divide(he, pow(t.flat, n1 - m1)), 1);
  }
  check_total_degree(spec, fs);
  return fs;
}

std::vector<std::pair<IntPoly, long>> theorem_factors(
    const CoronaSpec& spec, MatrixKind which,
    const std::vector<std::pair<BigInt, long>>& g1_spectrum) {
  const long n1 = spec.g1.n, m1 = spec.g1.m();
  if (m1 < n1) return theorem_factors(spec, which);  // fold path needs the full product
  long total = 0;
  for (const auto& [value, count] : g1_spectrum) total += count;
  if (total != n1) fail(errc::invalid_params, "base spectrum multiplicities do not sum to n1");

  ClearedParts t = cleared_parts(spec, which);
  std::vector<std::pair<IntPoly, long>> fs;
  if (t.base.degree() > 0) fs.emplace_back(std::move(t.base), t.copies);
  if (m1 > n1) fs.emplace_back(std::move(t.flat), m1 - n1);
  for (const auto& [value, count] : g1_spectrum) fs.emplace_back(t.u - value * t.v, count);
  check_total_degree(spec, fs);
  return fs;
}

FactoredCharPoly theorem_charpoly(const CoronaSpec& spec, MatrixKind which) {
  FactoredCharPoly out;
  out.factors = theorem_factors(spec, which);
  out.expanded = IntPoly({1});
  for (const auto& [f, mult] : out.factors)
    out.expanded = out.expanded * pow(f, static_cast<unsigned long>(mult));
  if (!out.expanded.is_monic()) fail(errc::not_monic, "expanded theorem polynomial is not monic");
  return out;
}

IntPoly direct_charpoly(const CoronaSpec& spec, MatrixKind which) {
  return charpoly_exact(matrix_of(corona(spec).graph, which));
}

Spectrum spectrum_from_factors(const std::vector<std::pair<IntPoly, long>>& factors) {
  Spectrum all;
  for (const auto& [f, mult] : factors) {
    Spectrum r = real_roots(f);
    for (long k = 0; k < mult; ++k) all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

// Roots of a cubic/quartic whose coefficients involve one G1 eigenvalue:
// exact square-free handling when every coefficient is (numerically) an
// integer, else the plain companion route.
Spectrum factor_roots(const std::vector<double>& coeffs) {
  bool integral = true;
  for (double c : coeffs)
    if (std::abs(c - std::round(c)) > 1e-9 * std::max(1.0, std::abs(c))) integral = false;
  if (!integral) return real_roots(coeffs);
  std::vector<BigInt> c(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k)
    c[k] = BigInt(static_cast<long>(std::llround(coeffs[k])));
  return real_roots(IntPoly(std::move(c)));
}

struct ClusterBuilder {
  std::vector<std::pair<double, long>> items;

  void add(double value, long count) { items.emplace_back(value, count); }
  void add_all(const Spectrum& values, long count) {
    for (double v : values) add(v, count);
  }

  // Merge within an absolute tolerance, weight by counts.
  std::vector<SpectrumCluster> merged(double tol = 1e-8) {
    std::sort(items.begin(), items.end());
    std::vector<SpectrumCluster> out;
    size_t start = 0;
    while (start < items.size()) {
      size_t end = start + 1;
      while (end < items.size() && items[end].first - items[start].first <= tol) ++end;
      double sum = 0;
      long count = 0;
      for (size_t k = start; k < end; ++k) {
        sum += items[k].first * items[k].second;
        count += items[k].second;
      }
      out.push_back({sum / static_cast<double>(count), count});
      start = end;
    }
    return out;
  }
};

void remove_from_clusters(std::vector<SpectrumCluster>& cl, double value, long count) {
  auto best = cl.end();
  double dist = std::numeric_limits<double>::infinity();
  for (auto it = cl.begin(); it != cl.end(); ++it)
    if (std::abs(it->value - value) < dist) {
      dist = std::abs(it->value - value);
      best = it;
    }
  if (best == cl.end() || dist > 1e-6 * std::max(1.0, std::abs(value)) || best->count < count)
    fail(errc::inexact_division, "flat-factor cancellation not available in assembly");
  best->count -= count;
  if (best->count == 0) cl.erase(best);
}

}  // namespace

std::vector<SpectrumCluster> theorem_spectrum_clusters(const CoronaSpec& spec, MatrixKind which) {
  if (which == MatrixKind::laplacian)
    fail(errc::invalid_params, "closed-form spectrum assembly covers A and Q");
  const long r1 = require_regular(spec.g1, "the base graph");
  const long r2 = require_regular(spec.g2, "the copy graph");
  const long n1 = spec.g1.n, m1 = spec.g1.m(), n2 = spec.g2.n;
  if (spec.kind == CoronaKind::edge && m1 == 0)
    fail(errc::edge_required, "edge corona needs the base graph to have an edge");
  const bool adjacency = which == MatrixKind::adjacency;
  const bool vertex = spec.kind == CoronaKind::vertex;
  const long copies = vertex ? n1 : m1;

  ClusterBuilder acc;

  // Copy-block eigenvalues: all of G2's but one coronal-pole copy (the
  // largest: r2 for A, 2 r2 for Q), shifted by +1 for Q.
  Spectrum eig2 = eigenvalues_sym(matrix_of(spec.g2, which));
  const double pole = adjacency ? static_cast<double>(r2) : 2.0 * r2;
  if (std::abs(eig2.back() - pole) > 1e-6)
    fail(errc::invalid_params, "copy spectrum misses its coronal pole");
  eig2.pop_back();
  for (double v : eig2) acc.add(adjacency ? v : v + 1.0, copies);

  // One cubic per G1 eigenvalue of the same matrix.
  const Spectrum eig1 = eigenvalues_sym(matrix_of(spec.g1, which));
  for (double t : eig1) {
    std::vector<double> cubic;
    if (adjacency) {
      // x^3 - r2 x^2 - (r1 + t + n2) x + r2 (r1 + t)
      cubic = {r2 * (r1 + t), -(r1 + t + n2), static_cast<double>(-r2), 1.0};
    } else {
      const double a = 3.0 + r1 + 2.0 * r2 + n2;
      const double b = vertex
                           ? 2 + 3.0 * r1 + 2.0 * r1 * r2 + 4.0 * r2 + 2.0 * r2 * n2 + 2.0 * n2 - t
                           : 2 + r1 * static_cast<double>(n2) + 2.0 * r1 * r2 + 2.0 * r2 * n2 +
                                 3.0 * r1 + 4.0 * r2 - t;
      const double c = vertex
                           ? -2.0 * r1 - 4.0 * r1 * r2 - 4.0 * r2 * n2 + t + 2.0 * r2 * t
                           : -2.0 * r1 - 4.0 * r1 * r2 - 2.0 * r1 * r2 * n2 + t + 2.0 * r2 * t;
      cubic = {c, b, -a, 1.0};
    }
    acc.add_all(factor_roots(cubic), 1);
  }

  // Flat factor, multiplicity m1 - n1; a deficit (tree-like base) cancels
  // against matching cubic roots.
  Spectrum flat_roots;
  if (vertex) {
    flat_roots = {adjacency ? 0.0 : 2.0};
  } else if (adjacency) {
    flat_roots = real_roots(IntPoly({-n2, -r2, 1}));
  } else {
    flat_roots = real_roots(IntPoly({2 * (1 + 2 * r2 + r2 * n2), -(3 + 2 * r2 + n2), 1}));
  }
  if (m1 > n1) acc.add_all(flat_roots, m1 - n1);

  auto clusters = acc.merged();
  if (m1 < n1)
    for (double v : flat_roots) remove_from_clusters(clusters, v, n1 - m1);

  long total = 0;
  for (const auto& cl : clusters) total += cl.count;
  if (total != corona_order(spec))
    fail(errc::invalid_params, "assembled spectrum size disagrees with the corona order");
  return clusters;
}

Spectrum theorem_spectrum_regular(const CoronaSpec& spec, MatrixKind which) {
  Spectrum out;
  for (const auto& cl : theorem_spectrum_clusters(spec, which))
    out.insert(out.end(), cl.count, cl.value);
  return out;
}

Spectrum kpq_spectrum(const Graph& g, int p, int q, CoronaKind kind) {
  const long r = require_regular(g, "the base graph");
  const long n = g.n, m = g.m();
  if (p < 1 || q < 1) fail(errc::invalid_params, "biregular copy parts must be positive");
  if (m < n) fail(errc::invalid_params, "closed form needs m >= n");
  const long pq = static_cast<long>(p) * q;

  ClusterBuilder acc;
  acc.add(0.0, kind == CoronaKind::vertex ? m + (p + q - 3) * n : m * (p + q - 2));
  if (kind == CoronaKind::edge && m > n)
    acc.add_all(real_roots(IntPoly({-2 * pq, -(pq + p + q), 0, 1})), m - n);
  for (double t : eigenvalues_sym(adjacency_matrix(g))) {
    // x^4 - (pq + p + q + r + t) x^2 - 2pq x + pq (r + t)
    acc.add_all(factor_roots({pq * (r + t), -2.0 * pq, -(pq + p + q + r + t), 0.0, 1.0}), 1);
  }

  Spectrum out;
  long expected = kind == CoronaKind::vertex ? n * (1 + p + q) + m : m * (1 + p + q) + n;
  for (const auto& cl : acc.merged()) out.insert(out.end(), cl.count, cl.value);
  if (static_cast<long>(out.size()) != expected)
    fail(errc::invalid_params, "assembled spectrum size disagrees with the corona order");
  return out;
}

std::vector<VerifyReport> verify_corona(const Graph& g1, const Graph& g2,
                                        std::optional<MatrixKind> which,
                                        std::optional<CoronaKind> kind) {
  std::vector<VerifyReport> out;
  for (MatrixKind w :
       {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless_laplacian}) {
    if (which && *which != w) continue;
    for (CoronaKind k : {CoronaKind::vertex, CoronaKind::edge}) {
      if (kind && *kind != k) continue;
      const auto start = std::chrono::steady_clock::now();
      CoronaSpec spec{g1, g2, k};
      VerifyReport rep;
      rep.which = w;
      rep.kind = k;
      FactoredCharPoly thm = theorem_charpoly(spec, w);
      IntMatrix direct = matrix_of(corona(spec).graph, w);
      rep.direct_poly = charpoly_exact(direct);
      rep.theorem_poly = std::move(thm.expanded);
      rep.exact_match = rep.theorem_poly == rep.direct_poly;
      rep.spectrum_residual =
          spectra_residual(eigenvalues_sym(direct), spectrum_from_factors(thm.factors));
      rep.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace subcorona
