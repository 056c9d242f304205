#include "subcorona/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace subcorona {

std::vector<SpectrumCluster> cluster(Spectrum values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<SpectrumCluster> out;
  size_t start = 0;
  while (start < values.size()) {
    size_t end = start + 1;
    while (end < values.size() && values[end] - values[start] <= tol) ++end;
    double sum = 0;
    for (size_t k = start; k < end; ++k) sum += values[k];
    out.push_back({sum / static_cast<double>(end - start), static_cast<long>(end - start)});
    start = end;
  }
  return out;
}

Spectrum eigenvalues_sym(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::non_square, "eigenvalues of a non-square matrix");
  for (long i = 0; i < m.rows; ++i)
    for (long j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) fail(errc::not_symmetric, "matrix is not symmetric");
  Eigen::MatrixXd a(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) a(i, j) = m.at(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  Spectrum s(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows);
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Parlett-Reinsch balancing: conjugate by a diagonal matrix of radix powers
// until every row/column norm pair is roughly even.
void balance(Eigen::MatrixXd& a) {
  const long n = a.rows();
  const double radix = 2.0, sq = radix * radix;
  bool again = true;
  while (again) {
    again = false;
    for (long i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (long j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      double f = 1, s = c + r;
      while (c < r / radix) {
        c *= sq;
        r /= sq;
        f *= radix;
      }
      while (c > r * radix) {
        c /= sq;
        r *= sq;
        f /= radix;
      }
      if ((c + r) < 0.95 * s) {
        again = true;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Roots of a polynomial with simple (or at least well separated) roots,
// given monic-normalized real coefficients c[0..d-1] of x^0..x^(d-1).
std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
  const long d = static_cast<long>(c.size());
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (long i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (long i = 0; i < d; ++i) comp(i, d - 1) = -c[i];
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<std::complex<double>> roots(d);
  for (long i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

Spectrum require_real(const std::vector<std::complex<double>>& roots) {
  Spectrum out;
  out.reserve(roots.size());
  for (const auto& z : roots) {
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z.real())))
      fail(errc::complex_roots, "polynomial has a non-real root");
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum simple_roots(const IntPoly& p) {
  if (p.degree() == 0) return {};
  const double lead = p.lead().get_d();
  std::vector<double> c(p.degree());
  for (long k = 0; k < p.degree(); ++k) c[k] = p[k].get_d() / lead;
  return require_real(companion_roots(c));
}

// Roots with multiplicity of p, p(0) != 0 or deg 0.
std::vector<std::pair<double, long>> roots_with_multiplicity(const IntPoly& p) {
  if (p.degree() < 1) return {};
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) {
    std::vector<std::pair<double, long>> out;
    for (double r : simple_roots(p)) out.emplace_back(r, 1);
    return out;
  }
  // p/g carries each distinct root once; roots of g are the repeated ones,
  // each with multiplicity one lower than in p.
  std::vector<std::pair<double, long>> out;
  for (double r : simple_roots(exact_divide(p, g))) out.emplace_back(r, 1);
  for (const auto& [rv, rm] : roots_with_multiplicity(g)) {
    auto best = out.end();
    double dist = std::numeric_limits<double>::infinity();
    for (auto it = out.begin(); it != out.end(); ++it)
      if (std::abs(it->first - rv) < dist) {
        dist = std::abs(it->first - rv);
        best = it;
      }
    if (best == out.end() || dist > 1e-6 * std::max(1.0, std::abs(rv)))
      fail(errc::complex_roots, "repeated-root bookkeeping lost a root");
    best->second += rm;
  }
  return out;
}

}  // namespace

Spectrum real_roots(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_params, "roots of the zero polynomial");
  const long zeros = p.valuation();
  Spectrum values(zeros, 0.0);
  for (const auto& [v, m] : roots_with_multiplicity(p.divided_by_x_pow(zeros)))
    values.insert(values.end(), m, v);
  std::sort(values.begin(), values.end());
  // Snap clusters (spec'd 1e-8) so equal roots from different square-free
  // levels report one representative each.
  Spectrum out;
  out.reserve(values.size());
  for (const auto& cl : cluster(std::move(values))) out.insert(out.end(), cl.count, cl.value);
  return out;
}

Spectrum real_roots(const std::vector<double>& coeffs) {
  long d = static_cast<long>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[d] == 0) --d;
  if (d < 0) fail(errc::invalid_params, "roots of the zero polynomial");
  if (d == 0) return {};
  std::vector<double> c(d);
  for (long k = 0; k < d; ++k) c[k] = coeffs[k] / coeffs[d];
  return require_real(companion_roots(c));
}

std::optional<std::vector<std::pair<BigInt, long>>> integer_root_factorization(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_params, "factoring the zero polynomial");
  std::vector<std::pair<BigInt, long>> out;
  IntPoly rest = p;
  if (long zeros = rest.valuation(); zeros > 0) {
    out.emplace_back(BigInt(0), zeros);
    rest = rest.divided_by_x_pow(zeros);
  }
  while (rest.degree() > 0) {
    Spectrum numeric;
    try {
      numeric = real_roots(squarefree_part(rest));
    } catch (const error& e) {
      if (e.code() == errc::complex_roots) return std::nullopt;
      throw;
    }
    const long before = rest.degree();
    for (double r : numeric) {
      const double rounded = std::round(r);
      if (std::abs(r - rounded) > 1e-6 * std::max(1.0, std::abs(r))) return std::nullopt;
      const BigInt root(static_cast<long>(std::llround(rounded)));
      const IntPoly linear(std::vector<BigInt>{-root, BigInt(1)});
      long count = 0;
      while (rest.degree() > 0 && rest.eval(root) == 0) {
        rest = exact_divide(rest, linear);
        ++count;
      }
      if (count > 0) out.emplace_back(root, count);
    }
    if (rest.degree() == before) return std::nullopt;  // no numeric root verified exactly
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > tol * std::max(1.0, std::abs(a[k]))) return false;
  return true;
}

double spectra_residual(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]) / std::max(1.0, std::abs(a[k])));
  return worst;
}

}  // namespace subcorona
