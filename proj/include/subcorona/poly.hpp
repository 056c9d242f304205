#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "subcorona/error.hpp"

namespace subcorona {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Dense integer matrix, row-major.
struct IntMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  BigInt& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(long n);
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);

// Fraction-free (Bareiss) determinant; m must be square.
BigInt det_exact(IntMatrix m);

// Integer polynomial, coefficients ascending (c[k] is the x^k coefficient).
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);
  explicit IntPoly(const BigInt& constant);

  static IntPoly x();                       // the monomial x
  static IntPoly monomial(long k, BigInt c = 1);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& operator[](long k) const;   // 0 outside the stored range
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& lead() const;

  bool operator==(const IntPoly& o) const = default;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);

  BigInt eval(const BigInt& x0) const;
  IntPoly derivative() const;
  IntPoly shifted_arg(const BigInt& delta) const;  // p(x + delta)
  IntPoly times_x_pow(long k) const;               // p * x^k
  long valuation() const;                          // largest k with x^k | p (0 for p=0)
  IntPoly divided_by_x_pow(long k) const;          // exact; INEXACT_DIVISION otherwise

  std::string pretty(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

IntPoly operator+(IntPoly x, const IntPoly& y);
IntPoly operator-(IntPoly x, const IntPoly& y);
IntPoly operator*(const IntPoly& x, const IntPoly& y);
IntPoly operator*(const BigInt& s, const IntPoly& p);
IntPoly pow(const IntPoly& p, unsigned long e);

// Quotient of exact division; throws INEXACT_DIVISION if d does not divide p.
IntPoly exact_divide(const IntPoly& p, const IntPoly& d);

BigInt content(const IntPoly& p);          // nonnegative gcd of coefficients
IntPoly primitive_part(const IntPoly& p);  // p / content, sign of lead kept

// Polynomial gcd over the integers (subresultant polynomial remainder
// sequence), normalized to a positive leading coefficient. Includes the
// integer content gcd.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Square-free part p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

// sum_k chi[k] * u^k * v^(deg chi - k); chi must be monic.
IntPoly homogeneous_eval(const IntPoly& chi, const IntPoly& u, const IntPoly& v);

// Reduced ratio of integer polynomials with a positive-leading denominator.
struct RationalFunc {
  IntPoly num;
  IntPoly den;

  RationalFunc() : den(IntPoly({1})) {}
  RationalFunc(IntPoly n, IntPoly d);  // reduces; INVALID_PARAMS if d == 0

  RationalFunc shifted_arg(const BigInt& delta) const;  // f(x + delta)
  bool operator==(const RationalFunc& o) const = default;
};

struct CharpolyResult {
  IntPoly chi;      // det(xI - M), monic, degree n
  IntPoly adj_sum;  // sum of the entries of adj(xI - M), degree n-1 (n > 0)
};

// Faddeev-LeVerrier with exact arithmetic. The per-step trace division is
// done as a rational and asserted integral; matrix iterates stay integer.
// The matrix product walks only the nonzeros of M, so sparse inputs cost
// O(n * nnz) per step.
CharpolyResult charpoly_with_adjugate_sum(const IntMatrix& m);

IntPoly charpoly_exact(const IntMatrix& m);

// Gamma_M(x) = 1^T (xI - M)^{-1} 1 as a reduced rational function.
RationalFunc coronal(const IntMatrix& m);

// Coronal of any n x n matrix with constant row sum t: n / (x - t).
RationalFunc coronal_constant_rowsum(long n, const BigInt& t);

}  // namespace subcorona
