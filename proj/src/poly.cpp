#include "subcorona/poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace subcorona {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::invalid_params, "matrix shape mismatch");
  IntMatrix r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::invalid_params, "matrix shape mismatch");
  IntMatrix r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
  return r;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(errc::invalid_params, "matrix shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const BigInt& v = x.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j)
        mpz_addmul(r.at(i, j).get_mpz_t(), v.get_mpz_t(), y.at(k, j).get_mpz_t());
    }
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r(m.cols, m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

BigInt det_exact(IntMatrix m) {
  if (m.rows != m.cols) fail(errc::non_square, "determinant of a non-square matrix");
  const long n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination: every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (long j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        BigInt t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

IntPoly IntPoly::x() { return monomial(1); }

IntPoly IntPoly::monomial(long k, BigInt c) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, BigInt(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::operator[](long k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
  return c_[k];
}

const BigInt& IntPoly::lead() const {
  if (c_.empty()) fail(errc::invalid_params, "leading coefficient of the zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

BigInt IntPoly::eval(const BigInt& x0) const {
  BigInt r = 0;
  for (long k = degree(); k >= 0; --k) {
    r *= x0;
    r += c_[k];
  }
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = BigInt(static_cast<long>(k)) * c_[k];
  return IntPoly(std::move(d));
}

IntPoly IntPoly::shifted_arg(const BigInt& delta) const {
  // Horner: p(x + delta) built from the top coefficient down.
  IntPoly r;
  for (long k = degree(); k >= 0; --k) {
    IntPoly next = r.times_x_pow(1);
    for (size_t j = 0; j < r.c_.size(); ++j)
      mpz_addmul(next.c_[j].get_mpz_t(), delta.get_mpz_t(), r.c_[j].get_mpz_t());
    next += IntPoly(c_[k]);
    r = std::move(next);
  }
  return r;
}

IntPoly IntPoly::times_x_pow(long k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(c_.size() + k, BigInt(0));
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

long IntPoly::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<long>(k);
  return 0;
}

IntPoly IntPoly::divided_by_x_pow(long k) const {
  if (k == 0) return *this;
  if (valuation() < k) fail(errc::inexact_division, "polynomial not divisible by x^" + std::to_string(k));
  IntPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

std::string IntPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> r(x.degree() + y.degree() + 2);
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  r.pop_back();  // degrees add exactly; the extra slot stays zero
  return IntPoly(std::move(r));
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
  if (s == 0) return {};
  std::vector<BigInt> r = p.coeffs();
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned long e) {
  IntPoly r({1});
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) fail(errc::inexact_division, "division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) fail(errc::inexact_division, "divisor degree exceeds dividend degree");
  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> q(p.degree() - d.degree() + 1);
  const auto& dc = d.coeffs();
  for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
    BigInt& top = rem[k + d.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
      fail(errc::inexact_division, "inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
    for (size_t j = 0; j < dc.size(); ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), dc[j].get_mpz_t());
  }
  for (const auto& v : rem)
    if (v != 0) fail(errc::inexact_division, "nonzero remainder in exact division");
  return IntPoly(std::move(q));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt c = content(p);
  std::vector<BigInt> r = p.coeffs();
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

namespace {

IntPoly scalar_exact_divide(const IntPoly& p, const BigInt& s) {
  std::vector<BigInt> r = p.coeffs();
  for (auto& v : r) {
    if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()))
      fail(errc::inexact_division, "inexact scalar division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

// lead(b)^(deg a - deg b + 1) * a  mod  b, by repeated top-term elimination.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  long e = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    IntPoly t = (a.lead() * b).times_x_pow(a.degree() - db);
    a = b.lead() * a - t;
    --e;
  }
  while (e-- > 0) a = b.lead() * a;
  return a;
}

BigInt int_pow(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  auto positive = [](IntPoly p) { return !p.is_zero() && p.lead() < 0 ? -p : p; };
  if (a.is_zero()) return positive(std::move(b));
  if (b.is_zero()) return positive(std::move(a));
  BigInt c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  IntPoly A = primitive_part(a);
  IntPoly B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  // Subresultant polynomial remainder sequence (Brown's g/h normalization).
  BigInt g = 1, h = 1;
  while (true) {
    long delta = A.degree() - B.degree();
    IntPoly R = pseudo_rem(A, B);
    if (R.is_zero()) break;
    if (R.degree() == 0) {
      B = IntPoly({1});
      break;
    }
    A = std::move(B);
    B = scalar_exact_divide(R, g * int_pow(h, delta));
    g = A.lead();
    if (delta > 0) {
      BigInt gd = int_pow(g, delta);
      if (delta == 1)
        h = gd;
      else {
        BigInt hd = int_pow(h, delta - 1);
        if (!mpz_divisible_p(gd.get_mpz_t(), hd.get_mpz_t()))
          fail(errc::inexact_division, "subresultant normalization");
        mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
      }
    }
  }
  return positive(c * primitive_part(B));
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return p;
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_divide(p, g);
}

IntPoly homogeneous_eval(const IntPoly& chi, const IntPoly& u, const IntPoly& v) {
  if (!chi.is_monic()) fail(errc::not_monic, "homogeneous_eval needs a monic polynomial");
  IntPoly r({1});
  IntPoly vp({1});
  for (long k = chi.degree() - 1; k >= 0; --k) {
    r = r * u;
    vp = vp * v;
    if (chi[k] != 0) r += chi[k] * vp;
  }
  return r;
}

RationalFunc::RationalFunc(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(errc::invalid_params, "rational function with zero denominator");
  if (num.is_zero()) {
    den = IntPoly({1});
    return;
  }
  IntPoly g = poly_gcd(num, den);
  if (g.degree() > 0 || g[0] != 1) {
    num = exact_divide(num, g);
    den = exact_divide(den, g);
  }
  if (den.lead() < 0) {
    num = -num;
    den = -den;
  }
}

RationalFunc RationalFunc::shifted_arg(const BigInt& delta) const {
  RationalFunc r;
  // Shifting the argument cannot introduce a common factor.
  r.num = num.shifted_arg(delta);
  r.den = den.shifted_arg(delta);
  return r;
}

CharpolyResult charpoly_with_adjugate_sum(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::non_square, "characteristic polynomial of a non-square matrix");
  const long n = m.rows;
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  if (n == 0) return {IntPoly({1}), IntPoly{}};

  struct Entry {
    long i, j;
    const BigInt* v;
  };
  std::vector<Entry> nz;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (m.at(i, j) != 0) nz.push_back({i, j, &m.at(i, j)});

  // adj(xI - M) = sum_{k=0}^{n-1} B_k x^{n-1-k} with B_0 = I.
  std::vector<BigInt> adj(n);
  adj[n - 1] = n;

  IntMatrix B = IntMatrix::identity(n);
  IntMatrix C(n, n);
  for (long k = 1; k <= n; ++k) {
    for (auto& v : C.a) v = 0;
    for (const auto& e : nz) {
      const BigInt* brow = &B.at(e.j, 0);
      BigInt* crow = &C.at(e.i, 0);
      for (long j = 0; j < n; ++j)
        mpz_addmul(crow[j].get_mpz_t(), e.v->get_mpz_t(), brow[j].get_mpz_t());
    }
    BigInt tr = 0;
    for (long i = 0; i < n; ++i) tr += C.at(i, i);
    BigRat q(-tr, k);
    q.canonicalize();
    if (q.get_den() != 1) fail(errc::inexact_division, "Faddeev-LeVerrier trace division");
    c[n - k] = q.get_num();
    std::swap(B, C);
    for (long i = 0; i < n; ++i) B.at(i, i) += c[n - k];
    if (k <= n - 1) {
      BigInt s = 0;
      for (const auto& v : B.a) s += v;
      adj[n - 1 - k] = s;
    }
  }
  for (const auto& v : B.a)
    if (v != 0) fail(errc::inexact_division, "Faddeev-LeVerrier did not terminate at zero");
  return {IntPoly(std::move(c)), IntPoly(std::move(adj))};
}

IntPoly charpoly_exact(const IntMatrix& m) { return charpoly_with_adjugate_sum(m).chi; }

RationalFunc coronal(const IntMatrix& m) {
  CharpolyResult r = charpoly_with_adjugate_sum(m);
  return RationalFunc(r.adj_sum, r.chi);
}

RationalFunc coronal_constant_rowsum(long n, const BigInt& t) {
  if (n <= 0) fail(errc::invalid_params, "coronal of an empty matrix");
  return RationalFunc(IntPoly(BigInt(n)), IntPoly(std::vector<BigInt>{-t, 1}));
}

}  // namespace subcorona
