#ifndef SPREAD_POLY_HPP
#define SPREAD_POLY_HPP

// Dense polynomials over an exact coefficient ring (GMP integers, or
// recursively, polynomials again for the bivariate/trivariate cases),
// plus the fraction-free machinery built on them: Sylvester resultants
// via Bareiss elimination, primitive gcd, square-free parts, the
// eigenvalue-difference transforms (shift, T^m removal, tau = T^2).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spread {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int &x) { return sgn(x) == 0; }
inline bool is_zero(const Rat &x) { return sgn(x) == 0; }

inline Int divexact(const Int &a, const Int &b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class C> class Poly;
template <class C> bool is_zero(const Poly<C> &p);
template <class C> Poly<C> divexact(const Poly<C> &a, const Poly<C> &b);

// Coefficients ascending; the zero polynomial is the empty vector.
template <class C> class Poly {
public:
  Poly() = default;
  Poly(int v) {  // constant polynomial; works at any nesting depth
    if (v != 0) c_.push_back(C(v));
  }
  explicit Poly(std::vector<C> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<C> c) : c_(c) { trim(); }

  static Poly constant(C v) {
    Poly p;
    if (!spread::is_zero(v)) p.c_.push_back(std::move(v));
    return p;
  }
  static Poly var() { return Poly{C{}, C{1}}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<C> &coeffs() const { return c_; }
  const C &operator[](size_t i) const { return c_[i]; }
  const C &lead() const { return c_.back(); }

  // coefficient access with implicit zeros above the degree
  C coeff(size_t i) const { return i < c_.size() ? c_[i] : C{}; }

  friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto &x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly &a, const Poly &b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
      if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

  friend Poly operator*(const Poly &a, const Poly &b) {
    if (a.zero() || b.zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly &a, const C &s) {
    if (spread::is_zero(s)) return {};
    Poly r = a;
    for (auto &x : r.c_) x = x * s;
    return r;
  }

  // multiply by x^k
  Poly shifted_up(size_t k) const {
    if (zero()) return {};
    std::vector<C> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  C eval(const C &x) const {
    C r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C{static_cast<long>(i)};
    return Poly(std::move(r));
  }

private:
  void trim() {
    while (!c_.empty() && spread::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C> bool is_zero(const Poly<C> &p) { return p.zero(); }

using ZPoly = Poly<Int>;          // univariate over Z
using APoly = ZPoly;              // polynomial in a
using TAPoly = Poly<ZPoly>;       // polynomial in T (or tau) over Z[a]

// ----- exact division (valid in any integral domain when b | a) -----

template <class C> Poly<C> divexact(const Poly<C> &a, const Poly<C> &b) {
  if (b.zero()) throw std::domain_error("poly division by zero");
  if (a.zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact poly division");
  std::vector<C> rem(a.coeffs());
  std::vector<C> q(a.degree() - b.degree() + 1);
  for (int d = a.degree(); d >= b.degree();) {
    if (is_zero(rem[d])) {
      --d;
      continue;
    }
    C f = divexact(rem[d], b.lead());
    int k = d - b.degree();
    q[k] = f;
    for (int i = 0; i <= b.degree(); ++i) rem[i + k] = rem[i + k] - f * b[i];
    --d;
  }
  for (auto &r : rem)
    if (!is_zero(r)) throw std::domain_error("inexact poly division");
  return Poly<C>(std::move(q));
}

// ----- content / primitive part over Z -----

inline Int content(const ZPoly &p) {
  Int g = 0;
  for (const auto &c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly primitive_part(const ZPoly &p) {
  if (p.zero()) return p;
  Int g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  std::vector<Int> r;
  r.reserve(p.coeffs().size());
  for (const auto &c : p.coeffs()) r.push_back(divexact(c, g));
  return ZPoly(std::move(r));
}

// integer content of a polynomial with Z[a] coefficients
inline Int content(const TAPoly &p) {
  Int g = 0;
  for (const auto &c : p.coeffs())
    for (const auto &x : c.coeffs()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

inline TAPoly strip_content(const TAPoly &p) {
  if (p.zero()) return p;
  Int g = content(p);
  if (g == 1) return p;
  std::vector<ZPoly> r;
  r.reserve(p.coeffs().size());
  for (const auto &c : p.coeffs()) {
    std::vector<Int> cc;
    cc.reserve(c.coeffs().size());
    for (const auto &x : c.coeffs()) cc.push_back(divexact(x, g));
    r.emplace_back(std::move(cc));
  }
  return TAPoly(std::move(r));
}

// ----- gcd and square-free part over Z (primitive PRS) -----

// pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b
inline ZPoly pseudo_rem(ZPoly a, const ZPoly &b) {
  int db = b.degree();
  while (!a.zero() && a.degree() >= db) {
    int k = a.degree() - db;
    ZPoly t = (b * a.lead()).shifted_up(k);
    a = a * b.lead() - t;
  }
  return a;
}

// primitive gcd over Z, positive leading coefficient
inline ZPoly poly_gcd(ZPoly p, ZPoly q) {
  if (p.zero() && q.zero()) throw std::domain_error("gcd(0,0)");
  if (p.zero()) return primitive_part(q);
  if (q.zero()) return primitive_part(p);
  p = primitive_part(p);
  q = primitive_part(q);
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.zero()) {
    ZPoly r = primitive_part(pseudo_rem(p, q));
    p = std::move(q);
    q = std::move(r);
  }
  if (p.degree() == 0) return ZPoly{Int(1)};
  return p;
}

// p / gcd(p, p'): same distinct roots, all simple; primitive
inline ZPoly squarefree_part(const ZPoly &p) {
  if (p.zero()) throw std::domain_error("squarefree_part of zero");
  if (p.degree() == 0) return ZPoly{Int(1)};
  ZPoly pp = primitive_part(p);
  ZPoly g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  return primitive_part(divexact(pp, g));
}

// ----- the same machinery one level up: tau-polynomials over Z[a] -----

// content as a polynomial in a: gcd of the coefficients
inline ZPoly acontent(const TAPoly &p) {
  ZPoly g;
  for (const auto &c : p.coeffs()) {
    if (is_zero(c)) continue;
    g = g.zero() ? primitive_part(c) : poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  if (g.zero()) throw std::domain_error("acontent of zero");
  return g;
}

inline TAPoly aprimitive(const TAPoly &p) {
  if (p.zero()) return p;
  TAPoly t = strip_content(p);  // integer content first; the a-content gcd is primitive
  ZPoly g = acontent(t);
  std::vector<ZPoly> r;
  r.reserve(t.coeffs().size());
  for (const auto &c : t.coeffs()) r.push_back(c.zero() ? c : divexact(c, g));
  TAPoly out(std::move(r));
  // fix signs so the leading coefficient's leading integer is positive
  if (sgn(out.lead().lead()) < 0) out = out * ZPoly{Int(-1)};
  return out;
}

inline TAPoly pseudo_rem(TAPoly a, const TAPoly &b) {
  int db = b.degree();
  while (!a.zero() && a.degree() >= db) {
    int k = a.degree() - db;
    TAPoly t = (b * a.lead()).shifted_up(k);
    a = a * b.lead() - t;
  }
  return a;
}

// primitive gcd in (Z[a])[tau] via the primitive PRS
inline TAPoly poly_gcd(TAPoly p, TAPoly q) {
  if (p.zero() && q.zero()) throw std::domain_error("gcd(0,0)");
  if (p.zero()) return aprimitive(q);
  if (q.zero()) return aprimitive(p);
  ZPoly cg = poly_gcd(acontent(p), acontent(q));
  p = aprimitive(p);
  q = aprimitive(q);
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.zero()) {
    TAPoly r = aprimitive(pseudo_rem(p, q));
    p = std::move(q);
    q = std::move(r);
  }
  TAPoly g = p.degree() == 0 ? TAPoly{ZPoly{Int(1)}} : p;
  if (cg.degree() > 0) g = g * cg;  // shared content in a is part of the gcd
  return aprimitive(g);
}

inline TAPoly squarefree_part(const TAPoly &p) {
  if (p.zero()) throw std::domain_error("squarefree_part of zero");
  if (p.degree() == 0) return TAPoly{ZPoly{Int(1)}};
  TAPoly pp = aprimitive(p);
  TAPoly g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0 && g.lead().degree() == 0) return pp;
  return aprimitive(divexact(pp, g));
}

// ----- eigenvalue-difference transforms -----

// p(lambda) -> p(lambda + T): a polynomial in lambda whose coefficients
// live in the coefficient ring extended by T.
template <class C> Poly<Poly<C>> shift_compose(const Poly<C> &p) {
  if (p.zero()) throw std::domain_error("shift_compose of zero polynomial");
  using PC = Poly<C>;
  using PPC = Poly<PC>;
  // Horner in (lambda + T); outer variable lambda, inner T
  PPC lam_plus_t{PC{C{}, C{1}}, PC{C{1}}};  // T + lambda
  PPC r;
  for (size_t i = p.coeffs().size(); i-- > 0;)
    r = r * lam_plus_t + PPC::constant(PC::constant(p[i]));
  return r;
}

// determinant by fraction-free Bareiss elimination; mat is destroyed
template <class R> R bareiss_det(std::vector<std::vector<R>> &m) {
  const size_t n = m.size();
  if (n == 0) return R{1};
  int sign = 1;
  R prev{1};
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(m[piv][k])) ++piv;
    if (piv == n) return R{};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R{};
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

// resultant of p and q with respect to their (shared) main variable;
// coefficients live in R.  Determinant of the Sylvester matrix.
template <class R> R resultant(const Poly<R> &p, const Poly<R> &q) {
  if (p.zero() || q.zero()) throw std::domain_error("resultant of zero polynomial");
  const int dp = p.degree(), dq = q.degree();
  if (dp == 0 && dq == 0) throw std::domain_error("resultant of two constants");
  if (dp == 0) {
    R r{1};
    for (int i = 0; i < dq; ++i) r = r * p[0];
    return r;
  }
  if (dq == 0) {
    R r{1};
    for (int i = 0; i < dp; ++i) r = r * q[0];
    return r;
  }
  const size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<R>> m(n, std::vector<R>(n));
  for (int row = 0; row < dq; ++row)
    for (int i = 0; i <= dp; ++i) m[row][row + dp - i] = p[static_cast<size_t>(i)];
  for (int row = 0; row < dp; ++row)
    for (int i = 0; i <= dq; ++i) m[dq + row][row + dq - i] = q[static_cast<size_t>(i)];
  return bareiss_det(m);
}

// lift a polynomial to one with polynomial coefficients (constants)
template <class C> Poly<Poly<C>> lift(const Poly<C> &p) {
  std::vector<Poly<C>> r;
  r.reserve(p.coeffs().size());
  for (const auto &c : p.coeffs()) r.push_back(Poly<C>::constant(c));
  return Poly<Poly<C>>(std::move(r));
}

// exact division by T^k; throws when T^k does not divide p
template <class C> Poly<C> remove_power(const Poly<C> &p, int k) {
  if (p.zero()) throw std::domain_error("remove_power of zero polynomial");
  if (p.degree() < k) throw std::domain_error("T^m does not divide polynomial");
  for (int i = 0; i < k; ++i)
    if (!is_zero(p.coeff(static_cast<size_t>(i))))
      throw std::domain_error("T^m does not divide polynomial");
  std::vector<C> r(p.coeffs().begin() + k, p.coeffs().end());
  return Poly<C>(std::move(r));
}

// p(T) with only even powers -> p'(tau) with p'(T^2) = p(T)
template <class C> Poly<C> deflate_even(const Poly<C> &p) {
  if (p.zero()) return {};
  for (int i = 1; i <= p.degree(); i += 2)
    if (!is_zero(p.coeff(static_cast<size_t>(i))))
      throw std::domain_error("odd-degree monomial present");
  std::vector<C> r;
  r.reserve(static_cast<size_t>(p.degree() / 2 + 1));
  for (int i = 0; i <= p.degree(); i += 2) r.push_back(p.coeff(static_cast<size_t>(i)));
  return Poly<C>(std::move(r));
}

// substitute tau <- c(a) into rho(tau; a); exact expansion over Z[a]
inline ZPoly eval_bipoly_at(const TAPoly &rho, const ZPoly &c) {
  ZPoly r;
  for (size_t i = rho.coeffs().size(); i-- > 0;) r = r * c + rho[i];
  return r;
}

// ----- rational evaluation helpers -----

inline Rat eval_rat(const ZPoly &p, const Rat &x) {
  Rat r(0);
  for (size_t i = p.coeffs().size(); i-- > 0;) r = r * x + Rat(p[i]);
  return r;
}

inline int sign_at(const ZPoly &p, const Rat &x) { return sgn(eval_rat(p, x)); }

// substitute a <- value into a Z[a][main] polynomial and clear
// denominators: same roots in the main variable, integer coefficients
inline ZPoly substitute_a(const TAPoly &p, const Rat &a) {
  std::vector<Rat> vals;
  vals.reserve(p.coeffs().size());
  Int den(1);
  for (const auto &c : p.coeffs()) {
    Rat v = eval_rat(c, a);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    vals.push_back(std::move(v));
  }
  std::vector<Int> out;
  out.reserve(vals.size());
  for (auto &v : vals) {
    Rat s = v * Rat(den);
    out.push_back(s.get_num());
  }
  return primitive_part(ZPoly(std::move(out)));
}

// divide out (den*x - num) for a known rational root num/den; exact
inline ZPoly deflate_rational_root(const ZPoly &p, const Rat &root) {
  ZPoly factor{-root.get_num(), root.get_den()};
  return divexact(primitive_part(p), factor);
}

// ----- plain-text serialization -----
// "tau: 729 -4374 5265 -2358 450 -36 1"

std::string poly_to_text(const ZPoly &p, const std::string &var);
std::pair<std::string, ZPoly> poly_from_text(const std::string &line);

// bivariate: main-variable coefficients bracketed, e.g.
// "tau/a: [0 -4] [1]" for (tau)(a^0)... == tau - 4a
std::string bipoly_to_text(const TAPoly &p, const std::string &main_var,
                           const std::string &sub_var);
TAPoly bipoly_from_text(const std::string &line);

}  // namespace spread

#endif
