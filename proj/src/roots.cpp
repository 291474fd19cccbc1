#include "spread/roots.hpp"

#include <algorithm>

namespace spread {

namespace {

// q(x) -> q(x + 1), synthetic Horner
ZPoly taylor_shift_1(ZPoly p) {
  if (p.zero()) return p;
  std::vector<Int> c(p.coeffs());
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  return ZPoly(std::move(c));
}

ZPoly reverse_coeffs(const ZPoly &p) {
  std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
  return ZPoly(std::move(c));
}

int sign_variations(const ZPoly &p) {
  int v = 0, last = 0;
  for (const auto &c : p.coeffs()) {
    int s = sgn(c);
    if (s != 0) {
      if (last != 0 && s != last) ++v;
      last = s;
    }
  }
  return v;
}

// Descartes bound on the number of roots of q in the open interval (0,1);
// exact when the returned value is 0 or 1.
int descartes01(ZPoly q) {
  // roots at 0 and 1 are interval endpoints; drop them
  size_t low = 0;
  while (low < q.coeffs().size() && is_zero(q[low])) ++low;
  if (low == q.coeffs().size()) return 0;
  if (low > 0) q = remove_power(q, static_cast<int>(low));
  ZPoly r = taylor_shift_1(reverse_coeffs(q));
  if (!r.zero() && is_zero(r[0])) r = remove_power(r, 1);  // root at x=1
  return sign_variations(r);
}

// q on (0,1) -> left half: 2^n q(x/2)
ZPoly half_left(const ZPoly &q) {
  std::vector<Int> c(q.coeffs());
  const int n = q.degree();
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] <<= static_cast<unsigned>(n - i);
  return primitive_part(ZPoly(std::move(c)));
}

struct Isolator {
  const ZPoly *sf;
  Rat width;
  std::vector<RatInterval> out;

  void refine_and_emit(ZPoly q, Rat lo, Rat hi) {
    // exactly one simple root of sf in (lo, hi); bisect to width
    while (hi - lo > width) {
      Rat mid = (lo + hi) / 2;
      ZPoly ql = half_left(q);
      ZPoly qr = taylor_shift_1(ql);
      if (is_zero(qr.coeff(0))) {
        out.push_back({mid, mid});
        return;
      }
      if (descartes01(ql) > 0) {
        q = std::move(ql);
        hi = mid;
      } else {
        q = std::move(qr);
        lo = mid;
      }
    }
    out.push_back({lo, hi});
  }

  void rec(ZPoly q, const Rat &lo, const Rat &hi) {
    int v = descartes01(q);
    if (v == 0) return;
    if (v == 1) {
      refine_and_emit(std::move(q), lo, hi);
      return;
    }
    Rat mid = (lo + hi) / 2;
    ZPoly ql = half_left(q);
    ZPoly qr = taylor_shift_1(ql);
    if (is_zero(qr.coeff(0))) out.push_back({mid, mid});
    rec(std::move(ql), lo, mid);
    rec(std::move(qr), mid, hi);
  }
};

// Sturm chain over Q
std::vector<std::vector<Rat>> sturm_chain(const ZPoly &p) {
  auto to_rat = [](const ZPoly &z) {
    std::vector<Rat> r;
    r.reserve(z.coeffs().size());
    for (const auto &c : z.coeffs()) r.emplace_back(c);
    return r;
  };
  std::vector<std::vector<Rat>> chain;
  chain.push_back(to_rat(p));
  chain.push_back(to_rat(p.derivative()));
  while (!chain.back().empty()) {
    // negated remainder of the previous two
    std::vector<Rat> a = chain[chain.size() - 2];
    const std::vector<Rat> &b = chain.back();
    while (a.size() >= b.size()) {
      Rat f = a.back() / b.back();
      size_t k = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + k] -= f * b[i];
      while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
      if (a.empty()) break;
    }
    for (auto &c : a) c = -c;
    chain.push_back(std::move(a));
  }
  chain.pop_back();
  return chain;
}

int chain_variations(const std::vector<std::vector<Rat>> &chain, const Rat &x) {
  int v = 0, last = 0;
  for (const auto &f : chain) {
    Rat r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    int s = sgn(r);
    if (s != 0) {
      if (last != 0 && s != last) ++v;
      last = s;
    }
  }
  return v;
}

}  // namespace

Rat root_bound_pow2(const ZPoly &p) {
  if (p.zero() || p.degree() == 0) return Rat(1);
  Int maxc(0);
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeff(static_cast<size_t>(i)));
    if (a > maxc) maxc = a;
  }
  Int lead = abs(p.lead());
  Int b(1);
  while (b * lead <= lead + maxc) b <<= 1;
  return Rat(b);
}

std::vector<RatInterval> isolate_real_roots(const ZPoly &p, const Rat &width) {
  if (p.zero()) throw std::domain_error("isolate_real_roots of zero polynomial");
  if (sgn(width) <= 0) throw std::domain_error("width must be positive");
  ZPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return {};
  Rat b = root_bound_pow2(sf);
  Int bi = b.get_num();
  // map (-B, B) onto (0, 1): q(x) = sf(-B + 2Bx)
  ZPoly q;
  {
    ZPoly arg{-bi, 2 * bi};  // -B + 2Bx
    ZPoly r;
    for (size_t i = sf.coeffs().size(); i-- > 0;)
      r = r * arg + ZPoly{sf[i]};
    q = primitive_part(r);
  }
  Isolator iso{&sf, width, {}};
  iso.rec(std::move(q), -b, b);
  std::sort(iso.out.begin(), iso.out.end(),
            [](const RatInterval &x, const RatInterval &y) { return x.lo < y.lo; });
  return iso.out;
}

int sturm_count(const ZPoly &p, const Rat &lo, const Rat &hi) {
  if (p.zero()) throw std::domain_error("sturm_count of zero polynomial");
  if (!(lo < hi)) throw std::domain_error("empty interval");
  // the square-free chain counts distinct roots and tolerates a root at
  // hi (the half-open interval includes it); a root at lo does not work
  ZPoly sf = squarefree_part(p);
  if (sign_at(sf, lo) == 0)
    throw std::domain_error("lower endpoint is a root; factor it out first");
  auto chain = sturm_chain(sf);
  return chain_variations(chain, lo) - chain_variations(chain, hi);
}

int sturm_count_open(const ZPoly &p, const Rat &lo, const Rat &hi) {
  int n = sturm_count(p, lo, hi);
  return sign_at(p, hi) == 0 ? n - 1 : n;
}

int count_roots_above(const ZPoly &p, const Rat &x) {
  if (sign_at(p, x) == 0)
    throw std::domain_error("endpoint is a root; factor it out first");
  Rat b = root_bound_pow2(squarefree_part(p));
  if (!(x < b)) return 0;
  return sturm_count(p, x, b);
}

}  // namespace spread
