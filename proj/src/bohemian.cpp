#include "spread/bohemian.hpp"

#include <sstream>

namespace spread {

std::vector<std::vector<Int>> scaled_int_matrix(const SymBohemian &s) {
  if (!s.a_value) throw std::domain_error("symbolic matrix has no integer form");
  Int num = s.a_value->get_num();
  Int den = s.a_value->get_den();
  std::vector<std::vector<Int>> m(static_cast<size_t>(s.m),
                                  std::vector<Int>(static_cast<size_t>(s.m)));
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s.entry_is_one(i, j) ? den : num;
  return m;
}

ZPoly charpoly_int(const std::vector<std::vector<Int>> &m) {
  return berkowitz_charpoly<Int>(m);
}

Poly<ZPoly> charpoly_sym(const SymBohemian &s) {
  const ZPoly one{Int(1)};
  const ZPoly a{Int(0), Int(1)};
  std::vector<std::vector<ZPoly>> m(static_cast<size_t>(s.m),
                                    std::vector<ZPoly>(static_cast<size_t>(s.m)));
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s.entry_is_one(i, j) ? one : a;
  return berkowitz_charpoly<ZPoly>(m);
}

namespace {
inline bool is_zero_rat(const Rat &x) { return sgn(x) == 0; }
}  // namespace

std::vector<Rat> charpoly_rat(const SymBohemian &s) {
  if (!s.a_value) throw std::domain_error("charpoly_rat needs a rational a");
  // scaled integer charpoly of den*A, then unscale lambda -> den*lambda
  Int den = s.a_value->get_den();
  ZPoly p = charpoly_int(scaled_int_matrix(s));
  std::vector<Rat> out(p.coeffs().size());
  Rat scale(1);
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    // coefficient of lambda^i divided by den^(m-i)
    Rat d(1);
    for (int t = 0; t < s.m - static_cast<int>(i); ++t) d *= Rat(den);
    out[i] = Rat(p.coeff(i)) / d;
  }
  return out;
}

int rank_exact(const SymBohemian &s) {
  auto m = scaled_int_matrix(s);
  const size_t n = m.size();
  size_t rank = 0;
  Int prev(1);
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = rank + 1; i < n; ++i) {
      for (size_t j = col + 1; j < n; ++j)
        m[i][j] = divexact(m[i][j] * m[rank][col] - m[i][col] * m[rank][j], prev);
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

Rat mirsky_bound_sq(const SymBohemian &s) {
  if (!s.a_value) throw std::domain_error("mirsky_bound_sq needs a rational a");
  const Rat &a = *s.a_value;
  Rat frob(0), tr(0);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j) {
      Rat e = s.entry_is_one(i, j) ? Rat(1) : a;
      frob += e * e;
      if (i == j) tr += e;
    }
  return 2 * frob - Rat(2, static_cast<unsigned long>(s.m)) * tr * tr;
}

std::vector<int> optimal_k(int m, const Rat &a) {
  Rat r = Rat(m) / (a + 3);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  Rat frac = r - Rat(fl);
  std::vector<long> ks;
  if (frac < Rat(1, 2)) ks = {fl.get_si()};
  else if (frac > Rat(1, 2)) ks = {fl.get_si() + 1};
  else ks = {fl.get_si(), fl.get_si() + 1};
  std::vector<int> out;
  for (long k : ks) {
    if (k < 1) k = 1;
    if (k > m - 1) k = m - 1;
    if (out.empty() || out.back() != static_cast<int>(k)) out.push_back(static_cast<int>(k));
  }
  return out;
}

Rat conjectured_spread_sq(int m, int k, const Rat &a) {
  return (a * a + 2 * a - 3) * (k * k) + Rat(2 * m * k) * (1 - a) + Rat(m * m);
}

ZPoly conjectured_spread_sq_poly(int m, int k) {
  // (a^2+2a-3)k^2 + 2m(1-a)k + m^2, ascending in a
  return ZPoly{Int(-3 * k * k + 2 * m * k + m * m), Int(2 * k * k - 2 * m * k),
               Int(k * k)};
}

std::vector<Rat> breakpoints(int m) {
  if (m < 2) throw std::domain_error("breakpoints: m >= 2 required");
  int lo = (m - 2 + 3) / 4;  // ceil((m-2)/4)
  int hi = (m - 1) / 2;
  std::vector<Rat> out;
  for (int l = lo; l <= hi; ++l) {
    Rat alpha = Rat(2 * m, static_cast<unsigned long>(2 * l + 1)) - 3;
    if (alpha > -1 && alpha < 1) out.push_back(alpha);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat zhan_bound_sq(int m, const Rat &a) {
  if (sgn(a) < 0) throw std::domain_error("zhan_bound_sq: a >= 0 required");
  Rat a2 = a * a;
  if (m % 2 == 0) return 2 * a2 * (m * m);
  return a2 * (2 * m * m - 1);
}

Rat breen_bound_sq(int m) {
  Rat b(4 * m * m, 3);
  b.canonicalize();
  return b;
}

SymBohemian build_fallat_xing(int m, int k, std::optional<Rat> a) {
  if (k < 1 || k >= m) throw std::domain_error("build_fallat_xing: 1 <= k < m");
  SymBohemian s;
  s.m = m;
  s.a_value = std::move(a);
  for (int i = 0; i < m; ++i)
    if (i >= k) s.diag |= std::uint16_t(1) << i;
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i)
      if (j >= k) s.upper |= std::uint64_t(1) << pair_index(i, j);
  return s;
}

bool is_mirsky_matrix_case(int m, const Rat &a) {
  for (int k : optimal_k(m, a))
    if ((1 - a) * k == m) return true;
  return false;
}

std::string matrix_to_text(const SymBohemian &s) {
  std::ostringstream os;
  os << s.m << " a=";
  if (s.a_value) {
    os << s.a_value->get_num().get_str();
    if (s.a_value->get_den() != 1) os << '/' << s.a_value->get_den().get_str();
  } else {
    os << "sym";
  }
  os << '\n';
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.m; ++j) {
      if (j) os << ' ';
      os << (s.entry_is_one(i, j) ? '1' : 'a');
    }
    os << '\n';
  }
  return os.str();
}

SymBohemian matrix_from_text(const std::string &text) {
  std::istringstream is(text);
  SymBohemian s;
  std::string atok;
  if (!(is >> s.m >> atok) || s.m < 1 || s.m > 10)
    throw std::invalid_argument("matrix text: bad header");
  if (atok.rfind("a=", 0) != 0) throw std::invalid_argument("matrix text: bad header");
  std::string aval = atok.substr(2);
  if (aval != "sym") {
    try {
      Rat r(aval);
      r.canonicalize();
      s.a_value = r;
    } catch (...) {
      throw std::invalid_argument("matrix text: bad a value");
    }
  }
  std::vector<std::vector<char>> e(static_cast<size_t>(s.m),
                                   std::vector<char>(static_cast<size_t>(s.m)));
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j) {
      std::string t;
      if (!(is >> t) || (t != "1" && t != "a"))
        throw std::invalid_argument("matrix text: bad entry");
      e[static_cast<size_t>(i)][static_cast<size_t>(j)] = t[0];
    }
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      if (e[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          e[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw std::invalid_argument("matrix text: not symmetric");
  for (int i = 0; i < s.m; ++i)
    if (e[static_cast<size_t>(i)][static_cast<size_t>(i)] == '1')
      s.diag |= std::uint16_t(1) << i;
  for (int j = 1; j < s.m; ++j)
    for (int i = 0; i < j; ++i)
      if (e[static_cast<size_t>(i)][static_cast<size_t>(j)] == '1')
        s.upper |= std::uint64_t(1) << pair_index(i, j);
  return s;
}

}  // namespace spread
