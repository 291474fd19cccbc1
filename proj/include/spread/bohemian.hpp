#ifndef SPREAD_BOHEMIAN_HPP
#define SPREAD_BOHEMIAN_HPP

// Symmetric {a,1} matrices, bit-packed, with exact characteristic
// polynomials (Berkowitz, division-free), ranks, and the closed-form
// spread bounds and conjecture formulas.

#include "spread/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spread {

// colex index of the strict-upper-triangle pair (i,j), i < j
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Symmetric m x m matrix with entries in {a, 1}.  A set bit means the
// entry is 1; a clear bit means the entry is a.  Upper-triangle bits are
// in colex order.  a_value absent means symbolic a.
struct SymBohemian {
  int m = 0;
  std::uint16_t diag = 0;
  std::uint64_t upper = 0;
  std::optional<Rat> a_value;

  bool entry_is_one(int i, int j) const {
    if (i == j) return (diag >> i) & 1;
    if (i > j) std::swap(i, j);
    return (upper >> pair_index(i, j)) & 1;
  }
};

// matrix with entries scaled to integers: entry 1 -> den, entry a -> num
// (requires rational a_value); eigenvalues scale by den
std::vector<std::vector<Int>> scaled_int_matrix(const SymBohemian &s);

// Berkowitz characteristic polynomial det(lambda*I - M), monic, over any
// exact coefficient ring
template <class C>
Poly<C> berkowitz_charpoly(const std::vector<std::vector<C>> &a) {
  const size_t n = a.size();
  std::vector<C> prev{C{1}};  // descending coefficients
  for (size_t i = 1; i <= n; ++i) {
    std::vector<C> c(i + 1);
    c[0] = C{1};
    c[1] = -a[i - 1][i - 1];
    if (i >= 2) {
      std::vector<C> v(i - 1);
      for (size_t t = 0; t + 1 < i; ++t) v[t] = a[t][i - 1];
      for (size_t j = 2; j <= i; ++j) {
        C dot{};
        for (size_t t = 0; t + 1 < i; ++t) dot = dot + a[i - 1][t] * v[t];
        c[j] = -dot;
        if (j < i) {
          std::vector<C> nv(i - 1);
          for (size_t r = 0; r + 1 < i; ++r) {
            C s{};
            for (size_t t = 0; t + 1 < i; ++t) s = s + a[r][t] * v[t];
            nv[r] = s;
          }
          v = std::move(nv);
        }
      }
    }
    std::vector<C> next(i + 1);
    for (size_t s = 0; s <= i; ++s) {
      C acc{};
      for (size_t t = 0; t < prev.size(); ++t) {
        if (s < t || s - t > i) continue;
        acc = acc + c[s - t] * prev[t];
      }
      next[s] = std::move(acc);
    }
    prev = std::move(next);
  }
  std::vector<C> ascending(prev.rbegin(), prev.rend());
  return Poly<C>(std::move(ascending));
}

// charpoly over Z of an integer matrix
ZPoly charpoly_int(const std::vector<std::vector<Int>> &m);

// charpoly in lambda with coefficients in Z[a] (symbolic a)
Poly<ZPoly> charpoly_sym(const SymBohemian &s);

// charpoly over Q with a_value substituted
std::vector<Rat> charpoly_rat(const SymBohemian &s);

// rank over the rationals (fraction-free elimination); needs a_value
int rank_exact(const SymBohemian &s);

// 2*||A||_F^2 - (2/m)*Tr(A)^2, the squared Mirsky bound; needs a_value
Rat mirsky_bound_sq(const SymBohemian &s);

// nearest integer(s) to m/(a+3), clamped to [1, m-1]; two entries at an
// exact half-integer
std::vector<int> optimal_k(int m, const Rat &a);

// (a^2+2a-3)k^2 + 2m(1-a)k + m^2
Rat conjectured_spread_sq(int m, int k, const Rat &a);
ZPoly conjectured_spread_sq_poly(int m, int k);  // polynomial in a

// values 2m/(2l+1)-3 inside (-1,1), sorted ascending; the subinterval
// boundaries where the optimal block size changes
std::vector<Rat> breakpoints(int m);

// squared Zhan bound for S_m([-a,a]): 2a^2m^2 (m even), a^2(2m^2-1) (m odd)
Rat zhan_bound_sq(int m, const Rat &a);

// squared Breen bound with max entry 1: 4m^2/3
Rat breen_bound_sq(int m);

// leading k x k block all-a, the rest all-ones
SymBohemian build_fallat_xing(int m, int k, std::optional<Rat> a = std::nullopt);

// true iff m == (1-a) * round(m/(a+3)), i.e. a = -1 and m even
bool is_mirsky_matrix_case(int m, const Rat &a);

// text format: first line "m a=<p/q|sym>", then m rows of {1, a} symbols
std::string matrix_to_text(const SymBohemian &s);
SymBohemian matrix_from_text(const std::string &text);

}  // namespace spread

#endif
