#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spread/bohemian.hpp"
#include "spread/companion.hpp"
#include "spread/sampler.hpp"
#include "spread/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace spread;

namespace {

std::vector<std::vector<Rat>> random_rat_symmetric(std::mt19937 &rng, int m) {
  std::vector<std::vector<Rat>> s(static_cast<size_t>(m),
                                  std::vector<Rat>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s[static_cast<size_t>(j)][static_cast<size_t>(i)] =
              Rat(static_cast<int>(rng() % 7) - 3);
  return s;
}

Poly<Rat> to_rat_poly(const ZPoly &p) {
  std::vector<Rat> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p[i]);
  return Poly<Rat>(std::move(c));
}

std::vector<std::vector<Int>> to_int_matrix(const std::vector<std::vector<Rat>> &s) {
  std::vector<std::vector<Int>> a(s.size(), std::vector<Int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) a[i][j] = s[i][j].get_num();
  return a;
}

}  // namespace

TEST_CASE("companion of the 2x2 exchange matrix") {
  std::vector<std::vector<Rat>> s{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  SpreadCompanion c = build_companion(s);
  REQUIRE(c.m == 2);
  REQUIRE(c.sc.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(c.sc[i][j] == c.sc[j][i]);
  // eigenvalues {-1,1} -> differences {0,0,2,-2} -> charpoly T^2 (T^2 - 4)
  Poly<Rat> got = companion_charpoly(c);
  Poly<Rat> t = Poly<Rat>::var();
  CHECK(got == t * t * (t * t - Poly<Rat>(4)));
}

TEST_CASE("companion of a scalar matrix is zero") {
  std::vector<std::vector<Rat>> s{{Rat(5), Rat(0)}, {Rat(0), Rat(5)}};
  SpreadCompanion c = build_companion(s);
  for (const auto &row : c.sc)
    for (const Rat &v : row) CHECK(v == 0);
}

TEST_CASE("build_companion rejects non-symmetric input") {
  std::vector<std::vector<Rat>> s{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_AS(build_companion(s), std::invalid_argument);
}

TEST_CASE("companion charpoly equals the spread resultant") {
  std::mt19937 rng(11);
  for (int t = 0; t < 12; ++t) {
    int m = 2 + static_cast<int>(rng() % 2);
    auto s = random_rat_symmetric(rng, m);
    ZPoly p = charpoly_int(to_int_matrix(s));
    ZPoly expect = spread_resultant_T(p).shifted_up(static_cast<size_t>(m));
    CHECK(companion_charpoly(build_companion(s)) == to_rat_poly(expect));
  }
}

TEST_CASE("companion eigenvalues are the pairwise eigenvalue differences") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    int m = 2 + static_cast<int>(rng() % 3);
    auto s = random_rat_symmetric(rng, m);
    SpreadCompanion c = build_companion(s);
    auto cev = symmetric_eigenvalues(companion_double(c));

    std::vector<std::vector<double>> sd(static_cast<size_t>(m),
                                        std::vector<double>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        sd[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            s[static_cast<size_t>(i)][static_cast<size_t>(j)].get_d();
    auto sev = symmetric_eigenvalues(sd);
    std::vector<double> diffs;
    for (double x : sev)
      for (double y : sev) diffs.push_back(x - y);
    std::sort(diffs.begin(), diffs.end());
    REQUIRE(cev.size() == diffs.size());
    for (size_t i = 0; i < diffs.size(); ++i)
      CHECK(std::abs(cev[i] - diffs[i]) < 1e-9);
  }
}

TEST_CASE("Rayleigh quotient lower bounds on closed-form cases") {
  std::vector<std::vector<Rat>> ex{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  // x = y gives the zero vector of differences
  CHECK(rayleigh_lower_bound(ex, {Rat(1), Rat(2)}, {Rat(1), Rat(2)}) == 0);
  // the extreme eigenvectors (1,1) and (1,-1) attain the spread exactly
  CHECK(rayleigh_lower_bound(ex, {Rat(1), Rat(1)}, {Rat(1), Rat(-1)}) == 2);
  CHECK_THROWS_AS(rayleigh_lower_bound(ex, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("Rayleigh quotients never exceed the spread") {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    int m = 2 + static_cast<int>(rng() % 3);
    auto s = random_rat_symmetric(rng, m);
    std::vector<Rat> x(static_cast<size_t>(m)), y(static_cast<size_t>(m));
    bool xz = true, yz = true;
    for (int i = 0; i < m; ++i) {
      x[static_cast<size_t>(i)] = Rat(static_cast<int>(rng() % 5) - 2);
      y[static_cast<size_t>(i)] = Rat(static_cast<int>(rng() % 5) - 2);
      if (x[static_cast<size_t>(i)] != 0) xz = false;
      if (y[static_cast<size_t>(i)] != 0) yz = false;
    }
    if (xz || yz) continue;
    Rat lower = rayleigh_lower_bound(s, x, y);

    std::vector<std::vector<double>> sd(static_cast<size_t>(m),
                                        std::vector<double>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        sd[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            s[static_cast<size_t>(i)][static_cast<size_t>(j)].get_d();
    auto ev = symmetric_eigenvalues(sd);
    CHECK(lower.get_d() <= ev.back() - ev.front() + 1e-9);
    // the double overload agrees with the exact quotient
    std::vector<double> xd(static_cast<size_t>(m)), yd(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      xd[static_cast<size_t>(i)] = x[static_cast<size_t>(i)].get_d();
      yd[static_cast<size_t>(i)] = y[static_cast<size_t>(i)].get_d();
    }
    CHECK(std::abs(rayleigh_lower_bound(sd, xd, yd) - lower.get_d()) < 1e-9);
  }
}

TEST_CASE("extreme eigenvectors of the maximal 4x4 matrix attain sqrt(21)") {
  SymBohemian fx = build_fallat_xing(4, 1, Rat(0));
  auto mi = scaled_int_matrix(fx);
  std::vector<std::vector<double>> sd(4, std::vector<double>(4));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) sd[i][j] = mi[i][j].get_d();
  EigenSystem es = symmetric_eigensystem(sd);
  double q = rayleigh_lower_bound(sd, es.vectors.back(), es.vectors.front());
  CHECK(std::abs(q - std::sqrt(21.0)) < 1e-6);
}
