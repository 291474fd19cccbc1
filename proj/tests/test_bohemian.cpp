#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spread/bohemian.hpp"
#include "spread/roots.hpp"

#include <random>

using namespace spread;

namespace {

SymBohemian from_text(const std::string &t) { return matrix_from_text(t); }

}  // namespace

TEST_CASE("Berkowitz on small symbolic matrices") {
  // [[a,1],[1,1]]: lambda^2 - (a+1) lambda + (a-1)
  SymBohemian s = from_text("2 a=sym\na 1\n1 1\n");
  Poly<ZPoly> p = charpoly_sym(s);
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(2) == ZPoly{Int(1)});
  CHECK(p.coeff(1) == ZPoly{Int(-1), Int(-1)});
  CHECK(p.coeff(0) == ZPoly{Int(-1), Int(1)});
}

TEST_CASE("charpoly of the all-ones matrix") {
  // J_4: lambda^3 (lambda - 4)
  SymBohemian s = from_text("4 a=0\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n");
  ZPoly p = charpoly_int(scaled_int_matrix(s));
  ZPoly x = ZPoly::var();
  CHECK(p == x * x * x * (x - 4));
}

TEST_CASE("charpoly at a=1 collapses to all-ones") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    SymBohemian s;
    s.m = 4;
    s.diag = static_cast<std::uint16_t>(rng() % 15);
    s.upper = rng() % 64;
    s.a_value = Rat(1);
    SymBohemian ones = from_text("4 a=0\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n");
    CHECK(charpoly_int(scaled_int_matrix(s)) ==
          charpoly_int(scaled_int_matrix(ones)));
    // and the symbolic charpoly evaluated at a=1 agrees
    SymBohemian sym = s;
    sym.a_value.reset();
    Poly<ZPoly> ps = charpoly_sym(sym);
    ZPoly collapsed;
    for (size_t i = ps.coeffs().size(); i-- > 0;)
      collapsed = collapsed.shifted_up(1) +
                  ZPoly{Int(eval_rat(ps.coeff(i), Rat(1)).get_num())};
    CHECK(collapsed == charpoly_int(scaled_int_matrix(s)));
  }
}

TEST_CASE("rational a via scaling") {
  SymBohemian s = from_text("2 a=1/2\na 1\n1 1\n");
  auto c = charpoly_rat(s);
  // lambda^2 - 3/2 lambda - 1/2
  REQUIRE(c.size() == 3);
  CHECK(c[2] == 1);
  CHECK(c[1] == Rat(-3, 2));
  CHECK(c[0] == Rat(-1, 2));
}

TEST_CASE("exact rank") {
  CHECK(rank_exact(from_text("4 a=0\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n")) == 1);
  CHECK(rank_exact(from_text("4 a=0\na 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n")) == 2);
  CHECK(rank_exact(from_text("2 a=0\n1 a\na 1\n")) == 2);
  SymBohemian fx = build_fallat_xing(6, 2, Rat(0));
  CHECK(rank_exact(fx) == 2);
}

TEST_CASE("Mirsky bound") {
  // [[1,1],[1,1]]: 2*4 - (2/2)*4 = 4; spread is 2, bound attained
  CHECK(mirsky_bound_sq(from_text("2 a=0\n1 1\n1 1\n")) == 4);
  CHECK(mirsky_bound_sq(from_text("2 a=0\n1 a\na 1\n")) == 0);
}

TEST_CASE("optimal block size") {
  CHECK(optimal_k(4, Rat(0)) == std::vector<int>{1});
  CHECK(optimal_k(6, Rat(0)) == std::vector<int>{2});
  CHECK(optimal_k(8, Rat(0)) == std::vector<int>{3});
  // half-integer tie: 7/(a+3) = 7/2 at a = -1
  CHECK(optimal_k(7, Rat(-1)) == std::vector<int>{3, 4});
  // clamped into [1, m-1]
  CHECK(optimal_k(2, Rat(1)) == std::vector<int>{1});
}

TEST_CASE("conjectured maximum at a=0") {
  // (m+k)^2 - 4k^2 with k = round(m/3)
  const int want[] = {5, 12, 21, 33, 48, 65, 85};
  for (int m = 2; m <= 8; ++m) {
    int k = optimal_k(m, Rat(0))[0];
    Rat direct((m + k) * (m + k) - 4 * k * k);
    CHECK(conjectured_spread_sq(m, k, Rat(0)) == direct);
    CHECK(direct == want[m - 2]);
    CHECK(eval_rat(conjectured_spread_sq_poly(m, k), Rat(0)) == direct);
  }
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints(2).empty());
  CHECK(breakpoints(3).empty());
  CHECK(breakpoints(4) == std::vector<Rat>{Rat(-1, 3)});
  CHECK(breakpoints(5) == std::vector<Rat>{Rat(1, 3)});
  CHECK(breakpoints(6) == std::vector<Rat>{Rat(-3, 5)});
  CHECK(breakpoints(7) == std::vector<Rat>{Rat(-1, 5)});
}

TEST_CASE("conjectured curves agree at the m=4 breakpoint") {
  Rat at = Rat(-1, 3);
  Rat c1 = conjectured_spread_sq(4, 1, at);
  Rat c2 = conjectured_spread_sq(4, 2, at);
  CHECK(c1 == Rat(208, 9));
  CHECK(c2 == Rat(208, 9));
}

TEST_CASE("Zhan and Breen bounds") {
  CHECK(zhan_bound_sq(13, Rat(1)) == 337);  // 2*169 - 1
  CHECK(zhan_bound_sq(4, Rat(1)) == 32);    // 2*16
  CHECK(breen_bound_sq(6) == 48);
  CHECK(breen_bound_sq(3) == 12);
}

TEST_CASE("Fallat-Xing matrix structure and spread") {
  for (int m = 2; m <= 8; ++m)
    for (int k = 1; k < m; ++k) {
      SymBohemian fx = build_fallat_xing(m, k, Rat(0));
      CHECK(rank_exact(fx) <= 2);
      // charpoly = lambda^(m-2) * (lambda^2 - t lambda + d); the quadratic's
      // root difference squared t^2 - 4d is the exact squared spread
      ZPoly p = charpoly_int(scaled_int_matrix(fx));
      ZPoly quad = p;
      for (int i = 0; i < m - 2; ++i) quad = divexact(quad, ZPoly::var());
      REQUIRE(quad.degree() == 2);
      Int t = -quad.coeff(1), d = quad.coeff(0);
      CHECK(Rat(t * t - 4 * d) == conjectured_spread_sq(m, k, Rat(0)));
    }
}

TEST_CASE("matrix text parsing") {
  SymBohemian s = from_text("3 a=-2/3\n1 a 1\na a 1\n1 1 a\n");
  CHECK(s.m == 3);
  CHECK(*s.a_value == Rat(-2, 3));
  CHECK(s.entry_is_one(0, 0));
  CHECK(!s.entry_is_one(0, 1));
  CHECK(!s.entry_is_one(1, 0));
  CHECK(s.entry_is_one(2, 1));
  CHECK(matrix_from_text(matrix_to_text(s)).diag == s.diag);
  CHECK(matrix_from_text(matrix_to_text(s)).upper == s.upper);
  CHECK_THROWS_AS(from_text("2 a=0\n1 a\n1 1\n"), std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(from_text("2 a=0\n1 2\n2 1\n"), std::invalid_argument);  // bad entry
  CHECK_THROWS_AS(from_text("2 b=0\n1 1\n1 1\n"), std::invalid_argument);  // bad header
}

TEST_CASE("Mirsky matrix case") {
  CHECK(is_mirsky_matrix_case(4, Rat(-1)));
  CHECK(is_mirsky_matrix_case(6, Rat(-1)));
  CHECK(!is_mirsky_matrix_case(5, Rat(-1)));
  CHECK(!is_mirsky_matrix_case(4, Rat(0)));
}
