#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spread/bohemian.hpp"
#include "spread/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace spread;

namespace {

std::vector<std::vector<double>> to_double(const SymBohemian &s) {
  std::vector<std::vector<double>> a(static_cast<size_t>(s.m),
                                     std::vector<double>(static_cast<size_t>(s.m)));
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j) {
      Rat v = s.entry_is_one(i, j) ? Rat(1) : *s.a_value;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_d();
    }
  return a;
}

std::vector<std::vector<double>> random_symmetric(std::mt19937 &rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> a(static_cast<size_t>(m),
                                     std::vector<double>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          a[static_cast<size_t>(j)][static_cast<size_t>(i)] = u(rng);
  return a;
}

}  // namespace

TEST_CASE("splitmix64 matches the reference output sequence") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafull);
  CHECK(g.next() == 0x6e789e6aa1b965f4ull);
  CHECK(g.next() == 0x06c45d188009454full);
  SplitMix64 h(42);
  double v = h.uniform_pm1();
  CHECK(v >= -1.0);
  CHECK(v < 1.0);
}

TEST_CASE("sample substreams depend only on seed and index") {
  SplitMix64 a = sample_rng(7, 100);
  SplitMix64 b = sample_rng(7, 100);
  for (int t = 0; t < 16; ++t) CHECK(a.next() == b.next());
  SplitMix64 c = sample_rng(7, 101);
  SplitMix64 d = sample_rng(8, 100);
  SplitMix64 e = sample_rng(7, 100);
  CHECK(c.next() != e.next());
  e = sample_rng(7, 100);
  CHECK(d.next() != e.next());
}

TEST_CASE("sampled matrices are symmetric with entries in [-1,1)") {
  SplitMix64 rng = sample_rng(1, 0);
  auto a = sample_matrix(13, rng);
  REQUIRE(a.size() == 13);
  for (size_t i = 0; i < 13; ++i)
    for (size_t j = 0; j < 13; ++j) {
      CHECK(a[i][j] == a[j][i]);
      CHECK(a[i][j] >= -1.0);
      CHECK(a[i][j] < 1.0);
    }
  // regenerating from the same substream reproduces the matrix exactly
  SplitMix64 rng2 = sample_rng(1, 0);
  CHECK(sample_matrix(13, rng2) == a);
}

TEST_CASE("Jacobi eigenvalues on closed-form cases") {
  auto ev = symmetric_eigenvalues({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));

  auto j3 = symmetric_eigenvalues(
      {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}});
  CHECK(std::abs(j3[0]) < 1e-12);
  CHECK(std::abs(j3[1]) < 1e-12);
  CHECK(j3[2] == doctest::Approx(3.0).epsilon(1e-12));

  // a diagonal matrix is already converged
  auto d = symmetric_eigenvalues({{5.0, 0.0}, {0.0, -2.0}});
  CHECK(d == std::vector<double>{-2.0, 5.0});

  // the maximal 4x4 {0,1} matrix has spread sqrt(21)
  SymBohemian fx = build_fallat_xing(4, 1, Rat(0));
  auto fev = symmetric_eigenvalues(to_double(fx));
  double spread = fev.back() - fev.front();
  CHECK(spread * spread == doctest::Approx(21.0).epsilon(1e-9));
}

TEST_CASE("Jacobi preserves trace and Frobenius norm") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    int m = 2 + static_cast<int>(rng() % 12);
    auto a = random_symmetric(rng, m);
    double tr = 0.0, frob = 0.0;
    for (int i = 0; i < m; ++i) {
      tr += a[static_cast<size_t>(i)][static_cast<size_t>(i)];
      for (int j = 0; j < m; ++j)
        frob += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    auto ev = symmetric_eigenvalues(a);
    double trs = 0.0, sq = 0.0;
    for (double v : ev) {
      trs += v;
      sq += v * v;
    }
    CHECK(std::abs(trs - tr) <= 1e-10 * m);
    CHECK(std::abs(sq - frob) <= 1e-9 * m * m);
  }
}

TEST_CASE("eigensystem returns orthonormal eigenvectors with small residual") {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    int m = 2 + static_cast<int>(rng() % 8);
    auto a = random_symmetric(rng, m);
    EigenSystem es = symmetric_eigensystem(a);
    REQUIRE(es.values.size() == static_cast<size_t>(m));
    REQUIRE(es.vectors.size() == static_cast<size_t>(m));
    CHECK(es.values == symmetric_eigenvalues(a));
    for (size_t k = 0; k < es.vectors.size(); ++k) {
      // residual ||A v - lambda v||
      double res = 0.0;
      for (int i = 0; i < m; ++i) {
        double av = 0.0;
        for (int j = 0; j < m; ++j)
          av += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                es.vectors[k][static_cast<size_t>(j)];
        double diff = av - es.values[k] * es.vectors[k][static_cast<size_t>(i)];
        res += diff * diff;
      }
      CHECK(std::sqrt(res) < 1e-9);
      for (size_t l = 0; l <= k; ++l) {
        double dot = 0.0;
        for (int i = 0; i < m; ++i)
          dot += es.vectors[k][static_cast<size_t>(i)] *
                 es.vectors[l][static_cast<size_t>(i)];
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("distribution run is deterministic and worker-invariant") {
  SampleConfig cfg;
  cfg.m = 5;
  cfg.n = 500;
  cfg.seed = 3;
  cfg.bins = 40;
  cfg.workers = 1;
  SpreadHistogram one = run_distribution(cfg);
  cfg.workers = 3;
  SpreadHistogram three = run_distribution(cfg);
  CHECK(one.mean == three.mean);
  CHECK(one.variance == three.variance);
  CHECK(one.counts == three.counts);
  CHECK(one.edges == three.edges);

  long total = 0;
  for (long c : one.counts) {
    CHECK(c >= 0);
    total += c;
  }
  CHECK(total == cfg.n);
  REQUIRE(one.edges.size() == 41);
  CHECK(one.edges.front() == 0.0);
  CHECK(one.edges.back() == 1.0);
  // normalized spreads live strictly inside (0,1)
  CHECK(one.mean > 0.0);
  CHECK(one.mean < 1.0);
  CHECK(one.variance > 0.0);
}

TEST_CASE("distribution run rejects degenerate configurations") {
  SampleConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(run_distribution(cfg), std::domain_error);
  cfg.n = 10;
  cfg.bins = 1;
  CHECK_THROWS_AS(run_distribution(cfg), std::domain_error);
}
