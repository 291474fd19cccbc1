#include "spread/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace spread {

SplitMix64 sample_rng(std::uint64_t seed, long index) {
  // decorrelate the per-sample states by running the mix once
  SplitMix64 mix(seed ^ (0x517cc1b727220a95ull * static_cast<std::uint64_t>(index + 1)));
  return SplitMix64(mix.next());
}

std::vector<std::vector<double>> sample_matrix(int m, SplitMix64 &rng) {
  std::vector<std::vector<double>> a(static_cast<size_t>(m),
                                     std::vector<double>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double v = rng.uniform_pm1();
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      a[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }
  return a;
}

namespace {

double offdiag_norm(const std::vector<std::vector<double>> &a) {
  double s = 0.0;
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
  return std::sqrt(s);
}

// diagonalizes a in place; when v is non-null the same rotations accumulate
// into it, so column k of v ends up as the eigenvector for a[k][k]
void jacobi_diagonalize(std::vector<std::vector<double>> &a, double tol,
                        std::vector<std::vector<double>> *v) {
  const size_t n = a.size();
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a) >= tol) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("Jacobi eigensolver did not converge: off-diagonal norm " +
                               std::to_string(offdiag_norm(a)));
    for (size_t p = 0; p + 1 < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (apq == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = a[r][p], arq = a[r][q];
          a[r][p] = a[p][r] = c * arp - s * arq;
          a[r][q] = a[q][r] = s * arp + c * arq;
        }
        if (v)
          for (size_t r = 0; r < n; ++r) {
            double vrp = (*v)[r][p], vrq = (*v)[r][q];
            (*v)[r][p] = c * vrp - s * vrq;
            (*v)[r][q] = s * vrp + c * vrq;
          }
      }
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a,
                                          double tol) {
  jacobi_diagonalize(a, tol, nullptr);
  std::vector<double> ev(a.size());
  for (size_t i = 0; i < a.size(); ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

EigenSystem symmetric_eigensystem(std::vector<std::vector<double>> a, double tol) {
  const size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  jacobi_diagonalize(a, tol, &v);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return a[x][x] < a[y][y]; });
  EigenSystem es;
  es.values.resize(n);
  es.vectors.assign(n, std::vector<double>(n));
  for (size_t k = 0; k < n; ++k) {
    es.values[k] = a[order[k]][order[k]];
    for (size_t r = 0; r < n; ++r) es.vectors[k][r] = v[r][order[k]];
  }
  return es;
}

SpreadHistogram run_distribution(const SampleConfig &cfg) {
  if (cfg.n < 1 || cfg.bins < 2) throw std::domain_error("need n >= 1 and bins >= 2");
  const double zhan = cfg.m % 2 == 0
                          ? std::sqrt(2.0) * cfg.m
                          : std::sqrt(2.0 * cfg.m * cfg.m - 1.0);

  // spreads land in a sample-indexed vector so the statistics pass is a
  // fixed sequential reduction regardless of the worker count
  std::vector<double> spread(static_cast<size_t>(cfg.n));
  auto solve_range = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      SplitMix64 rng = sample_rng(cfg.seed, i);
      auto a = sample_matrix(cfg.m, rng);
      auto ev = symmetric_eigenvalues(std::move(a));
      spread[static_cast<size_t>(i)] = (ev.back() - ev.front()) / zhan;
    }
  };
  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    solve_range(0, cfg.n);
  } else {
    std::vector<std::thread> pool;
    long chunk = (cfg.n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long lo = w * chunk, hi = std::min<long>(cfg.n, lo + chunk);
      if (lo < hi) pool.emplace_back(solve_range, lo, hi);
    }
    for (auto &t : pool) t.join();
  }

  SpreadHistogram h;
  h.edges.resize(static_cast<size_t>(cfg.bins) + 1);
  for (int b = 0; b <= cfg.bins; ++b)
    h.edges[static_cast<size_t>(b)] = static_cast<double>(b) / cfg.bins;
  h.counts.assign(static_cast<size_t>(cfg.bins), 0);
  double sum = 0.0, sumsq = 0.0;
  for (double x : spread) {
    int b = std::min(cfg.bins - 1, static_cast<int>(x * cfg.bins));
    if (b < 0) b = 0;
    ++h.counts[static_cast<size_t>(b)];
    sum += x;
    sumsq += x * x;
  }
  h.mean = sum / static_cast<double>(cfg.n);
  h.variance = sumsq / static_cast<double>(cfg.n) - h.mean * h.mean;
  return h;
}

}  // namespace spread
