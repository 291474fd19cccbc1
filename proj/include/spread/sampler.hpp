#ifndef SPREAD_SAMPLER_HPP
#define SPREAD_SAMPLER_HPP

// Monte Carlo spread distribution for random symmetric matrices with
// entries uniform on [-1,1], normalized by the Zhan bound.

#include <cstdint>
#include <vector>

namespace spread {

struct SampleConfig {
  int m = 13;
  long n = 200000;
  std::uint64_t seed = 1;
  int bins = 200;
  int workers = 1;
};

struct SpreadHistogram {
  std::vector<double> edges;  // bins+1 edges spanning [0,1]
  std::vector<long> counts;
  double mean = 0.0;
  double variance = 0.0;
};

// splitmix64: the full 64-bit output sequence is the substream contract
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform_pm1() {  // uniform on [-1,1)
    return static_cast<double>(next() >> 11) * 0x1p-52 - 1.0;
  }
};

// substream for one sample index; independent of worker assignment
SplitMix64 sample_rng(std::uint64_t seed, long index);

std::vector<std::vector<double>> sample_matrix(int m, SplitMix64 &rng);

// cyclic Jacobi; ascending; throws on non-convergence
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a,
                                          double tol = 1e-12);

// values ascending; vectors[k] is the unit eigenvector for values[k]
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

EigenSystem symmetric_eigensystem(std::vector<std::vector<double>> a,
                                  double tol = 1e-12);

SpreadHistogram run_distribution(const SampleConfig &cfg);

}  // namespace spread

#endif
