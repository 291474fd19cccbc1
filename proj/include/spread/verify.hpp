#ifndef SPREAD_VERIFY_HPP
#define SPREAD_VERIFY_HPP

// The two proof drivers: exhaustive a=0 verification with Mirsky and
// rank-2 pruning, and the symbolic-a driver (bivariate resultants,
// Sturm counts per breakpoint subinterval, per-subinterval anchors).

#include "spread/bohemian.hpp"
#include "spread/enumerate.hpp"
#include "spread/roots.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spread {

// ----- the resultant pipeline -----

// psi(T) = resultant_lambda(p(lambda), p(lambda+T)) / T^m, even in T
ZPoly spread_resultant_T(const ZPoly &charpoly);
TAPoly spread_resultant_T_sym(const Poly<ZPoly> &charpoly);

// rho(tau) with rho(T^2) = psi(T); its largest real root is the squared
// spread.  Integer content stripped.
ZPoly deflated_resultant(const ZPoly &charpoly);
TAPoly deflated_resultant_sym(const Poly<ZPoly> &charpoly);

// isolating interval of the largest real root of rho(tau) for the given
// matrix (rational a); [0,0] for the zero-spread case
RatInterval spread_sq_interval(const SymBohemian &s, const Rat &width);

std::uint64_t fnv1a(const std::string &bytes);

// ----- reports -----

enum class Verdict { ConjectureHolds, Counterexample, Inconclusive };
std::string to_string(Verdict v);

struct SpreadResult {
  SymBohemian matrix;
  RatInterval spread_sq_interval;
  std::uint64_t resultant_hash = 0;
  int rank = 0;
  bool equals_conjectured = false;  // squared spread is exactly the conjectured max
  bool exceeds_conjectured = false;
};

struct SubintervalFinding {
  Rat lo, hi;
  int k = 0;
  long zero_Z_matrices = 0;  // Z(a) identically zero: same spread as the rank-2 max
  long crossing_candidates = 0;
  std::vector<std::string> equal_spread_examples;   // matrix text, capped
  std::vector<std::string> crossing_examples;
};

struct VerificationReport {
  int report_version = 1;
  std::string mode;  // "zero" | "symbolic"
  int m = 0;
  std::optional<Rat> a;
  std::vector<int> k;
  std::string conjectured_spread_sq;  // rational (zero) or per-k polynomial text
  long candidates_examined = 0;
  long pruned_by_mirsky = 0;
  long pruned_by_rank2 = 0;
  long resolved = 0;
  long unique_resultants = 0;
  bool conjectured_value_attained = false;
  std::vector<SpreadResult> survivors;
  std::vector<SubintervalFinding> subintervals;
  Verdict verdict = Verdict::Inconclusive;
};

struct VerifyOptions {
  Rat tolerance = Rat(1, 1048576);       // 2^-20
  Rat report_factor = Rat(999, 1000);
  int workers = 1;
  bool prune_rank2 = true;
  bool prune_mirsky = true;
  long checkpoint_every = 0;             // 0: no checkpoints
  std::string checkpoint_path;
  std::function<void(long, long)> progress;  // (done, total)
};

VerificationReport verify_zero(int m, const VerifyOptions &opts = {});
VerificationReport verify_symbolic(int m, const VerifyOptions &opts = {});

// ----- unique deflated resultants -----

struct UniqueResultants {
  long total = 0;
  long nontrivial = 0;  // excluding the all-differences-zero resultant tau^C(m,2)
  std::vector<std::uint64_t> digests;
  // index (into the enumeration order) and resultant of the matrix whose
  // largest root is maximal; brute mode only fills these for rational a
  std::optional<SymBohemian> max_matrix;
  RatInterval max_interval{Rat(0), Rat(0)};
};

// brute=true enumerates all 2^{m(m+1)/2} symmetric matrices (m <= 5);
// brute=false walks the canonical candidate stream
UniqueResultants unique_resultants(int m, const std::optional<Rat> &a, bool brute);

std::string report_to_json(const VerificationReport &r, bool include_timing = false,
                           double elapsed_ms = 0.0);

}  // namespace spread

#endif
