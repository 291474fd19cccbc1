// bohemian-spread: verification drivers, per-matrix spread intervals,
// spread-distribution sampling, and enumeration statistics.

#include <CLI11.hpp>

#include "spread/companion.hpp"
#include "spread/enumerate.hpp"
#include "spread/roots.hpp"
#include "spread/sampler.hpp"
#include "spread/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int default_workers() {
  if (const char *env = std::getenv("BOHEMIAN_SPREAD_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int finish_verify(const spread::VerificationReport &r, const std::string &out,
                  bool timing, double elapsed_ms) {
  write_output(out, spread::report_to_json(r, timing, elapsed_ms));
  return r.verdict == spread::Verdict::ConjectureHolds ? kExitHolds : kExitCounterexample;
}

// decimal digits of sqrt(v) truncated/rounded to `digits` places
std::string sqrt_decimal(const spread::Rat &v, int digits, bool round_up) {
  spread::Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // isqrt(v * 10^(2*digits)) with floor/ceil semantics
  spread::Rat scaled = v * spread::Rat(scale * scale);
  spread::Int num = scaled.get_num(), den = scaled.get_den();
  spread::Int q = (num / den);  // floor for non-negative values
  spread::Int root = sqrt(q);   // floor sqrt
  if (round_up && root * root * den < num) root += 1;
  std::string s = root.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

std::string rat_text(const spread::Rat &r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact spread verification for symmetric {a,1} matrices"};
  app.require_subcommand(1);

  int m = 4;
  int tol_exp = 20;
  std::string factor_str = "999/1000";
  int workers = default_workers();
  std::string out_path;
  bool timing = false;
  std::string checkpoint;
  long checkpoint_every = 0;
  bool progress = false;

  auto add_verify_flags = [&](CLI::App *cmd, bool with_prune) {
    cmd->add_option("--m", m, "dimension")->required();
    cmd->add_option("--tolerance", tol_exp, "isolation width exponent e (width 2^-e)");
    cmd->add_option("--factor", factor_str, "report factor p/q");
    cmd->add_option("--workers", workers, "worker threads");
    cmd->add_option("--out", out_path, "report path (default stdout)");
    cmd->add_flag("--timing", timing, "include elapsed time in the report");
    cmd->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
    cmd->add_option("--checkpoint-every", checkpoint_every, "candidates per checkpoint block");
    cmd->add_flag("--progress", progress, "print progress to stderr");
    (void)with_prune;
  };

  auto *vz = app.add_subcommand("verify-zero", "exhaustive proof at a=0");
  add_verify_flags(vz, true);
  bool no_prune_rank2 = false, no_prune_mirsky = false;
  vz->add_flag("--no-prune-rank2", no_prune_rank2, "disable the rank-2 prune");
  vz->add_flag("--no-prune-mirsky", no_prune_mirsky, "disable the Mirsky prune");

  auto *vs = app.add_subcommand("verify-symbolic", "symbolic-a proof over (-1,1)");
  add_verify_flags(vs, false);

  auto *sp = app.add_subcommand("spread", "exact squared-spread interval of one matrix");
  std::string matrix_path, a_str = "";
  sp->add_option("file", matrix_path, "matrix text file")->required();
  sp->add_option("--a", a_str, "rational a (overrides the file header)");
  sp->add_option("--tolerance", tol_exp, "isolation width exponent");

  auto *sa = app.add_subcommand("sample", "Monte Carlo spread distribution");
  spread::SampleConfig cfg;
  std::string csv_path;
  sa->add_option("--m", cfg.m, "dimension");
  sa->add_option("--n", cfg.n, "sample count");
  sa->add_option("--seed", cfg.seed, "RNG seed");
  sa->add_option("--bins", cfg.bins, "histogram bins");
  sa->add_option("--workers", cfg.workers, "worker threads")->default_val(default_workers());
  sa->add_option("--out", out_path, "summary JSON path (default stdout)");
  sa->add_option("--csv", csv_path, "histogram CSV path");

  auto *es = app.add_subcommand("enumerate-stats", "canonicalization reduction counts");
  es->add_option("--m", m, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    spread::VerifyOptions opts;
    opts.tolerance = spread::Rat(1, spread::Int(1) << tol_exp);
    {
      spread::Rat f(factor_str);
      f.canonicalize();
      opts.report_factor = f;
    }
    opts.workers = workers;
    opts.checkpoint_path = checkpoint;
    opts.checkpoint_every = checkpoint_every;
    if (progress)
      opts.progress = [](long done, long total) {
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) std::cerr << "\n";
      };

    if (vz->parsed()) {
      if (m < 2 || m > 9) {
        std::cerr << "verify-zero: m must be in [2,9]\n";
        return kExitUsage;
      }
      opts.prune_rank2 = !no_prune_rank2;
      opts.prune_mirsky = !no_prune_mirsky;
      auto t0 = std::chrono::steady_clock::now();
      auto r = spread::verify_zero(m, opts);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
      return finish_verify(r, out_path, timing, ms);
    }

    if (vs->parsed()) {
      if (m < 2 || m > 8) {
        std::cerr << "verify-symbolic: m must be in [2,8]\n";
        return kExitUsage;
      }
      auto t0 = std::chrono::steady_clock::now();
      auto r = spread::verify_symbolic(m, opts);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
      return finish_verify(r, out_path, timing, ms);
    }

    if (sp->parsed()) {
      std::ifstream in(matrix_path);
      if (!in) {
        std::cerr << "spread: cannot open " << matrix_path << "\n";
        return kExitData;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      spread::SymBohemian s;
      try {
        s = spread::matrix_from_text(ss.str());
      } catch (const std::exception &e) {
        std::cerr << "spread: parse error: " << e.what() << "\n";
        return kExitData;
      }
      if (!a_str.empty()) {
        spread::Rat a(a_str);
        a.canonicalize();
        s.a_value = a;
      }
      if (!s.a_value) {
        std::cerr << "spread: symbolic matrix needs --a\n";
        return kExitUsage;
      }
      auto iv = spread::spread_sq_interval(s, spread::Rat(1, spread::Int(1) << tol_exp));
      std::cout << "spread^2 in [" << rat_text(iv.lo) << ", " << rat_text(iv.hi) << "]\n";
      std::cout << "spread   in [" << sqrt_decimal(iv.lo, 6, false) << ", "
                << sqrt_decimal(iv.hi, 6, true) << "]\n";
      return 0;
    }

    if (sa->parsed()) {
      auto h = spread::run_distribution(cfg);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "bin_lo,bin_hi,count\n";
        char buf[64];
        for (size_t b = 0; b < h.counts.size(); ++b) {
          snprintf(buf, sizeof buf, "%.10g,%.10g,%ld\n", h.edges[b], h.edges[b + 1],
                   h.counts[b]);
          csv << buf;
        }
      }
      char buf[256];
      snprintf(buf, sizeof buf,
               "{\"m\": %d, \"n\": %ld, \"seed\": %llu, \"mean\": %.10g, "
               "\"variance\": %.10g}\n",
               cfg.m, cfg.n, static_cast<unsigned long long>(cfg.seed), h.mean,
               h.variance);
      write_output(out_path, buf);
      return 0;
    }

    if (es->parsed()) {
      if (m < 2 || m > 9) {
        std::cerr << "enumerate-stats: m must be in [2,9]\n";
        return kExitUsage;
      }
      auto graphs = spread::nonisomorphic_graphs(m);
      unsigned long long all = 1ull << (m * (m + 1) / 2);
      unsigned long long um = graphs.size();
      std::cout << "m=" << m << " total=" << all << " canonical_graphs=" << um
                << " candidates=" << ((1ull << m) - 1) * um << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
