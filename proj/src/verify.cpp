#include "spread/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace spread {

namespace {

using nlohmann::json;

std::string rat_str(const Rat &r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

Rat rat_parse(const std::string &s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

std::string rho_key(const ZPoly &rho) { return poly_to_text(rho, "tau"); }
std::string rho_key(const TAPoly &rho) { return bipoly_to_text(rho, "tau", "a"); }

bool is_lambda_power(const ZPoly &p) {
  for (int i = 0; i < p.degree(); ++i)
    if (!is_zero(p.coeff(static_cast<size_t>(i)))) return false;
  return true;
}

RatInterval largest_root_interval(const ZPoly &rho, const Rat &width) {
  auto ivs = isolate_real_roots(rho, width);
  if (ivs.empty()) return {Rat(0), Rat(0)};
  return ivs.back();
}

// exact placement of the largest real root of p relative to x:
// -1 below, 0 equal, +1 above
int largest_root_vs(const ZPoly &p, const Rat &x) {
  ZPoly g = squarefree_part(p);
  bool at = sign_at(g, x) == 0;
  if (at) g = deflate_rational_root(g, x);
  int above = (g.degree() >= 1) ? count_roots_above(g, x) : 0;
  if (above > 0) return 1;
  return at ? 0 : -1;
}

constexpr long kDefaultBlock = 20000;

// strided index loop over [begin, end) with per-worker locals
template <class Local>
void run_block(long begin, long end, int workers, std::vector<Local> &locals,
               const std::function<void(long, Local &)> &work) {
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) work(i, locals[0]);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (long i = begin + w; i < end; i += workers)
        work(i, locals[static_cast<size_t>(w)]);
    });
  for (auto &t : pool) t.join();
}

}  // namespace

std::uint64_t fnv1a(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConjectureHolds: return "conjecture-holds";
    case Verdict::Counterexample: return "counterexample";
    default: return "inconclusive";
  }
}

ZPoly spread_resultant_T(const ZPoly &p) {
  if (p.zero()) throw std::domain_error("zero characteristic polynomial");
  const int m = p.degree();
  ZPoly r = resultant(lift(p), shift_compose(p));
  return primitive_part(remove_power(r, m));
}

TAPoly spread_resultant_T_sym(const Poly<ZPoly> &p) {
  if (p.zero()) throw std::domain_error("zero characteristic polynomial");
  const int m = p.degree();
  TAPoly r = resultant(lift(p), shift_compose(p));
  return strip_content(remove_power(r, m));
}

ZPoly deflated_resultant(const ZPoly &p) {
  return primitive_part(deflate_even(spread_resultant_T(p)));
}

TAPoly deflated_resultant_sym(const Poly<ZPoly> &p) {
  return strip_content(deflate_even(spread_resultant_T_sym(p)));
}

RatInterval spread_sq_interval(const SymBohemian &s, const Rat &width) {
  if (!s.a_value) throw std::domain_error("spread_sq_interval needs a rational a");
  Int den = s.a_value->get_den();
  ZPoly p = charpoly_int(scaled_int_matrix(s));
  if (is_lambda_power(p)) return {Rat(0), Rat(0)};  // zero matrix: spread 0
  ZPoly rho = deflated_resultant(p);
  Rat d2(den * den);
  RatInterval iv = largest_root_interval(rho, width * d2);
  return {iv.lo / d2, iv.hi / d2};
}

// ---------------------------------------------------------------- zero mode

namespace {

struct ZeroAnalysis {
  RatInterval iv;
  std::uint64_t hash = 0;
  bool survivor = false;
  bool equals = false;
  bool exceeds = false;
};

struct ZeroCache {
  std::unordered_map<std::string, std::shared_ptr<ZeroAnalysis>> by_charpoly;
  std::unordered_map<std::string, std::shared_ptr<ZeroAnalysis>> by_rho;
};

struct ZeroFlag {
  long idx;
  int rank;
  std::shared_ptr<ZeroAnalysis> a;
};

struct ZeroLocal {
  long rank2 = 0, mirsky = 0, resolved = 0;
  std::unordered_set<std::uint64_t> hashes;
  std::vector<ZeroFlag> flagged;
};

}  // namespace

VerificationReport verify_zero(int m, const VerifyOptions &opts) {
  if (m < 2 || m > 9) throw std::domain_error("verify_zero: 2 <= m <= 9");
  const Rat a0(0);
  const auto ks = optimal_k(m, a0);
  Rat conj = conjectured_spread_sq(m, ks[0], a0);
  for (int k : ks) {
    Rat c = conjectured_spread_sq(m, k, a0);
    if (c > conj) conj = c;
  }
  const Rat threshold = conj * opts.report_factor * opts.report_factor;
  const Rat tight = Rat(1, Int(1) << 53);

  const auto graphs = nonisomorphic_graphs(m);
  const long dcount = (1L << m) - 1;
  const long total = static_cast<long>(graphs.size()) * dcount;
  const int workers = std::max(1, opts.workers);

  auto matrix_at = [&](long idx) {
    return assemble(graphs[static_cast<size_t>(idx / dcount)],
                    static_cast<std::uint16_t>(idx % dcount), a0);
  };

  auto analyze = [&](const ZPoly &rho) {
    auto a = std::make_shared<ZeroAnalysis>();
    a->hash = fnv1a(rho_key(rho));
    a->iv = largest_root_interval(rho, opts.tolerance);
    a->survivor = a->iv.hi > threshold;
    if (a->survivor) {
      a->iv = largest_root_interval(rho, tight);
      int rel = largest_root_vs(rho, conj);
      a->equals = rel == 0;
      a->exceeds = rel > 0;
    }
    return a;
  };

  std::vector<ZeroCache> caches(static_cast<size_t>(workers));
  std::vector<ZeroLocal> locals(static_cast<size_t>(workers));

  auto work = [&](long idx, ZeroLocal &local) {
    int w = workers <= 1 ? 0 : static_cast<int>(&local - locals.data());
    ZeroCache &cache = caches[static_cast<size_t>(w)];
    SymBohemian s = matrix_at(idx);
    int rank = rank_exact(s);
    if (opts.prune_rank2 && rank == 2) {
      ++local.rank2;
      return;
    }
    if (opts.prune_mirsky && mirsky_bound_sq(s) < conj) {
      ++local.mirsky;
      return;
    }
    ZPoly p = charpoly_int(scaled_int_matrix(s));
    std::string pkey = poly_to_text(p, "l");
    std::shared_ptr<ZeroAnalysis> an;
    auto it = cache.by_charpoly.find(pkey);
    if (it != cache.by_charpoly.end()) {
      an = it->second;
    } else {
      ZPoly rho = squarefree_part(deflated_resultant(p));
      std::string rk = rho_key(rho);
      auto jt = cache.by_rho.find(rk);
      if (jt != cache.by_rho.end()) an = jt->second;
      else {
        an = analyze(rho);
        cache.by_rho.emplace(std::move(rk), an);
      }
      cache.by_charpoly.emplace(std::move(pkey), an);
    }
    ++local.resolved;
    local.hashes.insert(an->hash);
    if (an->survivor) local.flagged.push_back({idx, rank, an});
  };

  // global accumulators
  long rank2 = 0, mirsky = 0, resolved = 0;
  std::unordered_set<std::uint64_t> hashes;
  std::map<std::uint64_t, ZeroFlag> flagged;  // one survivor per resultant

  long start = 0;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    if (in) {
      json cp = json::parse(in);
      if (cp.value("mode", "") == "zero" && cp.value("m", -1) == m) {
        start = cp["next_index"].get<long>();
        rank2 = cp["pruned_by_rank2"].get<long>();
        mirsky = cp["pruned_by_mirsky"].get<long>();
        resolved = cp["resolved"].get<long>();
        for (const auto &h : cp["hashes"]) hashes.insert(std::stoull(h.get<std::string>(), nullptr, 16));
        for (const auto &f : cp["flagged"]) {
          auto an = std::make_shared<ZeroAnalysis>();
          an->iv = {rat_parse(f["lo"].get<std::string>()), rat_parse(f["hi"].get<std::string>())};
          an->hash = std::stoull(f["hash"].get<std::string>(), nullptr, 16);
          an->survivor = true;
          an->equals = f["equals"].get<bool>();
          an->exceeds = f["exceeds"].get<bool>();
          ZeroFlag fl{f["idx"].get<long>(), f["rank"].get<int>(), an};
          flagged.emplace(an->hash, fl);
        }
      }
    }
  }

  const long block = opts.checkpoint_every > 0 ? opts.checkpoint_every : kDefaultBlock;
  for (long b = start; b < total; b += block) {
    long e = std::min(total, b + block);
    for (auto &l : locals) l = ZeroLocal{};
    run_block<ZeroLocal>(b, e, workers, locals, work);
    for (auto &l : locals) {
      rank2 += l.rank2;
      mirsky += l.mirsky;
      resolved += l.resolved;
      hashes.merge(l.hashes);
      for (auto &f : l.flagged) {
        auto [it, fresh] = flagged.emplace(f.a->hash, f);
        if (!fresh && f.idx < it->second.idx) it->second = f;
      }
    }
    if (opts.progress) opts.progress(e, total);
    if (!opts.checkpoint_path.empty()) {
      json cp;
      cp["mode"] = "zero";
      cp["m"] = m;
      cp["next_index"] = e;
      cp["pruned_by_rank2"] = rank2;
      cp["pruned_by_mirsky"] = mirsky;
      cp["resolved"] = resolved;
      json hs = json::array();
      {
        char buf[17];
        for (auto h : hashes) {
          snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
          hs.push_back(buf);
        }
      }
      cp["hashes"] = std::move(hs);
      json fl = json::array();
      for (const auto &[h, f] : flagged) {
        char buf[17];
        snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        fl.push_back({{"idx", f.idx},
                      {"rank", f.rank},
                      {"hash", buf},
                      {"lo", rat_str(f.a->iv.lo)},
                      {"hi", rat_str(f.a->iv.hi)},
                      {"equals", f.a->equals},
                      {"exceeds", f.a->exceeds}});
      }
      cp["flagged"] = std::move(fl);
      std::ofstream out(opts.checkpoint_path);
      out << cp.dump(1) << '\n';
    }
  }

  VerificationReport r;
  r.mode = "zero";
  r.m = m;
  r.a = a0;
  r.k = ks;
  r.conjectured_spread_sq = rat_str(conj);
  r.candidates_examined = total;
  r.pruned_by_mirsky = mirsky;
  r.pruned_by_rank2 = rank2;
  r.resolved = resolved;
  r.unique_resultants = static_cast<long>(hashes.size());

  // the Fallat-Xing matrix itself attains the conjectured value exactly
  r.conjectured_value_attained = true;
  for (int k : ks) {
    SymBohemian fx = build_fallat_xing(m, k, a0);
    ZPoly rho = deflated_resultant(charpoly_int(scaled_int_matrix(fx)));
    if (largest_root_vs(rho, conj) != 0) r.conjectured_value_attained = false;
  }

  std::vector<const ZeroFlag *> ordered;
  for (const auto &[h, f] : flagged) ordered.push_back(&f);
  std::sort(ordered.begin(), ordered.end(),
            [](const ZeroFlag *x, const ZeroFlag *y) { return x->idx < y->idx; });
  bool ce = false;
  for (const ZeroFlag *f : ordered) {
    SpreadResult sr;
    sr.matrix = matrix_at(f->idx);
    sr.spread_sq_interval = f->a->iv;
    sr.resultant_hash = f->a->hash;
    sr.rank = f->rank;
    sr.equals_conjectured = f->a->equals;
    sr.exceeds_conjectured = f->a->exceeds;
    ce = ce || sr.exceeds_conjectured;
    r.survivors.push_back(std::move(sr));
  }
  r.verdict = ce ? Verdict::Counterexample : Verdict::ConjectureHolds;
  return r;
}

// ------------------------------------------------------------ symbolic mode

namespace {

struct Sub {
  Rat lo, hi, mid;
  int k;
  ZPoly cpoly;  // conjectured squared spread as a polynomial in a
};

enum class SubOutcome { Clear, ZeroZ, Crossing, Counterexample };

struct SymAnalysis {
  std::uint64_t hash = 0;
  std::vector<SubOutcome> subs;
  std::vector<int> sturm_counts;
};

struct SymCache {
  std::unordered_map<std::string, std::shared_ptr<SymAnalysis>> by_charpoly;
  std::unordered_map<std::string, std::shared_ptr<SymAnalysis>> by_rho;
};

struct SymFlag {
  long idx;
  int sub;
  SubOutcome o;
};

struct SymLocal {
  long resolved = 0;
  std::unordered_set<std::uint64_t> hashes;
  std::vector<SymFlag> flagged;
};

// largest root of rho(tau; a0) versus the value c(a0): -1/0/+1
int anchored_comparison(const TAPoly &rho, const ZPoly &cpoly, const Rat &a0) {
  ZPoly rho_a = substitute_a(rho, a0);
  Rat cm = eval_rat(cpoly, a0);
  return largest_root_vs(rho_a, cm);
}

}  // namespace

VerificationReport verify_symbolic(int m, const VerifyOptions &opts) {
  if (m < 2 || m > 8) throw std::domain_error("verify_symbolic: 2 <= m <= 8");
  std::vector<Rat> pts{Rat(-1)};
  for (const Rat &b : breakpoints(m)) pts.push_back(b);
  pts.push_back(Rat(1));
  std::vector<Sub> subs;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Sub s;
    s.lo = pts[i];
    s.hi = pts[i + 1];
    s.mid = (s.lo + s.hi) / 2;
    s.k = optimal_k(m, s.mid)[0];
    s.cpoly = conjectured_spread_sq_poly(m, s.k);
    subs.push_back(std::move(s));
  }

  const auto graphs = nonisomorphic_graphs(m);
  const long dcount = (1L << m) - 1;
  const long total = static_cast<long>(graphs.size()) * dcount;
  const int workers = std::max(1, opts.workers);

  auto matrix_at = [&](long idx) {
    return assemble(graphs[static_cast<size_t>(idx / dcount)],
                    static_cast<std::uint16_t>(idx % dcount), std::nullopt);
  };

  auto analyze = [&](const TAPoly &rho) {
    auto an = std::make_shared<SymAnalysis>();
    an->hash = fnv1a(rho_key(rho));
    for (const Sub &sub : subs) {
      ZPoly z = eval_bipoly_at(rho, sub.cpoly);
      if (z.zero()) {
        an->subs.push_back(SubOutcome::ZeroZ);
        an->sturm_counts.push_back(0);
        continue;
      }
      ZPoly zp = primitive_part(z);
      // endpoint roots belong to neighbouring intervals (a=1 always; a=-1
      // and the breakpoints occasionally); factor them out before Sturm
      for (const Rat &ep : {Rat(1), Rat(-1), sub.lo, sub.hi})
        while (zp.degree() >= 1 && sign_at(zp, ep) == 0)
          zp = deflate_rational_root(zp, ep);
      int n = (zp.degree() >= 1) ? sturm_count(zp, sub.lo, sub.hi) : 0;
      an->sturm_counts.push_back(n);
      int rel = anchored_comparison(rho, sub.cpoly, sub.mid);
      if (rel > 0) {
        an->subs.push_back(SubOutcome::Counterexample);
        continue;
      }
      if (n == 0) {
        an->subs.push_back(SubOutcome::Clear);
        continue;
      }
      // Z has interior roots: some branch of rho meets the conjectured
      // curve.  Decide whether the largest root ever exceeds it by
      // sampling between consecutive roots of Z.
      std::vector<Rat> samples;
      ZPoly zin = primitive_part(z);
      auto ivs = isolate_real_roots(zin, Rat(1, 1024));
      std::vector<RatInterval> inside;
      for (const auto &iv : ivs)
        if (iv.hi > sub.lo && iv.lo < sub.hi) inside.push_back(iv);
      Rat cursor = sub.lo;
      for (const auto &iv : inside) {
        if (iv.lo > cursor) samples.push_back((cursor + iv.lo) / 2);
        cursor = iv.hi < sub.hi ? iv.hi : sub.hi;
      }
      if (cursor < sub.hi) samples.push_back((cursor + sub.hi) / 2);
      bool exceeded = false;
      for (const Rat &pt : samples) {
        if (!(pt > sub.lo && pt < sub.hi)) continue;
        if (anchored_comparison(rho, sub.cpoly, pt) > 0) exceeded = true;
      }
      an->subs.push_back(exceeded ? SubOutcome::Counterexample : SubOutcome::Crossing);
    }
    return an;
  };

  std::vector<SymCache> caches(static_cast<size_t>(workers));
  std::vector<SymLocal> locals(static_cast<size_t>(workers));

  auto work = [&](long idx, SymLocal &local) {
    int w = workers <= 1 ? 0 : static_cast<int>(&local - locals.data());
    SymCache &cache = caches[static_cast<size_t>(w)];
    SymBohemian s = matrix_at(idx);
    Poly<ZPoly> p = charpoly_sym(s);
    std::string pkey = bipoly_to_text(p, "l", "a");
    std::shared_ptr<SymAnalysis> an;
    auto it = cache.by_charpoly.find(pkey);
    if (it != cache.by_charpoly.end()) {
      an = it->second;
    } else {
      TAPoly rho = squarefree_part(deflated_resultant_sym(p));
      std::string rk = rho_key(rho);
      auto jt = cache.by_rho.find(rk);
      if (jt != cache.by_rho.end()) an = jt->second;
      else {
        an = analyze(rho);
        cache.by_rho.emplace(std::move(rk), an);
      }
      cache.by_charpoly.emplace(std::move(pkey), an);
    }
    ++local.resolved;
    local.hashes.insert(an->hash);
    for (size_t si = 0; si < subs.size(); ++si)
      if (an->subs[si] != SubOutcome::Clear)
        local.flagged.push_back({idx, static_cast<int>(si), an->subs[si]});
  };

  long resolved = 0;
  std::unordered_set<std::uint64_t> hashes;
  std::vector<SymFlag> flagged;

  long start = 0;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    if (in) {
      json cp = json::parse(in);
      if (cp.value("mode", "") == "symbolic" && cp.value("m", -1) == m) {
        start = cp["next_index"].get<long>();
        resolved = cp["resolved"].get<long>();
        for (const auto &h : cp["hashes"]) hashes.insert(std::stoull(h.get<std::string>(), nullptr, 16));
        for (const auto &f : cp["flagged"])
          flagged.push_back({f["idx"].get<long>(), f["sub"].get<int>(),
                             static_cast<SubOutcome>(f["o"].get<int>())});
      }
    }
  }

  const long block = opts.checkpoint_every > 0 ? opts.checkpoint_every : kDefaultBlock;
  for (long b = start; b < total; b += block) {
    long e = std::min(total, b + block);
    for (auto &l : locals) l = SymLocal{};
    run_block<SymLocal>(b, e, workers, locals, work);
    for (auto &l : locals) {
      resolved += l.resolved;
      hashes.merge(l.hashes);
      flagged.insert(flagged.end(), l.flagged.begin(), l.flagged.end());
    }
    if (opts.progress) opts.progress(e, total);
    if (!opts.checkpoint_path.empty()) {
      json cp;
      cp["mode"] = "symbolic";
      cp["m"] = m;
      cp["next_index"] = e;
      cp["resolved"] = resolved;
      json hs = json::array();
      char buf[17];
      for (auto h : hashes) {
        snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        hs.push_back(buf);
      }
      cp["hashes"] = std::move(hs);
      json fl = json::array();
      for (const auto &f : flagged)
        fl.push_back({{"idx", f.idx}, {"sub", f.sub}, {"o", static_cast<int>(f.o)}});
      cp["flagged"] = std::move(fl);
      std::ofstream out(opts.checkpoint_path);
      out << cp.dump(1) << '\n';
    }
  }

  std::sort(flagged.begin(), flagged.end(), [](const SymFlag &x, const SymFlag &y) {
    return x.idx != y.idx ? x.idx < y.idx : x.sub < y.sub;
  });

  VerificationReport r;
  r.mode = "symbolic";
  r.m = m;
  r.candidates_examined = total;
  r.resolved = resolved;
  r.unique_resultants = static_cast<long>(hashes.size());
  std::string conj_text;
  for (const Sub &sub : subs) {
    if (!conj_text.empty()) conj_text += "; ";
    conj_text += "k=" + std::to_string(sub.k) + " on (" + rat_str(sub.lo) + "," +
                 rat_str(sub.hi) + "): " + poly_to_text(sub.cpoly, "a");
    r.k.push_back(sub.k);
  }
  r.conjectured_spread_sq = conj_text;

  constexpr size_t kMaxExamples = 5;
  r.subintervals.resize(subs.size());
  for (size_t si = 0; si < subs.size(); ++si) {
    r.subintervals[si].lo = subs[si].lo;
    r.subintervals[si].hi = subs[si].hi;
    r.subintervals[si].k = subs[si].k;
  }
  bool ce = false;
  for (const SymFlag &f : flagged) {
    auto &sub = r.subintervals[static_cast<size_t>(f.sub)];
    std::string text = matrix_to_text(matrix_at(f.idx));
    switch (f.o) {
      case SubOutcome::ZeroZ:
        ++sub.zero_Z_matrices;
        if (sub.equal_spread_examples.size() < kMaxExamples)
          sub.equal_spread_examples.push_back(std::move(text));
        break;
      case SubOutcome::Crossing:
      case SubOutcome::Counterexample:
        ++sub.crossing_candidates;
        if (sub.crossing_examples.size() < kMaxExamples)
          sub.crossing_examples.push_back(std::move(text));
        if (f.o == SubOutcome::Counterexample) ce = true;
        break;
      default:
        break;
    }
  }
  // every subinterval should see the rank-2 optimum itself (Z identically 0)
  r.conjectured_value_attained = true;
  for (const auto &sub : r.subintervals)
    if (sub.zero_Z_matrices == 0) r.conjectured_value_attained = false;
  r.verdict = ce ? Verdict::Counterexample : Verdict::ConjectureHolds;
  return r;
}

// --------------------------------------------------------- unique resultants

UniqueResultants unique_resultants(int m, const std::optional<Rat> &a, bool brute) {
  UniqueResultants out;
  std::unordered_set<std::string> seen;
  // the trivial resultant tau^C(m,2) (every eigenvalue difference zero)
  // has root set {0}, so its squarefree key is tau itself
  const std::string trivial = rho_key(ZPoly{Int(0), Int(1)});

  // track the matrix whose largest squared-spread root is maximal (rational a)
  auto consider = [&](const SymBohemian &s, const std::string &key, const ZPoly &rho) {
    if (!seen.insert(key).second) return;
    out.digests.push_back(fnv1a(key));
    ++out.total;
    if (key != trivial) ++out.nontrivial;
    if (s.a_value) {
      RatInterval iv = largest_root_interval(rho, Rat(1, 1048576));
      if (!out.max_matrix || iv.lo > out.max_interval.hi) {
        out.max_matrix = s;
        out.max_interval = iv;
      }
    }
  };
  auto consider_sym = [&](const std::string &key) {
    if (!seen.insert(key).second) return;
    out.digests.push_back(fnv1a(key));
    ++out.total;
    if (key != trivial) ++out.nontrivial;
  };

  auto process = [&](const SymBohemian &s) {
    if (s.a_value) {
      ZPoly p = charpoly_int(scaled_int_matrix(s));
      ZPoly rho = squarefree_part(deflated_resultant(p));
      consider(s, rho_key(rho), rho);
    } else {
      TAPoly rho = squarefree_part(deflated_resultant_sym(charpoly_sym(s)));
      consider_sym(rho_key(rho));
    }
  };

  if (brute) {
    if (m > 5) throw std::domain_error("brute-force mode supports m <= 5");
    const int nb = m * (m - 1) / 2;
    const std::uint64_t n = std::uint64_t(1) << (nb + m);
    for (std::uint64_t bits = 0; bits < n; ++bits) {
      SymBohemian s;
      s.m = m;
      s.diag = static_cast<std::uint16_t>(bits & ((1u << m) - 1));
      s.upper = bits >> m;
      s.a_value = a;
      process(s);
    }
  } else {
    for_each_candidate(m, a, process);
  }
  std::sort(out.digests.begin(), out.digests.end());
  return out;
}

// ------------------------------------------------------------------ reports

std::string report_to_json(const VerificationReport &r, bool include_timing,
                           double elapsed_ms) {
  json j;
  j["report_version"] = r.report_version;
  j["mode"] = r.mode;
  j["m"] = r.m;
  j["a"] = r.a ? rat_str(*r.a) : "sym";
  j["k"] = r.k;
  j["conjectured_spread_sq"] = r.conjectured_spread_sq;
  j["candidates_examined"] = r.candidates_examined;
  j["pruned_by_mirsky"] = r.pruned_by_mirsky;
  j["pruned_by_rank2"] = r.pruned_by_rank2;
  j["resolved"] = r.resolved;
  j["unique_resultants"] = r.unique_resultants;
  j["conjectured_value_attained"] = r.conjectured_value_attained;
  json survivors = json::array();
  for (const auto &s : r.survivors) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(s.resultant_hash));
    survivors.push_back({{"matrix", matrix_to_text(s.matrix)},
                         {"spread_sq_interval",
                          {rat_str(s.spread_sq_interval.lo), rat_str(s.spread_sq_interval.hi)}},
                         {"resultant_hash", buf},
                         {"rank", s.rank},
                         {"equals_conjectured", s.equals_conjectured},
                         {"exceeds_conjectured", s.exceeds_conjectured}});
  }
  j["survivors"] = std::move(survivors);
  if (r.mode == "symbolic") {
    json subs = json::array();
    for (const auto &s : r.subintervals)
      subs.push_back({{"lo", rat_str(s.lo)},
                      {"hi", rat_str(s.hi)},
                      {"k", s.k},
                      {"equal_spread_matrices", s.zero_Z_matrices},
                      {"crossing_candidates", s.crossing_candidates},
                      {"equal_spread_examples", s.equal_spread_examples},
                      {"crossing_examples", s.crossing_examples}});
    j["subintervals"] = std::move(subs);
  }
  j["verdict"] = to_string(r.verdict);
  if (include_timing) j["timing_ms"] = elapsed_ms;
  return j.dump(1) + "\n";
}

}  // namespace spread
