#include "szego/laws.hpp"

#include "szego/composition.hpp"
#include "szego/phi_map.hpp"
#include "szego/realization.hpp"
#include "szego/signature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>

namespace szego {

long LawConfig::count(long full) const {
  return std::max(1L, std::lround(static_cast<double>(full) * scale));
}

LawResult sweep(std::string name, long count, const LawConfig& cfg, std::uint64_t salt, const CaseCheck& check) {
  const auto start = std::chrono::steady_clock::now();
  LawResult res;
  res.name = std::move(name);
  res.cases = count;
  long failures = 0;
  long first = std::numeric_limits<long>::max();
  std::string first_msg;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) if (cfg.parallel)
  for (long i = 0; i < count; ++i) {
    std::optional<std::string> bad;
    try {
      RandomSource rng({cfg.seed, salt, static_cast<std::uint64_t>(i)});
      bad = check(i, rng);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      ++failures;
#pragma omp critical(szego_sweep_first)
      if (i < first) {
        first = i;
        first_msg = "case " + std::to_string(i) + ": " + *bad;
      }
    }
  }
  res.failures = failures;
  res.first_failure = std::move(first_msg);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

FactorMultiset RandomMultiset::expected() const { return FactorMultiset::from_values(reals, pairs, infinity, scalar); }

RandomMultiset random_multiset(RandomSource& rng, int n, Mode mode, bool allow_infinity) {
  RandomMultiset m;
  m.n = n;
  int left = n - 1;
  while (left > 0) {
    const int roll = rng.uniform(0, 99);
    if (roll < 10) {
      m.reals.emplace_back(0);
    } else if (roll < 30) {
      const int j = mode == Mode::polynomial ? rng.uniform(1, n - 1) : rng.uniform(1, 9);
      m.reals.push_back(special_value(j, n, mode));
    } else if (roll < 50) {
      if (left >= 2) {
        m.pairs.emplace_back(rng.rational(), abs(rng.nonzero_rational()));
        --left;
      } else {
        m.reals.push_back(rng.nonzero_rational());
      }
    } else if (roll < 55 && allow_infinity && mode == Mode::polynomial) {
      ++m.infinity;
    } else {
      m.reals.push_back(rng.nonzero_rational());
    }
    --left;
  }
  if (rng.chance(30)) m.scalar = rng.nonzero_rational();
  return m;
}

RatPoly compose_literally(const RandomMultiset& m, Mode mode) {
  if (mode == Mode::polynomial) {
    std::vector<GaussTaggedPoly> fs{{to_gauss(x_plus_one_pow(static_cast<unsigned>(m.n))), m.n}};
    for (const auto& a : m.reals) fs.push_back(factor_K(GaussRational(a), m.n));
    for (const auto& z : m.pairs) {
      fs.push_back(factor_K(z, m.n));
      fs.push_back(factor_K(z.conj(), m.n));
    }
    for (int i = 0; i < m.infinity; ++i) fs.push_back({to_gauss(factor_K_infinity(m.n).poly), m.n});
    GaussRatPoly p = schur_szego_multi(fs);
    if (!imag_part(p).is_zero()) throw DomainError("literal composition left an imaginary part");
    return real_part(p) * m.scalar;
  }
  GaussExpForm y{GaussRatPoly::constant(GaussRational(m.scalar))};
  const GaussRational one(1L);
  for (const auto& a : m.reals) y = exp_apply_factor(one, GaussRational(a), y);
  for (const auto& z : m.pairs) {
    y = exp_apply_factor(one, z, y);
    y = exp_apply_factor(one, z.conj(), y);
  }
  if (!imag_part(y.y).is_zero()) throw DomainError("literal composition left an imaginary part");
  return real_part(y.y);
}

namespace {

template <class F>
LawResult timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  LawResult r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const RatPoly kX = RatPoly::monomial(Rational(1), 1);

std::string mode_tag(Mode mode) { return mode == Mode::polynomial ? "polynomial" : "exponential"; }

RatPoly random_poly_upto(RandomSource& rng, int n) { return rng.poly(rng.uniform(0, n)); }

RatPoly random_poly_nonzero_ends(RandomSource& rng, int n) {
  RatPoly p = rng.poly(n);
  if (is_zero(p.coeff(0))) p += RatPoly::constant(rng.nonzero_rational());
  return p;
}

std::vector<Rational> shifted(const std::vector<Rational>& v) { return {v.begin() + 1, v.end()}; }

std::optional<std::string> diffpol_check(RandomSource& rng) {
  const int n = rng.uniform(2, 10);
  RatPoly a = rng.poly(n);
  RatPoly b = rng.poly(n);
  RatPoly lhs = schur_szego({a, n}, {b, n}).derivative();
  RatPoly rhs = schur_szego({a.derivative(), n - 1}, {b.derivative(), n - 1}) * Rational(1, n);
  if (lhs != rhs) return "derivative of a composition, n=" + std::to_string(n);
  RatPoly s = rng.poly(n - 1);
  RatPoly lhs2 = schur_szego({s.shift_up(), n}, {b, n});
  RatPoly rhs2 = schur_szego({s, n - 1}, {b.derivative(), n - 1}).shift_up() * Rational(1, n);
  if (lhs2 != rhs2) return "x S composed with B, n=" + std::to_string(n);
  return std::nullopt;
}

std::optional<std::string> diffef_check(RandomSource& rng) {
  constexpr int N = 25;
  ExpForm f{random_poly_upto(rng, 5)};
  ExpForm g{random_poly_upto(rng, 5)};
  ExpForm df{f.y + f.y.derivative()};
  ExpForm dg{g.y + g.y.derivative()};
  auto fg = exp_truncated_compose(exp_series(f, N + 1), exp_series(g, N + 1), N + 1);
  if (shifted(fg) != exp_truncated_compose(exp_series(df, N), exp_series(dg, N), N)) {
    return std::string("derivative of an exponential composition");
  }
  ExpForm xf{f.y.shift_up()};
  auto lhs = exp_truncated_compose(exp_series(xf, N), exp_series(g, N), N);
  auto h = exp_truncated_compose(exp_series(f, N), exp_series(dg, N), N);
  std::vector<Rational> rhs(static_cast<std::size_t>(N) + 1);
  for (int j = 1; j <= N; ++j) rhs[static_cast<std::size_t>(j)] = j * h[static_cast<std::size_t>(j - 1)];
  if (lhs != rhs) return std::string("x f composed with g");
  const Rational alpha = rng.rational();
  const Rational beta = rng.rational();
  if (!is_zero(alpha) || !is_zero(beta)) {
    ExpForm applied = exp_apply_factor(alpha, beta, g);
    ExpForm factor{RatPoly({beta, alpha})};
    if (exp_series(applied, N) != exp_truncated_compose(exp_series(factor, N), exp_series(g, N), N)) {
      return std::string("factor application disagrees with series composition");
    }
  }
  return std::nullopt;
}

std::optional<std::string> revert_check(RandomSource& rng) {
  const int n = rng.uniform(2, 10);
  std::vector<DegreeTaggedPoly> ks;
  std::vector<DegreeTaggedPoly> inverse;
  Rational prod(1);
  for (int i = 0; i < n - 1; ++i) {
    Rational a = rng.nonzero_rational();
    ks.push_back(factor_K(a, n));
    inverse.push_back(factor_K(Rational(1) / a, n));
    prod *= a;
  }
  RatPoly p = schur_szego_multi(ks);
  if (revert({p, n}).poly != schur_szego_multi(inverse) * prod) return "reverted composition of factors, n=" + std::to_string(n);

  RatPoly a = random_poly_nonzero_ends(rng, n);
  RatPoly b = random_poly_nonzero_ends(rng, n);
  DegreeTaggedPoly ab{schur_szego({a, n}, {b, n}), n};
  if (revert(ab).poly != schur_szego(revert({a, n}), revert({b, n}))) return "reversal does not commute, n=" + std::to_string(n);

  const DegreeTaggedPoly kinf = factor_K_infinity(n);
  const Rational nn(n);
  RatPoly once = a - a.derivative().shift_up() * (Rational(1) / nn);
  if (schur_szego(kinf, {a, n}) != once) return "K_infinity composition, n=" + std::to_string(n);
  RatPoly twice = a - a.derivative().shift_up() * (Rational(2) / nn) +
                  a.derivative().derivative().shift_up(2) * (Rational(1) / (nn * (nn - 1)));
  if (schur_szego({x_plus_one_pow(static_cast<unsigned>(n - 2)), n}, {a, n}) != twice) {
    return "(x+1)^(n-2) composition, n=" + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<std::string> mult_check(RandomSource& rng, long* equal) {
  const int n = rng.uniform(2, 10);
  const int ma = rng.uniform(1, n);
  const int mb = rng.uniform(std::max(1, n + 1 - ma), n);
  const Rational xa = rng.nonzero_rational();
  const Rational xb = rng.nonzero_rational();
  RatPoly a = pow(RatPoly::linear_root(xa), static_cast<unsigned>(ma)) * rng.poly(n - ma);
  RatPoly b = pow(RatPoly::linear_root(xb), static_cast<unsigned>(mb)) * rng.poly(n - mb);
  RatPoly c = schur_szego({a, n}, {b, n});
  if (c.is_zero()) return std::nullopt;
  const int got = root_multiplicity(c, -xa * xb);
  const int bound = ma + mb - n;
  if (got < bound) {
    return "multiplicity " + std::to_string(got) + " below " + std::to_string(bound) + ", n=" + std::to_string(n);
  }
  if (got == bound && equal != nullptr) {
#pragma omp atomic
    ++*equal;
  }
  return std::nullopt;
}

std::optional<std::string> cork_check(RandomSource& rng) {
  const int n = rng.uniform(2, 30);
  const Rational a = rng.rational(60, 7);
  const int changes = sign_changes(factor_K(a, n).poly);
  if (changes > 1) return std::to_string(changes) + " sign changes for a=" + to_string(a);
  return std::nullopt;
}

// Nonzero filler values that avoid every special value for this n.
Rational filler(RandomSource& rng, int n, Mode mode) {
  for (;;) {
    Rational v = rng.nonzero_rational();
    bool special = false;
    for (int j = 0; j < (mode == Mode::polynomial ? n : n + 10); ++j) special = special || v == special_value(j, n, mode);
    if (!special) return v;
  }
}

int zero_multiplicity(const RatPoly& p) {
  int k = 0;
  while (k <= p.degree() && is_zero(p.coeff(k))) ++k;
  return k;
}

}  // namespace

LawResult law_identity(const LawConfig& cfg) {
  const long per_n = cfg.count(500);
  return sweep("identity (x+1)^n * A = A, n in [2,12]", per_n * 11, cfg, 1,
               [per_n](long i, RandomSource& rng) -> std::optional<std::string> {
                 const int n = 2 + static_cast<int>(i / per_n);
                 RatPoly a = random_poly_upto(rng, n);
                 if (a.is_zero()) a = RatPoly::constant(Rational(1));
                 DegreeTaggedPoly unit{x_plus_one_pow(static_cast<unsigned>(n)), n};
                 if (schur_szego(unit, {a, n}) != a || schur_szego({a, n}, unit) != a) {
                   return "n=" + std::to_string(n) + " A=" + to_string(a);
                 }
                 return std::nullopt;
               });
}

LawResult law_roundtrip(const LawConfig& cfg, Mode mode) {
  return sweep("round trip compose/decompose (" + mode_tag(mode) + ")", cfg.count(1000), cfg, 2 + static_cast<int>(mode),
               [mode](long, RandomSource& rng) -> std::optional<std::string> {
                 const int n = mode == Mode::polynomial ? rng.uniform(2, 10) : rng.uniform(1, 10);
                 RandomMultiset m = random_multiset(rng, n, mode, true);
                 RatPoly obj = compose_literally(m, mode);
                 FactorMultiset got = mode == Mode::polynomial ? decompose_poly(obj, n) : decompose_exp(obj);
                 if (!got.same_as(m.expected())) return "n=" + std::to_string(n) + " object " + to_string(obj);
                 return std::nullopt;
               });
}

std::vector<LawResult> law_formula_suite(const LawConfig& cfg) {
  std::vector<LawResult> out;
  out.push_back(sweep("composition derivative formulas (polynomial)", cfg.count(300), cfg, 10,
                      [](long, RandomSource& rng) { return diffpol_check(rng); }));
  out.push_back(sweep("composition derivative formulas (exponential, N=25)", cfg.count(300), cfg, 11,
                      [](long, RandomSource& rng) { return diffef_check(rng); }));
  out.push_back(sweep("reversion identities", cfg.count(300), cfg, 12,
                      [](long, RandomSource& rng) { return revert_check(rng); }));
  long equal = 0;
  LawResult mult = sweep("root multiplicity lower bound", cfg.count(1000), cfg, 13,
                         [&equal](long, RandomSource& rng) { return mult_check(rng, &equal); });
  mult.note = std::to_string(equal) + " cases attain the bound exactly";
  out.push_back(mult);
  out.push_back(sweep("K_a sign changes <= 1, n <= 30", cfg.count(1000), cfg, 14,
                      [](long, RandomSource& rng) { return cork_check(rng); }));
  return out;
}

LawResult law_zero_multiplicity(const LawConfig& cfg, Mode mode) {
  struct Job {
    int n;
    int k;  // designated prefix length, or -1 for a random subset
  };
  std::vector<Job> jobs;
  const long reps = cfg.count(20);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (long r = 0; r < reps; ++r) jobs.push_back({n, k});
    }
    for (long r = 0; r < reps * n; ++r) jobs.push_back({n, -1});
  }
  return sweep("zero-root multiplicity vs special factors (" + mode_tag(mode) + ")", static_cast<long>(jobs.size()), cfg,
               20 + static_cast<int>(mode), [&jobs, mode](long i, RandomSource& rng) -> std::optional<std::string> {
                 const Job job = jobs[static_cast<std::size_t>(i)];
                 const int n = job.n;
                 const int slots = n - 1;
                 std::vector<int> chosen;
                 if (job.k >= 0) {
                   for (int j = 0; j < job.k; ++j) chosen.push_back(j);
                 } else {
                   for (int j = 0; j < n && static_cast<int>(chosen.size()) < slots; ++j) {
                     if (rng.chance(60)) chosen.push_back(j);
                   }
                 }
                 RandomMultiset m;
                 m.n = n;
                 for (int j : chosen) m.reals.push_back(special_value(j, n, mode));
                 int left = slots - static_cast<int>(chosen.size());
                 while (left > 0) {
                   if (left >= 2 && rng.chance(25)) {
                     m.pairs.emplace_back(rng.rational(), abs(rng.nonzero_rational()));
                     left -= 2;
                   } else {
                     m.reals.push_back(filler(rng, n, mode));
                     --left;
                   }
                 }
                 int first_missing = 0;
                 while (std::find(chosen.begin(), chosen.end(), first_missing) != chosen.end()) ++first_missing;
                 RatPoly obj = compose_literally(m, mode);
                 const int mult = zero_multiplicity(obj);
                 const std::string where = "n=" + std::to_string(n) + " object " + to_string(obj);
                 if (mult != first_missing) {
                   return "zero multiplicity " + std::to_string(mult) + ", expected " + std::to_string(first_missing) + ", " + where;
                 }
                 FactorMultiset f = mode == Mode::polynomial ? decompose_poly(obj, n) : decompose_exp(obj);
                 for (int j = 0; j < mult; ++j) {
                   if (!is_zero(f.a_poly(special_value(j, n, mode)))) return "special factor " + std::to_string(j) + " not recovered, " + where;
                 }
                 if ((mode == Mode::exponential || mult < n) && is_zero(f.a_poly(special_value(mult, n, mode)))) {
                   return "special factor " + std::to_string(mult) + " present beyond the zero multiplicity, " + where;
                 }
                 return std::nullopt;
               });
}

LawResult law_necessary(const LawConfig& cfg, Mode mode) {
  return sweep("necessary conditions on composed instances (" + mode_tag(mode) + ")", cfg.count(10000), cfg,
               30 + static_cast<int>(mode), [mode](long, RandomSource& rng) -> std::optional<std::string> {
                 const int n = mode == Mode::polynomial ? rng.uniform(2, 10) : rng.uniform(1, 10);
                 RandomMultiset m = random_multiset(rng, n, mode, false);
                 RatPoly obj = compose_literally(m, mode);
                 Analysis an = analyze(obj, n, mode);
                 NecessaryReport rep = check_necessary(an.sig, an.factors, n, mode);
                 if (rep.pass) return std::nullopt;
                 const Violation& v = rep.violations.front();
                 return "clause " + v.clause + " (" + v.detail + "), n=" + std::to_string(n) + " object " + to_string(obj);
               });
}

LawResult law_base_structure(const LawConfig& cfg, Mode mode) {
  struct Job {
    int n, l, mu;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= 10; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int mu = 0; l + mu <= n; ++mu) {
        if (mode == Mode::polynomial || n == 10) jobs.push_back({n, l, mu});
      }
    }
  }
  return sweep("base composition root structure (" + mode_tag(mode) + ")", static_cast<long>(jobs.size()), cfg,
               40 + static_cast<int>(mode), [&jobs, mode](long i, RandomSource&) -> std::optional<std::string> {
                 const Job j = jobs[static_cast<std::size_t>(i)];
                 const std::string where =
                     "l=" + std::to_string(j.l) + " mu=" + std::to_string(j.mu) + " n=" + std::to_string(j.n);
                 if (mode == Mode::polynomial) {
                   RatPoly base = base_composition_pol(j.l, j.mu, j.n);
                   std::vector<DegreeTaggedPoly> fs(static_cast<std::size_t>(j.l), factor_K(Rational(0), j.n));
                   for (int b = 1; b <= j.mu; ++b) fs.push_back(factor_K(special_value(b, j.n, mode), j.n));
                   if (monic(schur_szego_multi(fs)) != base) return "differs from the literal composition, " + where;
                 } else {
                   ExpForm base = base_composition_exp(j.l, j.mu);
                   ExpForm lit{RatPoly::constant(Rational(1))};
                   for (int b = 0; b <= j.mu; ++b) lit = exp_apply_factor(Rational(1), -Rational(b), lit);
                   for (int t = 1; t < j.l; ++t) lit = exp_apply_factor(Rational(1), Rational(0), lit);
                   if (lit != base) return "differs from the literal composition, " + where;
                 }
                 return std::nullopt;
               });
}

LawResult law_couple_closed_forms(const LawConfig& cfg, Mode mode) {
  const long per_n = cfg.count(100);
  const long count = mode == Mode::polynomial ? per_n * 7 : per_n;
  return sweep("couple closed form vs direct composition (" + mode_tag(mode) + ")", count, cfg, 50 + static_cast<int>(mode),
               [per_n, mode](long i, RandomSource& rng) -> std::optional<std::string> {
                 const int n = 2 + static_cast<int>(i / per_n);
                 const Rational v = (rng.unit() + Rational(1, 1 << 20)) / 2;
                 const Rational u = (rng.unit() + Rational(1, 1 << 20)) * v / 2 * Rational((1 << 20) - 1, 1 << 20);
                 const GaussRational eps(u, v);
                 if (mode == Mode::polynomial) {
                   RatPoly closed = couple_factor_pol(eps, n);
                   const GaussRational one(1L);
                   GaussRatPoly direct = schur_szego(factor_K(one + eps, n), factor_K(one + eps.conj(), n));
                   if (to_gauss(closed) != direct) return "n=" + std::to_string(n) + " eps=" + to_string(eps);
                 } else {
                   RatPoly closed = couple_factor_exp(eps);
                   std::vector<Rational> series = exp_series(ExpForm{closed}, 25);
                   for (int j = 0; j <= 25; ++j) {
                     Rational want = 1 + 2 * eps.re * j + eps.norm() * j * j;
                     if (series[static_cast<std::size_t>(j)] != want) return "eps=" + to_string(eps);
                   }
                 }
                 return std::nullopt;
               });
}

LawResult law_couple_schedule(const LawConfig& cfg, Mode mode) {
  SearchConfig defaults;
  const int rounds = defaults.rounds;
  const int ordinals = 4;
  const int samples = 3;
  const long count = static_cast<long>(rounds) * ordinals * samples * (mode == Mode::polynomial ? 7 : 1);
  return sweep("couple discriminant over the emitted schedule (" + mode_tag(mode) + ")", count, cfg,
               60 + static_cast<int>(mode), [=](long i, RandomSource& rng) -> std::optional<std::string> {
                 long rest = i;
                 const int round = static_cast<int>(rest % rounds);
                 rest /= rounds;
                 const int ordinal = static_cast<int>(rest % ordinals);
                 rest /= ordinals;
                 const int sample = static_cast<int>(rest % samples);
                 const int n = 2 + static_cast<int>(rest / samples);
                 const Rational u = sample == 0 ? Rational(0) : sample == 1 ? Rational(1) - Rational(1, 1 << 20) : rng.unit();
                 Rational s(1, 8);
                 for (int r = 0; r < round; ++r) s /= 2;
                 const GaussRational eps = couple_epsilon(s, ordinal, u);
                 RatPoly quad;
                 if (mode == Mode::polynomial) {
                   RatPoly v = couple_factor_pol(eps, n);
                   quad = exact_div(v, x_plus_one_pow(static_cast<unsigned>(n - 2)));
                 } else {
                   quad = couple_factor_exp(eps);
                 }
                 const Rational disc = quad.coeff(1) * quad.coeff(1) - 4 * quad.coeff(0) * quad.coeff(2);
                 if (quad.degree() != 2 || sign(disc) >= 0) return "round " + std::to_string(round) + " eps=" + to_string(eps);
                 return std::nullopt;
               });
}

LawResult law_realize_all(const LawConfig& cfg, int n_max, Mode mode) {
  return timed([&] {
    LawResult res;
    res.name = "realize_all n <= " + std::to_string(n_max) + " (" + mode_tag(mode) + ")";
    SearchConfig sc;
    sc.seed = cfg.seed;
    sc.parallel = cfg.parallel;
    int unsupported_specs = 0;
    int fallback = 0;
    for (int n = 2; n <= n_max; ++n) {
      RealizeSummary sum = realize_all(n, mode, sc);
      fallback += sum.fallback_realized;
      for (const auto& o : sum.outcomes) {
        if (o.spec.construction_unsupported) {
          ++unsupported_specs;
          continue;
        }
        ++res.cases;
        std::string bad;
        if (o.status != RealizeStatus::realized || !o.certificate) {
          bad = to_string(o.status) + ": " + o.message;
        } else {
          VerifyResult v = reverify(*o.certificate);
          if (!v.pass) bad = "re-verification failed: " + v.problems.front();
        }
        if (!bad.empty()) {
          if (res.failures++ == 0) res.first_failure = o.spec.label() + ": " + bad;
        }
      }
    }
    res.note = std::to_string(unsupported_specs) + " odd-delta specs outside the supported set (" +
               std::to_string(fallback) + " realized by fallback search)";
    return res;
  });
}

LawResult law_phi(const LawConfig& cfg, int n_max, Mode mode) {
  return timed([&] {
    LawResult res;
    res.name = "affine map and rational positive spectrum, n <= " + std::to_string(n_max) + " (" + mode_tag(mode) + ")";
    const int samples = static_cast<int>(cfg.count(100));
    for (const PhiRow& row : phi_report(n_max, mode, samples, cfg.seed, cfg.parallel)) {
      res.cases += 1 + row.affinity_samples;
      std::string bad;
      if (row.affinity_mismatches > 0) bad = std::to_string(row.affinity_mismatches) + " affinity mismatches";
      else if (!row.all_rational()) bad = "irrational eigenvalue";
      else if (!row.all_positive()) bad = "nonpositive eigenvalue";
      else if (!row.invertible()) bad = "singular linear part";
      if (!bad.empty()) {
        res.failures += std::max(1, row.affinity_mismatches);
        if (res.first_failure.empty()) res.first_failure = "n=" + std::to_string(row.n) + ": " + bad;
      }
    }
    return res;
  });
}

}  // namespace szego
