#include "szego/realization.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <random>

namespace szego {

namespace {

const RatPoly kX = RatPoly::monomial(Rational(1), 1);
const RatPoly kXPlusOne = RatPoly({Rational(1), Rational(1)});

int roots_in_open_unit_left(const RatPoly& u) {
  // distinct roots in (-1, 0)
  return sturm_count(u, Bound(-1L), Bound(0L)) - (is_zero(u.coeff(0)) ? 1 : 0);
}

}  // namespace

RatPoly base_composition_pol(int l, int mu, int n) {
  if (l < 1 || mu < 0 || l + mu > n) throw DomainError("base composition needs l >= 1, mu >= 0, l + mu <= n");
  RatPoly u = pow(kX, static_cast<unsigned>(mu + 1)) * x_plus_one_pow(static_cast<unsigned>(n - mu - 1));
  const Rational inv_n = Rational(1) / n;
  for (int i = 1; i < l; ++i) u = u.derivative().shift_up() * inv_n;
  const int inner = l - 1;
  bool ok = root_multiplicity(u, Rational(0)) == mu + 1 && root_multiplicity(u, Rational(-1)) == n - mu - l &&
            roots_in_open_unit_left(u) == inner &&
            count_roots_with_multiplicity(u, Bound(-1L), Bound(0L)) - (mu + 1) == inner;
  if (!ok) throw DomainError("base composition root structure check failed");
  return u;
}

ExpForm base_composition_exp(int l, int mu) {
  if (l < 1 || mu < 0) throw DomainError("base composition needs l >= 1, mu >= 0");
  ExpForm y{pow(kX, static_cast<unsigned>(mu + 1))};
  for (int i = 1; i < l; ++i) y = exp_apply_factor(Rational(1), Rational(0), y);
  const int neg_distinct = sturm_count(y.y, Bound::neg_inf(), Bound(0L)) - 1;
  const int neg_total = count_roots_with_multiplicity(y.y, Bound::neg_inf(), Bound(0L)) - (mu + 1);
  bool ok = root_multiplicity(y.y, Rational(0)) == mu + 1 && neg_distinct == l - 1 && neg_total == l - 1 &&
            y.y.degree() == mu + l;
  if (!ok) throw DomainError("base composition root structure check failed");
  return y;
}

RatPoly couple_factor_pol(const GaussRational& eps, int n) {
  if (n < 2) throw DomainError("couple factor needs n >= 2");
  if (!(sign(eps.re) > 0 && 2 * eps.re < eps.im)) throw DomainError("eps outside the sector 0 < 2u < v");
  const GaussRational one(1L);
  GaussRatPoly v = schur_szego(factor_K(one + eps, n), factor_K(one + eps.conj(), n));
  if (!imag_part(v).is_zero()) throw DomainError("internal: conjugate couple has nonreal coefficients");
  const Rational nn(n);
  const Rational norm = eps.norm();
  const Rational b = 2 * eps.re + norm / nn;
  const Rational c = (nn - 1) * norm / nn;
  RatPoly closed = x_plus_one_pow(static_cast<unsigned>(n - 2)) *
                   (kXPlusOne * kXPlusOne + kXPlusOne * b + RatPoly::constant(c));
  if (real_part(v) != closed) throw DomainError("internal: couple factor differs from its closed form");
  if (sign(b * b - 4 * c) >= 0) throw DomainError("couple factor discriminant is not negative");
  return closed;
}

RatPoly couple_factor_exp(const GaussRational& eps) {
  if (eps.is_real()) throw DomainError("eps must be nonreal");
  const Rational norm = eps.norm();
  const Rational b = 2 * eps.re + norm;
  RatPoly v({Rational(1), b, norm});
  GaussExpForm start{GaussRatPoly({GaussRational(1L), eps.conj()})};
  GaussExpForm composed = exp_apply_factor(eps, GaussRational(1L), start);
  if (!imag_part(composed.y).is_zero() || real_part(composed.y) != v) {
    throw DomainError("internal: exponential couple differs from its closed form");
  }
  if (sign(b * b - 4 * norm) >= 0) throw DomainError("couple factor discriminant is not negative");
  return v;
}

GaussRational couple_epsilon(const Rational& s, int i, const Rational& u) {
  const Rational scale = power(s, static_cast<unsigned>(i + 1));
  return {scale * (Rational(1, 8) + u / 4), scale};
}

std::string to_string(SlotKind kind) {
  switch (kind) {
    case SlotKind::keep_zero: return "keep-zero";
    case SlotKind::b_fixed: return "b-fixed";
    case SlotKind::positive: return "positive-perturb";
    case SlotKind::complex_pair: return "complex-perturb";
    case SlotKind::couple: return "sector-couple";
    case SlotKind::b_shift: return "b-shift";
  }
  return "?";
}

int PerturbationPlan::slot_count() const {
  int c = 0;
  for (const auto& s : slots) c += (s.kind == SlotKind::complex_pair || s.kind == SlotKind::couple) ? 2 : 1;
  return c;
}

std::string to_string(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::realized: return "realized";
    case RealizeStatus::failed: return "failed";
    case RealizeStatus::unsupported: return "unsupported";
  }
  return "?";
}

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, int round, int index, unsigned salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(round), static_cast<std::uint32_t>(index), salt};
    gen_.seed(seq);
  }
  /// Uniform on the grid {0, 1/2^20, ..., 1 - 1/2^20}.
  Rational unit() {
    Rational u(Integer(static_cast<unsigned long>(gen_() >> 44U)), Integer(1UL << 20U));
    u.canonicalize();
    return u;
  }

 private:
  std::mt19937_64 gen_;
};

RatPoly linear_factor(const Rational& a) { return RatPoly({a, Rational(1)}); }
RatPoly pair_factor(const GaussRational& a) { return RatPoly({a.norm(), 2 * a.re, Rational(1)}); }

RatPoly object_of(const RatPoly& core, int n, Mode mode) {
  return mode == Mode::polynomial ? compose_from_factor_poly(core, n) : exp_from_factor_poly(core);
}

std::pair<int, int> base_parameters(const CaseSpec& c) {
  const int f = c.m + c.r;
  const int near_zero = c.q1 + (c.qC - c.delta);
  if (c.k >= 1) return {c.q + near_zero, c.k - 1 + f};
  return {near_zero + (f >= 1 ? 1 : 0), std::max(f - 1, 0)};
}

struct Attempt {
  std::optional<RealizationCertificate> cert;
  std::string why;
  int badness = std::numeric_limits<int>::max();
};

Attempt reject(std::string why, int badness) {
  Attempt a;
  a.why = std::move(why);
  a.badness = badness;
  return a;
}

Rational magnitude_for(int round) {
  Rational s(1, 8);
  for (int i = 0; i < round; ++i) s /= 2;
  return s;
}

// Each conjugate couple must add one complex pair and leave the other
// counts alone (polynomial mode: two roots leave -1).
bool couple_steps_hold(const RatPoly& rest, const std::vector<RatPoly>& couples, int delta, int n, Mode mode) {
  RatPoly core = rest;
  if (mode == Mode::polynomial) core = core * pow(kXPlusOne, static_cast<unsigned>(delta));
  RatPoly prev = object_of(core, n, mode);
  RootSignature prev_sig = classify_roots(prev);
  int prev_minus_one = root_multiplicity(prev, Rational(-1));
  for (std::size_t i = 0; i < couples.size(); ++i) {
    core = rest * couples[0];
    for (std::size_t j = 1; j <= i; ++j) core = core * couples[j];
    if (mode == Mode::polynomial) {
      core = core * pow(kXPlusOne, static_cast<unsigned>(delta - 2 * static_cast<int>(i + 1)));
    }
    RatPoly cur = object_of(core, n, mode);
    RootSignature sig = classify_roots(cur);
    const int drop = mode == Mode::polynomial ? 2 : 0;
    const int minus_one = root_multiplicity(cur, Rational(-1));
    if (sig.pos != prev_sig.pos || sig.zero != prev_sig.zero || sig.neg != prev_sig.neg - drop ||
        sig.complex_pairs != prev_sig.complex_pairs + 1 ||
        (mode == Mode::polynomial && minus_one != prev_minus_one - 2)) {
      return false;
    }
    prev_sig = sig;
    prev_minus_one = minus_one;
  }
  return true;
}

Attempt finish(const CaseSpec& spec, Mode mode, const RatPoly& object, PerturbationPlan plan, int round, int index,
               const SearchConfig& cfg, bool fallback) {
  VerifyResult v = verify_realization(object, spec, spec.n, mode);
  if (!v.pass) {
    std::string why;
    for (const auto& p : v.problems) why += (why.empty() ? "" : "; ") + p;
    return reject(why, static_cast<int>(v.problems.size()));
  }
  RealizationCertificate cert;
  cert.spec = spec;
  cert.mode = mode;
  cert.n = spec.n;
  cert.object = object;
  cert.factors = std::move(v.analysis.factors);
  cert.signature = v.analysis.sig;
  cert.plan = std::move(plan);
  cert.trace.round = round;
  cert.trace.index = index;
  cert.trace.candidates = static_cast<long>(round) * cfg.resamples + index + 1;
  cert.trace.magnitude = cert.plan.magnitude;
  cert.trace.fallback = fallback;
  Attempt a;
  a.cert = std::move(cert);
  a.badness = 0;
  return a;
}

Attempt construct(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, int round, int index) {
  const int n = spec.n;
  Sampler rng(cfg.seed, round, index, 0x5eedU);
  PerturbationPlan plan;
  std::tie(plan.base_l, plan.base_mu) = base_parameters(spec);
  plan.magnitude = magnitude_for(round);
  plan.seed = cfg.seed;
  const Rational& s = plan.magnitude;

  RatPoly rest{Rational(1)};
  std::vector<RatPoly> couples;
  for (int i = 0; i < spec.q; ++i) {
    plan.slots.push_back({SlotKind::keep_zero, i, GaussRational(0L)});
    rest = rest * kX;
  }
  for (int j = 1; j <= spec.k - 1; ++j) {
    Rational b = special_value(j, n, mode);
    plan.slots.push_back({SlotKind::b_fixed, j, b});
    rest = rest * linear_factor(b);
  }
  for (int i = 0; i < spec.q1; ++i) {
    Rational g = s * (i + 1 + rng.unit() / 2);
    plan.slots.push_back({SlotKind::positive, i, g});
    rest = rest * linear_factor(g);
  }
  for (int i = 0; i < (spec.qC - spec.delta) / 2; ++i) {
    GaussRational h(s * (2 * rng.unit() - 1), s * (i + 1 + rng.unit() / 2));
    plan.slots.push_back({SlotKind::complex_pair, i, h});
    rest = rest * pair_factor(h);
  }
  for (int i = 0; i < spec.delta / 2; ++i) {
    GaussRational eps = couple_epsilon(s, i, rng.unit());
    try {
      if (mode == Mode::polynomial) couple_factor_pol(eps, n);
      else couple_factor_exp(eps);
    } catch (const DomainError& e) {
      return reject(std::string("couple rejected: ") + e.what(), 100);
    }
    if (mode == Mode::polynomial) {
      GaussRational a = GaussRational(1L) + eps;
      plan.slots.push_back({SlotKind::couple, i, a});
      couples.push_back(pair_factor(a));
    } else {
      plan.slots.push_back({SlotKind::couple, i, GaussRational(1L) / eps});
      couples.push_back(RatPoly({Rational(1), 2 * eps.re, eps.norm()}));
    }
  }

  const int f = spec.m + spec.r;
  const int j0 = spec.k >= 1 ? spec.k : 0;
  for (int j = j0; j < j0 + f; ++j) plan.slots.push_back({SlotKind::b_shift, j, special_value(j, n, mode)});

  // Without a forced zero root the constant coefficient carries the product
  // of the small fixed slots, so the cluster must sit on a finer scale.
  const int fine = spec.k == 0 ? spec.q1 + spec.qC - spec.delta : 0;
  const Rational st = power(s, static_cast<unsigned>(1 + fine));
  RatPoly target{Rational(1)};
  for (int i = 0; i < spec.m; ++i) target = target * RatPoly::linear_root(st * (i + 1 + rng.unit() / 2));
  for (int i = 0; i < spec.k1; ++i) target = target * RatPoly::linear_root(-st * (i + 1 + rng.unit() / 2));
  for (int i = 0; i < (spec.kC - spec.delta) / 2; ++i) {
    GaussRational z(st * (2 * rng.unit() - 1), st * (i + 1 + rng.unit() / 2));
    target = target * RatPoly({z.norm(), -2 * z.re, Rational(1)});
  }
  if (target.degree() != f) return reject("internal: target degree differs from the free slot count", 1000);
  plan.target = target;

  RatPoly fixed = rest;
  for (const auto& c : couples) fixed = fixed * c;

  RatPoly free_factor = RatPoly::monomial(Rational(1), f);
  if (f > 0) {
    std::vector<RatPoly> residues;
    residues.reserve(static_cast<std::size_t>(f) + 1);
    for (int i = 0; i <= f; ++i) {
      RatPoly obj = object_of(fixed * RatPoly::monomial(Rational(1), i), n, mode);
      for (int j = 0; j < spec.k; ++j) {
        if (!is_zero(obj.coeff(j))) return reject("internal: fixed slots do not force the zero root", 1000);
      }
      std::vector<Rational> upper(obj.coeffs().begin() + std::min<std::ptrdiff_t>(spec.k, obj.size()),
                                  obj.coeffs().end());
      residues.push_back(RatPoly(std::move(upper)) % target);
    }
    Matrix a(static_cast<std::size_t>(f), static_cast<std::size_t>(f));
    std::vector<Rational> rhs(static_cast<std::size_t>(f));
    for (int row = 0; row < f; ++row) {
      for (int col = 0; col < f; ++col) a(row, col) = residues[static_cast<std::size_t>(col)].coeff(row);
      rhs[static_cast<std::size_t>(row)] = -residues[static_cast<std::size_t>(f)].coeff(row);
    }
    auto y = solve(a, rhs);
    if (!y) return reject("free slot system is singular", 100);
    std::vector<Rational> coeffs = *y;
    coeffs.emplace_back(1);
    free_factor = RatPoly(std::move(coeffs));
  }
  plan.free_factor = free_factor;

  if (spec.delta >= 2 && !couple_steps_hold(rest * free_factor, couples, spec.delta, n, mode)) {
    return reject("couple step changed more than one complex pair", 50);
  }
  RatPoly object = object_of(fixed * free_factor, n, mode);
  return finish(spec, mode, object, std::move(plan), round, index, cfg, false);
}

// Unguided sampling of the a_i with the prescribed sign classes.
Attempt construct_fallback(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, int round, int index) {
  const int n = spec.n;
  Sampler rng(cfg.seed, round, index, 0xfa11U);
  PerturbationPlan plan;
  plan.magnitude = magnitude_for(round % 8) * 8;
  plan.seed = cfg.seed;
  const Rational& s = plan.magnitude;
  RatPoly core{Rational(1)};
  for (int i = 0; i < spec.q; ++i) {
    plan.slots.push_back({SlotKind::keep_zero, i, GaussRational(0L)});
    core = core * kX;
  }
  for (int j = 1; j <= spec.k - 1; ++j) {
    Rational b = special_value(j, n, mode);
    plan.slots.push_back({SlotKind::b_fixed, j, b});
    core = core * linear_factor(b);
  }
  for (int i = 0; i < spec.q1; ++i) {
    Rational g = s * (i + rng.unit() + Rational(1, 16));
    plan.slots.push_back({SlotKind::positive, i, g});
    core = core * linear_factor(g);
  }
  for (int i = 0; i < spec.qC / 2; ++i) {
    GaussRational h(s * 4 * (rng.unit() - Rational(1, 2)), s * (i + rng.unit() + Rational(1, 16)));
    plan.slots.push_back({SlotKind::complex_pair, i, h});
    core = core * pair_factor(h);
  }
  for (int i = 0; i < spec.m + spec.r; ++i) {
    Rational a = -s * (i + rng.unit() + Rational(1, 16));
    plan.slots.push_back({SlotKind::b_shift, i, a});
    core = core * linear_factor(a);
  }
  return finish(spec, mode, object_of(core, n, mode), std::move(plan), round, index, cfg, true);
}

Attempt run_candidate(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, int round, int index, bool fallback) {
  try {
    return fallback ? construct_fallback(spec, mode, cfg, round, index) : construct(spec, mode, cfg, round, index);
  } catch (const DomainError& e) {
    return reject(std::string("candidate error: ") + e.what(), 200);
  }
}

void check_base(const CaseSpec& spec, Mode mode) {
  auto [l, mu] = base_parameters(spec);
  if (l < 1) return;
  if (mode == Mode::polynomial) base_composition_pol(l, mu, spec.n);
  else base_composition_exp(l, mu);
}

struct SearchResult {
  std::optional<RealizationCertificate> cert;
  SearchTrace trace;
};

SearchResult search(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, bool fallback) {
  SearchResult out;
  int best_badness = std::numeric_limits<int>::max();
  const int width = std::max(cfg.resamples, 1);
  for (int round = 0; round < cfg.rounds; ++round) {
    std::vector<Attempt> attempts(static_cast<std::size_t>(width));
    if (cfg.parallel) {
      int found = width;
#pragma omp parallel for schedule(dynamic)
      for (int idx = 0; idx < width; ++idx) {
        int current;
#pragma omp atomic read
        current = found;
        if (idx > current) continue;
        attempts[static_cast<std::size_t>(idx)] = run_candidate(spec, mode, cfg, round, idx, fallback);
        if (attempts[static_cast<std::size_t>(idx)].cert) {
#pragma omp critical(szego_found)
          found = std::min(found, idx);
        }
      }
    } else {
      for (int idx = 0; idx < width; ++idx) {
        attempts[static_cast<std::size_t>(idx)] = run_candidate(spec, mode, cfg, round, idx, fallback);
        if (attempts[static_cast<std::size_t>(idx)].cert) break;
      }
    }
    for (int idx = 0; idx < width; ++idx) {
      auto& a = attempts[static_cast<std::size_t>(idx)];
      if (a.cert) {
        out.cert = std::move(a.cert);
        out.trace = out.cert->trace;
        return out;
      }
      if (!a.why.empty() && a.badness < best_badness) {
        best_badness = a.badness;
        out.trace.best_failure = "round " + std::to_string(round) + " index " + std::to_string(idx) + ": " + a.why;
      }
    }
    out.trace.candidates += width;
  }
  out.trace.fallback = fallback;
  return out;
}

}  // namespace

std::optional<RealizationCertificate> try_candidate(const CaseSpec& spec, Mode mode, const SearchConfig& cfg, int round,
                                                    int index, std::string* why) {
  Attempt a = run_candidate(spec, mode, cfg, round, index, spec.construction_unsupported);
  if (why != nullptr) *why = a.why;
  return std::move(a.cert);
}

RealizationCertificate realize_case(const CaseSpec& spec, Mode mode, const SearchConfig& cfg) {
  spec.validate();
  if (cfg.rounds < 1 || cfg.resamples < 1) throw DomainError("search budget must be positive");
  if (spec.construction_unsupported) {
    SearchResult r = search(spec, mode, cfg, true);
    if (r.cert) return std::move(*r.cert);
    throw RealizationError("unsupported: odd delta spec not realized by fallback search (" + r.trace.best_failure + ")",
                           true, r.trace);
  }
  check_base(spec, mode);
  SearchResult r = search(spec, mode, cfg, false);
  if (r.cert) return std::move(*r.cert);
  throw RealizationError("search budget exhausted; best attempt " + r.trace.best_failure, false, r.trace);
}

VerifyResult reverify(const RealizationCertificate& cert) {
  return verify_realization(cert.object, cert.spec, cert.n, cert.mode);
}

RealizeSummary realize_all(int n, Mode mode, const SearchConfig& cfg) {
  RealizeSummary sum;
  sum.n = n;
  sum.mode = mode;
  const auto specs = enumerate_cases(n);
  sum.outcomes.resize(specs.size());
  auto one = [&](std::size_t i) {
    RealizeOutcome& o = sum.outcomes[i];
    o.spec = specs[i];
    try {
      o.certificate = realize_case(specs[i], mode, cfg);
      o.status = RealizeStatus::realized;
      o.candidates = o.certificate->trace.candidates;
    } catch (const RealizationError& e) {
      o.status = e.unsupported() ? RealizeStatus::unsupported : RealizeStatus::failed;
      o.message = e.what();
      o.candidates = e.trace().candidates;
    } catch (const DomainError& e) {
      o.status = RealizeStatus::failed;
      o.message = e.what();
    }
  };
  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < specs.size(); ++i) one(i);
  } else {
    for (std::size_t i = 0; i < specs.size(); ++i) one(i);
  }
  for (const auto& o : sum.outcomes) {
    switch (o.status) {
      case RealizeStatus::realized:
        ++sum.realized;
        if (o.certificate->trace.fallback) ++sum.fallback_realized;
        break;
      case RealizeStatus::failed: ++sum.failed; break;
      case RealizeStatus::unsupported: ++sum.unsupported; break;
    }
  }
  return sum;
}

}  // namespace szego
