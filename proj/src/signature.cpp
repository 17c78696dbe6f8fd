#include "szego/signature.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace szego {

RootSignature classify_roots(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no root signature");
  RootSignature sig;
  const Bound zero(0L);
  for (const auto& [f, mult] : squarefree_decompose(p)) {
    const bool at_zero = is_zero(f.coeff(0));
    const int neg = sturm_count(f, Bound::neg_inf(), zero) - (at_zero ? 1 : 0);
    const int pos = sturm_count(f, zero, Bound::pos_inf());
    sig.neg += mult * neg;
    sig.pos += mult * pos;
    if (at_zero) sig.zero += mult;
    sig.complex_pairs += mult * (f.degree() - neg - pos - (at_zero ? 1 : 0)) / 2;
    if (mult > 1 && f.degree() > (at_zero ? 1 : 0)) sig.distinct_nonzero = false;
  }
  return sig;
}

RootSignature classify_neg_a(const FactorMultiset& f) {
  RootSignature a;
  a.zero = f.zeros;
  for (const auto& r : f.rational) (sign(r) > 0 ? a.pos : a.neg) += 1;
  for (const auto& iv : f.algebraic) (iv.root_sign() > 0 ? a.pos : a.neg) += 1;
  a.complex_pairs = f.pair_count();
  RatPoly rest = f.a_poly;
  for (int i = 0; i < f.zeros; ++i) rest = exact_div(rest, RatPoly::monomial(Rational(1), 1));
  a.distinct_nonzero = rest.degree() < 1 || gcd(rest, rest.derivative()).degree() == 0;
  return a.mirrored();
}

Analysis analyze(const RatPoly& p, int n, Mode mode) {
  Analysis out;
  if (mode == Mode::polynomial) {
    out.factors = decompose_poly(p, n);
    out.sig.roots = classify_roots(exact_div(p, RatPoly({Rational(1), Rational(1)})));
  } else {
    out.factors = decompose_exp(p);
    out.sig.roots = classify_roots(p);
  }
  out.sig.neg_a = classify_neg_a(out.factors);
  return out;
}

SignVector8 signature_pair(const RatPoly& p, int n, Mode mode) { return analyze(p, n, mode).sig; }

Rational special_value(int j, int n, Mode mode) {
  if (mode == Mode::exponential) return Rational(-j);
  if (j < 0 || j >= n) throw DomainError("special value index out of range");
  Rational b(-j, n - j);
  b.canonicalize();
  return b;
}

NecessaryReport check_necessary(const SignVector8& sig, const FactorMultiset& factors, int n, Mode mode) {
  if (!classify_neg_a(factors).same_counts(sig.neg_a)) {
    throw DomainError("signature and factor multiset describe different objects");
  }
  NecessaryReport rep;
  auto fail = [&](std::string clause, long observed, long required, std::string detail) {
    rep.pass = false;
    rep.violations.push_back({std::move(clause), observed, required, std::move(detail)});
  };
  const int m = sig.roots.pos;
  const int k = sig.roots.zero;
  const RootSignature a = sig.a();
  const int q = a.zero;
  const int q1 = a.pos;
  const RatPoly& A = factors.a_poly;
  const bool zero_root = A.degree() >= 1 && is_zero(A.coeff(0));

  const int distinct_neg = A.degree() >= 1 ? sturm_count(A, Bound::neg_inf(), Bound(0L)) - (zero_root ? 1 : 0) : 0;
  const int need_1a = m + std::max(0, k - 1);
  if (distinct_neg < need_1a) fail("1a", distinct_neg, need_1a, "distinct negative a_i");

  if (k >= 1 && !zero_root) fail("1b", 0, 1, "a_i = 0 must be present");
  for (int j = 1; j <= k - 1; ++j) {
    Rational b = special_value(j, n, mode);
    if (!is_zero(A(b))) fail("1b", 0, 1, "a_i = " + to_string(b) + " must be present");
  }

  const int need_2a = q1 + std::max(0, q - 1);
  if (sig.roots.neg < need_2a) fail("2a", sig.roots.neg, need_2a, "negative roots with multiplicity");
  if (q >= 1 && sig.roots.zero < 1) fail("2b", sig.roots.zero, 1, "root at 0");

  if (mode == Mode::exponential || k <= n - 1) {
    Rational bk = special_value(k, n, mode);
    const int at = A.degree() >= 1 ? root_multiplicity(A, bk) : 0;
    if (at > 0) {
      fail("sign", at, 0, "a_i = " + to_string(bk) + " would cancel the lowest coefficient");
    } else {
      const int below = A.degree() >= 1 ? count_roots_with_multiplicity(A, Bound::neg_inf(), bk) : 0;
      if ((below - m) % 2 != 0) {
        fail("sign", below % 2, m % 2, "parity of real a_i below " + to_string(bk) + " against positive roots");
      }
    }
  }
  return rep;
}

SignVector8 CaseSpec::expected() const {
  SignVector8 v;
  v.roots.neg = std::max(q - 1, 0) + q1 + s;
  v.roots.zero = k;
  v.roots.pos = m;
  v.roots.complex_pairs = kC / 2;
  v.neg_a.neg = q1;
  v.neg_a.zero = q;
  v.neg_a.pos = std::max(k - 1, 0) + m + r;
  v.neg_a.complex_pairs = qC / 2;
  return v;
}

void CaseSpec::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid case spec: ") + what);
  };
  require(case_id >= 1 && case_id <= 4, "case id must be 1..4");
  require(n >= 2, "n >= 2");
  for (int v : {q, q1, qC, k, k1, kC, m, r, s, delta}) require(v >= 0, "parameters are nonnegative");
  if (case_id == 1 || case_id == 3) require(k >= 1 && q >= 1, "k >= 1 and q >= 1 in Cases 1 and 3");
  else require(k == 0 && q == 0, "k = q = 0 in Cases 2 and 4");
  if (case_id <= 2) {
    require(delta == 0, "delta = 0 in Cases 1 and 2");
    require(r == kC + k1 && s == qC + k1, "r = kC + k1 and s = qC + k1");
  } else {
    require(delta >= 1, "delta >= 1 in Cases 3 and 4");
    require(k1 == 0, "k1 = 0 in Cases 3 and 4");
    require(kC == r + delta && qC == s + delta, "kC = r + delta and qC = s + delta");
  }
  require(kC % 2 == 0 && qC % 2 == 0, "kC and qC even");
  const int N = n - 1;
  require(std::max(q - 1, 0) + q1 + s + k + m + kC == N, "root row sums to n-1");
  require(q1 + q + std::max(k - 1, 0) + m + r + qC == N, "factor row sums to n-1");
  if (k == 0) require(r % 2 == 0, "r even when k = 0");
}

std::string CaseSpec::label() const {
  std::ostringstream os;
  os << "case" << case_id << " n=" << n << " q=" << q << " q1=" << q1 << " qC=" << qC << " k=" << k << " k1=" << k1
     << " kC=" << kC << " m=" << m << " r=" << r << " s=" << s << " delta=" << delta;
  return os.str();
}

std::vector<CaseSpec> enumerate_cases(int n, bool strict) {
  if (n < 2) throw DomainError("enumerate_cases needs n >= 2");
  const int N = n - 1;
  std::vector<CaseSpec> all;
  auto try_add = [&](CaseSpec c) {
    const int m = N - (std::max(c.q - 1, 0) + c.q1 + c.s + c.k + c.kC);
    if (m < 0) return;
    c.m = m;
    if (c.q1 + c.q + std::max(c.k - 1, 0) + c.m + c.r + c.qC != N) return;
    if (c.k == 0 && c.r % 2 != 0) return;
    c.construction_unsupported = c.delta % 2 != 0;
    c.validate();
    all.push_back(c);
  };
  for (int id = 1; id <= 4; ++id) {
    const bool with_zero = id == 1 || id == 3;
    const int k_hi = with_zero ? (strict ? 1 : N) : 0;
    for (int k = with_zero ? 1 : 0; k <= k_hi; ++k) {
      for (int q = with_zero ? 1 : 0; q <= (with_zero ? N : 0); ++q) {
        for (int q1 = 0; q1 <= N; ++q1) {
          if (id <= 2) {
            for (int k1 = 0; k1 <= N; ++k1) {
              for (int kC = 0; kC <= N; kC += 2) {
                for (int qC = 0; qC <= N; qC += 2) {
                  CaseSpec c;
                  c.case_id = id;
                  c.n = n;
                  c.k = k;
                  c.q = q;
                  c.q1 = q1;
                  c.k1 = k1;
                  c.kC = kC;
                  c.qC = qC;
                  c.r = kC + k1;
                  c.s = qC + k1;
                  try_add(c);
                }
              }
            }
          } else {
            for (int delta = 1; delta <= N; ++delta) {
              for (int r = 0; r + delta <= N; ++r) {
                for (int s = 0; s + delta <= N; ++s) {
                  if ((r + delta) % 2 != 0 || (s + delta) % 2 != 0) continue;
                  CaseSpec c;
                  c.case_id = id;
                  c.n = n;
                  c.k = k;
                  c.q = q;
                  c.q1 = q1;
                  c.delta = delta;
                  c.r = r;
                  c.s = s;
                  c.kC = r + delta;
                  c.qC = s + delta;
                  try_add(c);
                }
              }
            }
          }
        }
      }
    }
  }
  auto key = [](const CaseSpec& c) {
    return std::tuple(c.case_id, c.q, c.q1, c.qC, c.k, c.k1, c.kC, c.m, c.r, c.s, c.delta);
  };
  std::sort(all.begin(), all.end(), [&](const CaseSpec& a, const CaseSpec& b) { return key(a) < key(b); });
  std::vector<CaseSpec> out;
  std::map<std::array<int, 8>, bool> seen;
  for (const auto& c : all) {
    SignVector8 v = c.expected();
    std::array<int, 8> sig{v.roots.pos,  v.roots.zero,  v.roots.neg,  v.roots.complex_pairs,
                           v.neg_a.pos, v.neg_a.zero, v.neg_a.neg, v.neg_a.complex_pairs};
    if (seen.emplace(sig, true).second) out.push_back(c);
  }
  return out;
}

namespace {

std::string describe(const RootSignature& s) {
  std::ostringstream os;
  os << "(pos " << s.pos << ", zero " << s.zero << ", neg " << s.neg << ", pairs " << s.complex_pairs << ")";
  return os.str();
}

}  // namespace

VerifyResult verify_realization(const RatPoly& p, const CaseSpec& spec, int n, Mode mode) {
  VerifyResult res;
  const int want_degree = mode == Mode::polynomial ? n : n - 1;
  if (p.degree() != want_degree) {
    res.problems.push_back("degree " + std::to_string(p.degree()) + ", expected " + std::to_string(want_degree));
    return res;
  }
  try {
    res.analysis = analyze(p, n, mode);
  } catch (const DomainError& e) {
    res.problems.push_back(std::string("analysis failed: ") + e.what());
    return res;
  }
  const auto& f = res.analysis.factors;
  if (f.count() != n - 1 || f.infinity != 0) res.problems.push_back("factor count differs from n-1");
  const SignVector8 want = spec.expected();
  const SignVector8& got = res.analysis.sig;
  if (!got.roots.same_counts(want.roots)) {
    res.problems.push_back("roots " + describe(got.roots) + ", expected " + describe(want.roots));
  }
  if (!got.neg_a.same_counts(want.neg_a)) {
    res.problems.push_back("-a_i " + describe(got.neg_a) + ", expected " + describe(want.neg_a));
  }
  if (!got.roots.distinct_nonzero) res.problems.push_back("repeated nonzero root");
  if (!got.neg_a.distinct_nonzero) res.problems.push_back("repeated nonzero a_i");
  res.pass = res.problems.empty();
  return res;
}

}  // namespace szego
