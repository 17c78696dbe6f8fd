#include "oracles.hpp"
#include "szego/realization.hpp"

#include <doctest.h>

using namespace szego;
using oracle::poly;
using oracle::q;

namespace {

CaseSpec make(int id, int n, std::initializer_list<std::pair<const char*, int>> fields) {
  CaseSpec c;
  c.case_id = id;
  c.n = n;
  for (auto [name, v] : fields) {
    std::string f(name);
    if (f == "q") c.q = v;
    else if (f == "q1") c.q1 = v;
    else if (f == "qC") c.qC = v;
    else if (f == "k") c.k = v;
    else if (f == "k1") c.k1 = v;
    else if (f == "kC") c.kC = v;
    else if (f == "m") c.m = v;
    else if (f == "r") c.r = v;
    else if (f == "s") c.s = v;
    else if (f == "delta") c.delta = v;
  }
  c.construction_unsupported = c.delta % 2 != 0;
  return c;
}

}  // namespace

TEST_SUITE("realization") {
  TEST_CASE("base compositions") {
    CHECK(base_composition_pol(1, 2, 5) == poly({"0", "0", "0", "1", "2", "1"}));
    CHECK(base_composition_pol(2, 0, 3) == oracle::from_roots({0, -1, q("-1/3")}));
    CHECK_THROWS_AS(base_composition_pol(0, 1, 3), DomainError);
    CHECK_THROWS_AS(base_composition_pol(2, 2, 3), DomainError);
    for (int n = 2; n <= 8; ++n) {
      for (int l = 1; l <= n; ++l) {
        for (int mu = 0; l + mu <= n; ++mu) {
          RatPoly lit = oracle::k_factor(0, n);
          for (int t = 1; t < l; ++t) lit = oracle::compose(lit, oracle::k_factor(0, n), n);
          for (int b = 1; b <= mu; ++b) lit = oracle::compose(lit, oracle::k_factor(oracle::frac(-b, n - b), n), n);
          CHECK(base_composition_pol(l, mu, n) == monic(lit));
        }
      }
    }
    CHECK(base_composition_exp(1, 2).y == poly({"0", "0", "0", "1"}));
    CHECK(base_composition_exp(2, 1).y == poly({"0", "0", "2", "1"}));
    CHECK_THROWS_AS(base_composition_exp(0, 0), DomainError);
  }

  TEST_CASE("couple factors") {
    const GaussRational eps(q("1/10"), q("3/10"));
    RatPoly v = couple_factor_pol(eps, 3);
    const RatPoly y = poly({"1", "1"});
    CHECK(v == y * (y * y + y * q("7/30") + RatPoly::constant(q("1/15"))));
    CHECK(q("49/900") - 4 * q("1/15") < 0);
    CHECK_THROWS_AS(couple_factor_pol(GaussRational(q("1/10"), Rational(0)), 3), DomainError);
    CHECK_THROWS_AS(couple_factor_pol(GaussRational(q("1/5"), q("1/10")), 3), DomainError);
    CHECK(couple_factor_exp(GaussRational(Rational(0), Rational(1))) == poly({"1", "1", "1"}));
    CHECK_THROWS_AS(couple_factor_exp(GaussRational(q("1/3"))), DomainError);
    for (int i = 0; i < 4; ++i) {
      GaussRational e = couple_epsilon(q("1/8"), i, q("1/2"));
      CHECK(sign(e.re) > 0);
      CHECK(2 * e.re < e.im);
    }
  }

  TEST_CASE("realize_case examples") {
    SearchConfig cfg;
    auto c1 = realize_case(make(2, 3, {{"q1", 2}}), Mode::polynomial, cfg);
    CHECK(reverify(c1).pass);
    CHECK(c1.factors.rational.size() == 2);

    auto c2 = realize_case(make(1, 3, {{"k", 1}, {"q", 1}, {"m", 1}}), Mode::polynomial, cfg);
    CHECK(reverify(c2).pass);
    CHECK(c2.factors.zeros == 1);
    REQUIRE(c2.factors.rational.size() == 1);
    CHECK(sign(c2.factors.rational[0]) < 0);
    CHECK(is_zero(c2.object(Rational(0))));

    CaseSpec c3spec = make(3, 4, {{"k", 1}, {"q", 1}, {"delta", 2}, {"kC", 2}, {"qC", 2}});
    for (Mode mode : {Mode::polynomial, Mode::exponential}) {
      auto c3 = realize_case(c3spec, mode, cfg);
      CHECK(reverify(c3).pass);
      CHECK(c3.factors.zeros == 1);
      CHECK(c3.factors.pair_count() == 1);
      CHECK(c3.signature.roots.complex_pairs == 1);
    }
  }

  TEST_CASE("search is deterministic and schedule independent") {
    for (const auto& spec : enumerate_cases(4)) {
      if (spec.construction_unsupported) continue;
      SearchConfig par;
      SearchConfig ser;
      ser.parallel = false;
      auto a = realize_case(spec, Mode::polynomial, par);
      auto b = realize_case(spec, Mode::polynomial, ser);
      CHECK(a.object == b.object);
      CHECK(a.trace.round == b.trace.round);
      CHECK(a.trace.index == b.trace.index);
      CHECK(a.trace.candidates == a.trace.round * par.resamples + a.trace.index + 1);
      auto again = try_candidate(spec, Mode::polynomial, par, a.trace.round, a.trace.index);
      REQUIRE(again);
      CHECK(again->object == a.object);
    }
    SearchConfig other;
    other.seed = 99;
    auto spec = make(1, 4, {{"k", 1}, {"q", 1}, {"m", 2}});
    CHECK(realize_case(spec, Mode::exponential, other).object == realize_case(spec, Mode::exponential, other).object);
  }

  TEST_CASE("realize_all small n") {
    for (Mode mode : {Mode::polynomial, Mode::exponential}) {
      RealizeSummary two = realize_all(2, mode);
      CHECK(two.outcomes.size() == 3);
      CHECK(two.realized == 3);
      for (int n = 3; n <= 4; ++n) {
        RealizeSummary s = realize_all(n, mode);
        CHECK(s.failed == 0);
        CHECK(s.unsupported == 0);
        CHECK(s.realized == static_cast<int>(enumerate_cases(n).size()));
        for (const auto& o : s.outcomes) {
          REQUIRE(o.certificate);
          CHECK(reverify(*o.certificate).pass);
          CHECK(o.certificate->plan.slot_count() == n - 1);
        }
      }
    }
  }

  TEST_CASE("exhausted budgets and odd delta") {
    SearchConfig none;
    none.rounds = 0;
    CHECK_THROWS_AS(realize_case(make(2, 3, {{"q1", 2}}), Mode::polynomial, none), DomainError);
    CaseSpec odd;
    for (const auto& c : enumerate_cases(5)) {
      if (c.construction_unsupported) odd = c;
    }
    REQUIRE(odd.construction_unsupported);
    SearchConfig tiny;
    tiny.rounds = 1;
    tiny.resamples = 1;
    try {
      auto cert = realize_case(odd, Mode::polynomial, tiny);
      CHECK(cert.trace.fallback);
      CHECK(reverify(cert).pass);
    } catch (const RealizationError& e) {
      CHECK(e.unsupported());
    }
    CHECK_THROWS_AS(realize_case(make(1, 3, {{"k", 1}}), Mode::polynomial, tiny), DomainError);
  }
}
