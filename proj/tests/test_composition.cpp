#include "oracles.hpp"
#include "szego/composition.hpp"
#include "szego/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace szego;
using oracle::poly;
using oracle::q;

namespace {

RatPoly random_upto(RandomSource& rng, int n) { return rng.poly(rng.uniform(0, n)); }

}  // namespace

TEST_SUITE("composition") {
  TEST_CASE("K_2 * K_3 at n = 3") {
    RatPoly p = schur_szego(factor_K(Rational(2), 3), factor_K(Rational(3), 3));
    CHECK(p == poly({"6", "35/3", "20/3", "1"}));
    CHECK(p == oracle::compose(oracle::k_factor(2, 3), oracle::k_factor(3, 3), 3));
  }

  TEST_CASE("agrees with the coefficient oracle, commutative and associative") {
    for (int i = 0; i < 200; ++i) {
      RandomSource rng({20, static_cast<std::uint64_t>(i)});
      const int n = rng.uniform(1, 10);
      RatPoly a = rng.poly(n);
      RatPoly b = random_upto(rng, n);
      RatPoly c = rng.poly(n);
      CHECK(schur_szego({a, n}, {b, n}) == oracle::compose(a, b, n));
      CHECK(schur_szego({a, n}, {b, n}) == schur_szego({b, n}, {a, n}));
      CHECK(schur_szego({schur_szego({a, n}, {b, n}), n}, {c, n}) ==
            schur_szego({a, n}, {schur_szego({c, n}, {b, n}), n}));
    }
  }

  TEST_CASE("multi-composition is order independent") {
    for (int i = 0; i < 50; ++i) {
      RandomSource rng({21, static_cast<std::uint64_t>(i)});
      const int n = rng.uniform(2, 8);
      std::vector<DegreeTaggedPoly> fs;
      for (int t = rng.uniform(1, 5); t > 0; --t) fs.push_back({rng.poly(n), n});
      RatPoly base = schur_szego_multi(fs);
      std::reverse(fs.begin(), fs.end());
      CHECK(schur_szego_multi(fs) == base);
      std::rotate(fs.begin(), fs.begin() + 1, fs.end());
      CHECK(schur_szego_multi(fs) == base);
    }
    std::vector<DegreeTaggedPoly> single{factor_K(Rational(5), 4)};
    CHECK(schur_szego_multi(single) == factor_K(Rational(5), 4).poly);
    CHECK_THROWS_AS(schur_szego_multi(std::span<const DegreeTaggedPoly>{}), DomainError);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(schur_szego({poly({"1", "1"}), 2}, {poly({"1", "1", "1"}), 3}), DomainError);
    CHECK_THROWS_AS(schur_szego({poly({"1", "1", "1", "1"}), 2}, {poly({"1"}), 2}), DomainError);
    CHECK_THROWS_AS(schur_szego({poly({"1", "1"}), 3}, {poly({"1"}), 3}), DomainError);
  }

  TEST_CASE("identity and the factor K_0") {
    for (int n = 1; n <= 10; ++n) {
      RandomSource rng({22, static_cast<std::uint64_t>(n)});
      RatPoly a = rng.poly(n);
      CHECK(schur_szego({x_plus_one_pow(static_cast<unsigned>(n)), n}, {a, n}) == a);
      CHECK(schur_szego(factor_K(Rational(0), n), {a, n}) == a.derivative().shift_up() * Rational(1, n));
    }
  }

  TEST_CASE("factor_K") {
    CHECK(factor_K(Rational(1), 4).poly == x_plus_one_pow(4));
    CHECK(factor_K(q("-1/2"), 3).poly == poly({"-1/2", "0", "3/2", "1"}));
    CHECK(factor_K(Rational(0), 3).poly == poly({"0", "1", "2", "1"}));
    for (int n = 1; n <= 8; ++n) {
      const Rational a = q("7/5");
      RatPoly k = factor_K(a, n).poly;
      for (int j = 0; j <= n; ++j) CHECK(k.coeff(j) / oracle::binom(n, j) == ((n - j) * a + j) / n);
    }
    CHECK(factor_K_infinity(2).poly == poly({"1", "1"}));
    CHECK(factor_K_infinity(2).n == 2);
  }

  TEST_CASE("K_infinity and (x+1)^(n-2)") {
    for (int n = 2; n <= 9; ++n) {
      RandomSource rng({23, static_cast<std::uint64_t>(n)});
      RatPoly a = rng.poly(n);
      const Rational nn(n);
      CHECK(schur_szego(factor_K_infinity(n), {x_plus_one_pow(static_cast<unsigned>(n)), n}) ==
            x_plus_one_pow(static_cast<unsigned>(n - 1)));
      CHECK(schur_szego(factor_K_infinity(n), {a, n}) == a - a.derivative().shift_up() * (1 / nn));
      CHECK(schur_szego({x_plus_one_pow(static_cast<unsigned>(n - 2)), n}, {a, n}) ==
            a - a.derivative().shift_up() * (2 / nn) + a.derivative().derivative().shift_up(2) * (1 / (nn * (nn - 1))));
    }
  }

  TEST_CASE("revert") {
    for (int n = 1; n <= 8; ++n) {
      const Rational a = q("-3/4");
      CHECK(revert(factor_K(a, n)).poly == factor_K(1 / a, n).poly * a);
      CHECK(revert({x_plus_one_pow(static_cast<unsigned>(n)), n}).poly == x_plus_one_pow(static_cast<unsigned>(n)));
      RatPoly p = poly({"2", "0", "-1"});
      if (n >= 2) CHECK(revert(revert({p, n})).poly == p);
    }
    CHECK(revert({poly({"0", "1"}), 3}).poly == poly({"0", "0", "1"}));
  }

  TEST_CASE("Gaussian composition of conjugate factors is real") {
    for (int i = 0; i < 50; ++i) {
      RandomSource rng({24, static_cast<std::uint64_t>(i)});
      const int n = rng.uniform(1, 8);
      GaussRational z(rng.rational(), rng.nonzero_rational());
      GaussRatPoly p = schur_szego(factor_K(z, n), factor_K(z.conj(), n));
      CHECK(imag_part(p).is_zero());
      GaussExpForm e = exp_apply_factor(GaussRational(1L), z, GaussExpForm{GaussRatPoly({GaussRational(1L)})});
      e = exp_apply_factor(GaussRational(1L), z.conj(), e);
      CHECK(imag_part(e.y).is_zero());
    }
  }

  TEST_CASE("exp_apply_factor") {
    ExpForm one{poly({"1"})};
    ExpForm x = exp_apply_factor(Rational(1), Rational(0), one);
    CHECK(x.y == poly({"0", "1"}));
    CHECK(exp_apply_factor(Rational(1), Rational(0), x).y == poly({"0", "1", "1"}));
    for (int mu = 0; mu <= 6; ++mu) {
      ExpForm y = one;
      for (int b = 0; b <= mu; ++b) y = exp_apply_factor(Rational(1), Rational(-b), y);
      CHECK(y.y == RatPoly::monomial(Rational(1), mu + 1));
    }
    ExpForm k12 = exp_apply_factor(q("1/2"), Rational(1), exp_apply_factor(Rational(1), Rational(1), one));
    CHECK(k12.y == poly({"1", "2", "1/2"}));
    auto g = exp_series(k12, 10);
    for (int j = 0; j <= 10; ++j) CHECK(g[static_cast<std::size_t>(j)] == oracle::frac((1 + j) * (2 + j), 2));
    CHECK_THROWS_AS(exp_apply_factor(Rational(0), Rational(0), one), DomainError);
    CHECK(exp_apply_factor(Rational(0), q("3/7"), x).y == poly({"0", "3/7"}));
  }

  TEST_CASE("exp series and truncated composition") {
    constexpr int N = 25;
    for (int i = 0; i < 50; ++i) {
      RandomSource rng({25, static_cast<std::uint64_t>(i)});
      RatPoly y = random_upto(rng, 6);
      CHECK(exp_series(ExpForm{y}, N) == oracle::exp_series(y, N));
      std::vector<Rational> ones(N + 1, Rational(1));
      auto d = exp_series(ExpForm{y}, N);
      CHECK(exp_truncated_compose(ones, d, N) == d);
      std::vector<Rational> j_seq(N + 1);
      for (int j = 0; j <= N; ++j) j_seq[static_cast<std::size_t>(j)] = j;
      CHECK(exp_truncated_compose(j_seq, d, N) == exp_series(ExpForm{(y + y.derivative()).shift_up()}, N));
    }
    std::vector<Rational> ones(3, Rational(1));
    CHECK(exp_truncated_compose(ones, ones, 2) == ones);
    CHECK_THROWS_AS(exp_truncated_compose(ones, ones, 5), DomainError);
  }

  TEST_CASE("sign_changes") {
    CHECK(sign_changes(factor_K(q("-1/2"), 3).poly) == 1);
    CHECK(sign_changes(x_plus_one_pow(9)) == 0);
    CHECK_THROWS_AS(sign_changes(RatPoly()), DomainError);
    for (int i = 0; i < 200; ++i) {
      RandomSource rng({26, static_cast<std::uint64_t>(i)});
      CHECK(sign_changes(factor_K(rng.rational(50, 9), rng.uniform(1, 30)).poly) <= 1);
    }
  }

  TEST_CASE("make_monic and the factor-polynomial shortcut") {
    auto m = make_monic(poly({"2", "4"}));
    CHECK(m.poly == poly({"1/2", "1"}));
    CHECK(m.scalar == 4);
    // Q(t) = (t+2)(t+3) is K_2 * K_3
    CHECK(compose_from_factor_poly(poly({"6", "5", "1"}), 3) == poly({"6", "35/3", "20/3", "1"}));
    // G(t) = (t+1)(t+2)/2 is e^x (1 + 2x + x^2/2)
    CHECK(exp_from_factor_poly(poly({"1", "3/2", "1/2"})) == poly({"1", "2", "1/2"}));
  }
}
