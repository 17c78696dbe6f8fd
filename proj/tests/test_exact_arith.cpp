#include "oracles.hpp"
#include "szego/linalg.hpp"
#include "szego/random.hpp"
#include "szego/roots.hpp"

#include <doctest.h>

#include <cmath>

using namespace szego;
using oracle::poly;
using oracle::q;

TEST_SUITE("exact_arith") {
  TEST_CASE("rationals are canonical and exact") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("8/2")) == "4");
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational(" 7 "), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("0.5"), DomainError);
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(binomial(10, 3) == 120);
    CHECK(power(Rational(-2, 3), 3) == Rational(-8, 27));
  }

  TEST_CASE("Gaussian rationals") {
    GaussRational z(q("1/2"), q("-3/4"));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).is_real());
    CHECK((z * z.conj()).re == z.norm());
    CHECK(z / z == GaussRational(1L));
    CHECK_THROWS_AS(z / GaussRational(0L), DomainError);
  }

  TEST_CASE("polynomials trim and report degree") {
    RatPoly zero(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == kZeroDegree);
    RatPoly p = poly({"1", "2", "0"});
    CHECK(p.degree() == 1);
    CHECK(p(Rational(3)) == 7);
    CHECK(to_string(poly({"-1/2", "0", "3/2", "1"})) == "x^3 + 3/2*x^2 - 1/2");
    CHECK_THROWS_AS(exact_div(poly({"1", "0", "1"}), poly({"1", "1"})), DomainError);
    CHECK(root_multiplicity(poly({"0", "0", "1", "1"}), Rational(0)) == 2);
  }

  TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(poly({"2", "-3", "1"}), Bound(0L), Bound::pos_inf()) == 2);
    CHECK(sturm_count(pow(poly({"1", "1"}), 5), Bound::neg_inf(), Bound(0L)) == 1);
    CHECK(sturm_count(poly({"6", "35/3", "20/3", "1"}), Bound::neg_inf(), Bound(0L)) == 3);
    CHECK_THROWS_AS(sturm_count(RatPoly(), Bound::neg_inf(), Bound::pos_inf()), DomainError);
    // half-open convention
    CHECK(sturm_count(poly({"-1", "1"}), Bound(0L), Bound(1L)) == 1);
    CHECK(sturm_count(poly({"-1", "1"}), Bound(1L), Bound(2L)) == 0);
  }

  TEST_CASE("sturm additivity on random polynomials") {
    for (int i = 0; i < 200; ++i) {
      RandomSource rng({7, static_cast<std::uint64_t>(i)});
      RatPoly p = rng.poly(rng.uniform(1, 8));
      if (rng.chance(50)) p = p * RatPoly::linear_root(rng.rational());
      const Rational s = rng.rational();
      const int left = sturm_count(p, Bound::neg_inf(), s);
      const int right = sturm_count(p, s, Bound::pos_inf());
      // (-inf, s] + (s, inf) already counts a root at s once
      CHECK(left + right == static_cast<int>(isolate_real_roots(p).size()));
    }
  }

  TEST_CASE("squarefree_decompose examples and invariants") {
    auto d = squarefree_decompose(poly({"0", "0", "1", "1"}));
    REQUIRE(d.size() == 2);
    CHECK(((d[0].factor == poly({"0", "1"}) && d[0].multiplicity == 2 && d[1].factor == poly({"1", "1"})) ||
           (d[1].factor == poly({"0", "1"}) && d[1].multiplicity == 2 && d[0].factor == poly({"1", "1"}))));
    auto e = squarefree_decompose(pow(poly({"1", "1"}), 6));
    REQUIRE(e.size() == 1);
    CHECK(e[0].multiplicity == 6);
    CHECK(squarefree_decompose(poly({"6", "35/3", "20/3", "1"})).size() == 1);
    CHECK_THROWS_AS(squarefree_decompose(RatPoly()), DomainError);
    for (int i = 0; i < 100; ++i) {
      RandomSource rng({8, static_cast<std::uint64_t>(i)});
      RatPoly p = rng.poly(rng.uniform(0, 3));
      for (int t = 0; t < 3; ++t) p = p * pow(RatPoly::linear_root(rng.rational()), static_cast<unsigned>(rng.uniform(1, 3)));
      RatPoly prod({Rational(1)});
      auto parts = squarefree_decompose(p);
      for (const auto& [f, m] : parts) {
        prod = prod * pow(f, static_cast<unsigned>(m));
        CHECK(gcd(f, f.derivative()).degree() == 0);
      }
      for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b) CHECK(gcd(parts[a].factor, parts[b].factor).degree() == 0);
      CHECK(prod == monic(p));
    }
  }

  TEST_CASE("interpolate") {
    std::vector<Rational> nodes{q("0"), q("1/2"), q("2")};
    std::vector<Rational> values{q("6"), q("35/4"), q("20")};
    CHECK(interpolate(nodes, values) == poly({"6", "5", "1"}));
    std::vector<Rational> one{q("0")};
    std::vector<Rational> c{q("-7/3")};
    CHECK(interpolate(one, c) == poly({"-7/3"}));
    std::vector<Rational> two{q("0"), q("1")};
    std::vector<Rational> zeros{q("0"), q("0")};
    CHECK(interpolate(two, zeros).is_zero());
    std::vector<Rational> dup{q("1"), q("1")};
    CHECK_THROWS_AS(interpolate(dup, zeros), DomainError);
    for (int i = 0; i < 100; ++i) {
      RandomSource rng({9, static_cast<std::uint64_t>(i)});
      RatPoly p = rng.poly(rng.uniform(0, 7));
      std::vector<Rational> xs;
      std::vector<Rational> ys;
      while (static_cast<int>(xs.size()) <= p.degree() + rng.uniform(0, 2)) {
        Rational x = rng.rational(20, 7);
        if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
        xs.push_back(x);
        ys.push_back(p(x));
      }
      CHECK(interpolate(xs, ys) == p);
    }
  }

  TEST_CASE("falling factorial conversions") {
    std::vector<Rational> t2{q("0"), q("0"), q("1")};
    CHECK(falling_to_monomial(t2) == std::vector<Rational>{q("0"), q("-1"), q("1")});
    std::vector<Rational> c{q("1"), q("2"), q("1/2")};
    CHECK(falling_to_monomial(c) == std::vector<Rational>{q("1"), q("3/2"), q("1/2")});
    std::vector<Rational> c0{q("5/7")};
    CHECK(falling_to_monomial(c0) == c0);
    CHECK(falling_to_monomial(std::vector<Rational>{}).empty());
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(4, 3) == -6);
    CHECK(stirling_second(5, 3) == 25);
    for (int i = 0; i < 100; ++i) {
      RandomSource rng({10, static_cast<std::uint64_t>(i)});
      std::vector<Rational> v;
      for (int j = rng.uniform(0, 12); j > 0; --j) v.push_back(rng.rational());
      CHECK(falling_to_monomial(monomial_to_falling(v)) == v);
      CHECK(monomial_to_falling(falling_to_monomial(v)) == v);
    }
  }

  TEST_CASE("isolate_real_roots") {
    auto r = isolate_real_roots(poly({"6", "5", "1"}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].is_exact());
    CHECK(r[0].lo == -3);
    CHECK(r[1].lo == -2);
    CHECK(isolate_real_roots(poly({"1", "0", "1"})).empty());
    auto s = isolate_real_roots(poly({"-2", "0", "1"}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].root_sign() == -1);
    CHECK(s[1].root_sign() == 1);
    CHECK(!s[0].is_exact());
    CHECK_THROWS_AS(isolate_real_roots(RatPoly()), DomainError);
    for (int i = 0; i < 100; ++i) {
      RandomSource rng({11, static_cast<std::uint64_t>(i)});
      RatPoly p = rng.poly(rng.uniform(1, 9));
      if (rng.chance(40)) p = p * RatPoly::monomial(Rational(1), 1);
      auto ivs = isolate_real_roots(p);
      for (std::size_t k = 0; k < ivs.size(); ++k) {
        CHECK(ivs[k].check());
        if (k > 0) CHECK(ivs[k - 1].hi <= ivs[k].lo);
      }
      CHECK(static_cast<int>(ivs.size()) == sturm_count(p, Bound::neg_inf(), Bound::pos_inf()));
    }
  }

  TEST_CASE("complex_roots_approx") {
    auto i = complex_roots_approx(poly({"1", "0", "1"}), Rational(1, 1000000000));
    REQUIRE(i.size() == 2);
    for (auto z : i) CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-9);
    auto m = complex_roots_approx(pow(poly({"1", "1"}), 3), Rational(1, 1000000000));
    REQUIRE(m.size() == 3);
    for (auto z : m) CHECK(std::abs(z + 1.0) < 1e-9);
    auto r = complex_roots_approx(poly({"6", "5", "1"}), Rational(1, 1000000000));
    REQUIRE(r.size() == 2);
    double lo = std::min(r[0].real(), r[1].real());
    CHECK(std::abs(lo + 3) < 1e-9);
  }

  TEST_CASE("linear algebra") {
    Matrix a(2, 2);
    a(0, 0) = Rational(3, 2);
    a(0, 1) = Rational(-1, 2);
    a(1, 1) = 1;
    CHECK(determinant(a) == Rational(3, 2));
    CHECK(characteristic_polynomial(a) == poly({"3/2", "-5/2", "1"}));
    auto x = solve(a, {Rational(1), Rational(2)});
    REQUIRE(x);
    CHECK(a.apply(*x) == std::vector<Rational>{Rational(1), Rational(2)});
    Matrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    CHECK(!solve(s, {Rational(1), Rational(0)}));
    CHECK(determinant(s) == 0);
    for (int i = 0; i < 30; ++i) {
      RandomSource rng({12, static_cast<std::uint64_t>(i)});
      const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.rational();
      // det(tI - m) at t = 0 is det(-m)
      Matrix neg(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) neg(r, c) = -m(r, c);
      CHECK(characteristic_polynomial(m)(Rational(0)) == determinant(neg));
    }
  }
}
