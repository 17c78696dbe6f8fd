#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library code under test except the basic number and polynomial types.

#include "szego/poly.hpp"

#include <string>
#include <vector>

namespace oracle {

using szego::Rational;
using szego::RatPoly;

inline Rational q(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline RatPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(q(s));
  return RatPoly(std::move(c));
}

inline Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient-wise product of binomially normalized coefficients.
inline RatPoly compose(const RatPoly& a, const RatPoly& b, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = a.coeff(j) * b.coeff(j) / binom(n, j);
  return RatPoly(std::move(c));
}

/// Product of (x - r) over the given roots.
inline RatPoly from_roots(const std::vector<Rational>& roots) {
  RatPoly p({Rational(1)});
  for (const auto& r : roots) p = p * RatPoly({-r, Rational(1)});
  return p;
}

/// (x+1)^(n-1) (x+a), expanded by repeated multiplication.
inline RatPoly k_factor(const Rational& a, int n) {
  RatPoly p({a, Rational(1)});
  for (int i = 0; i < n - 1; ++i) p = p * RatPoly({Rational(1), Rational(1)});
  return p;
}

/// Series coefficients gamma_j of e^x y(x): sum_k y_k j!/(j-k)!.
inline std::vector<Rational> exp_series(const RatPoly& y, int N) {
  std::vector<Rational> g(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    for (int k = 0; k <= std::min(j, y.degree()); ++k) {
      Rational fall(1);
      for (int t = 0; t < k; ++t) fall *= j - t;
      g[static_cast<std::size_t>(j)] += y.coeff(k) * fall;
    }
  }
  return g;
}

}  // namespace oracle

namespace oracle {

/// Composition of K_{a_i} (roots of a_poly), `infinity` copies of (x+1)^(n-1)
/// and a scalar, from the normalized coefficient of a single factor:
/// K_a contributes (j + a (n-j)) / n at x^j, (x+1)^(n-1) contributes (n-j)/n.
inline RatPoly poly_from_factors(const RatPoly& a_poly, int infinity, const Rational& scalar, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const int d = a_poly.degree();
  for (int j = 0; j <= n; ++j) {
    Rational v = scalar * binom(n, j);
    if (j < n) {
      Rational b(-j, n - j);
      b.canonicalize();
      Rational prod = a_poly(b);
      if (d % 2 != 0) prod = -prod;
      for (int i = 0; i < d; ++i) prod = prod * (n - j) / n;
      for (int i = 0; i < infinity; ++i) prod = prod * (n - j) / n;
      v *= prod;
    } else if (infinity > 0) {
      v = 0;
    }
    c[static_cast<std::size_t>(j)] = v;
  }
  return RatPoly(std::move(c));
}

/// Series coefficients of the composition of e^x (x + a_i) times a scalar:
/// gamma_j = scalar * prod (j + a_i).
inline std::vector<Rational> exp_gamma_from_factors(const RatPoly& a_poly, const Rational& scalar, int N) {
  std::vector<Rational> g(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    Rational v = a_poly(Rational(-j));
    if (a_poly.degree() % 2 != 0) v = -v;
    g[static_cast<std::size_t>(j)] = scalar * v;
  }
  return g;
}

}  // namespace oracle
