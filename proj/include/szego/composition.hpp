#pragma once

// Coefficient-wise composition of polynomials at a declared degree n, and the
// analogous composition of e^x * Y forms, plus the standard factors.

#include "szego/poly.hpp"

#include <span>
#include <vector>

namespace szego {

/// A polynomial together with the degree n at which it is composed.
template <class T>
struct Tagged {
  Poly<T> poly;
  int n = 0;
};

using DegreeTaggedPoly = Tagged<Rational>;
using GaussTaggedPoly = Tagged<GaussRational>;

/// sum_j C(n,j) a_j b_j x^j, with a_j, b_j the coefficients divided by C(n,j).
RatPoly schur_szego(const DegreeTaggedPoly& a, const DegreeTaggedPoly& b);
GaussRatPoly schur_szego(const GaussTaggedPoly& a, const GaussTaggedPoly& b);
RatPoly schur_szego_multi(std::span<const DegreeTaggedPoly> factors);
GaussRatPoly schur_szego_multi(std::span<const GaussTaggedPoly> factors);

/// (x+1)^(n-1) (x+a)
DegreeTaggedPoly factor_K(const Rational& a, int n);
GaussTaggedPoly factor_K(const GaussRational& a, int n);
/// (x+1)^(n-1), tagged with degree n.
DegreeTaggedPoly factor_K_infinity(int n);
/// x^n p(1/x)
DegreeTaggedPoly revert(const DegreeTaggedPoly& p);

/// The entire function e^x * y(x).
struct ExpForm {
  RatPoly y;
  friend bool operator==(const ExpForm&, const ExpForm&) = default;
};
struct GaussExpForm {
  GaussRatPoly y;
  friend bool operator==(const GaussExpForm&, const GaussExpForm&) = default;
};

/// e^x (alpha x + beta) composed with e^x Y, which is e^x (alpha x (Y + Y') + beta Y).
ExpForm exp_apply_factor(const Rational& alpha, const Rational& beta, const ExpForm& f);
GaussExpForm exp_apply_factor(const GaussRational& alpha, const GaussRational& beta, const GaussExpForm& f);

/// gamma_j = sum_k y_k (j)_k for j = 0..N: the coefficients of x^j / j!.
std::vector<Rational> exp_series(const ExpForm& f, int N);
/// Entrywise product of two series coefficient lists through index N.
std::vector<Rational> exp_truncated_compose(std::span<const Rational> f, std::span<const Rational> g, int N);

/// Sign alternations in the nonzero coefficients.
int sign_changes(const RatPoly& p);

struct MonicResult {
  RatPoly poly;
  Rational scalar;  // poly * scalar is the input
};
MonicResult make_monic(const RatPoly& p);

/// The composition at degree n of K_{a_i} over the roots -a_i of q, with one
/// K_infinity per missing degree (deg q <= n-1). Non-monic q scales the result.
RatPoly compose_from_factor_poly(const RatPoly& q, int n);
/// R such that e^x R has series coefficients gamma_j = g(j).
RatPoly exp_from_factor_poly(const RatPoly& g);

}  // namespace szego
