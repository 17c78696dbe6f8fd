#include "szego/composition.hpp"

#include "szego/roots.hpp"

namespace szego {

namespace {

template <class T>
void check_tagged(const Tagged<T>& p, int n) {
  if (p.n != n) throw DomainError("composition degrees differ");
  if (n < 1) throw DomainError("composition degree must be positive");
  if (p.poly.degree() > n) throw DomainError("polynomial degree exceeds the declared composition degree");
}

template <class T>
Poly<T> compose_impl(std::span<const Tagged<T>> factors) {
  if (factors.empty()) throw DomainError("composition of an empty factor list");
  const int n = factors.front().n;
  bool full = false;
  for (const auto& f : factors) {
    check_tagged(f, n);
    full = full || f.poly.degree() == n;
  }
  if (!full) throw DomainError("no composed polynomial has degree n");
  std::vector<T> out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational binom(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    T acc = factors.front().poly.coeff(j);
    for (std::size_t i = 1; i < factors.size() && !detail::coeff_is_zero(acc); ++i) {
      acc *= factors[i].poly.coeff(j);
      acc /= T(binom);
    }
    out[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return Poly<T>(std::move(out));
}

}  // namespace

RatPoly schur_szego(const DegreeTaggedPoly& a, const DegreeTaggedPoly& b) {
  const DegreeTaggedPoly pair[] = {a, b};
  return compose_impl<Rational>(pair);
}

GaussRatPoly schur_szego(const GaussTaggedPoly& a, const GaussTaggedPoly& b) {
  const GaussTaggedPoly pair[] = {a, b};
  return compose_impl<GaussRational>(pair);
}

RatPoly schur_szego_multi(std::span<const DegreeTaggedPoly> factors) { return compose_impl(factors); }
GaussRatPoly schur_szego_multi(std::span<const GaussTaggedPoly> factors) { return compose_impl(factors); }

DegreeTaggedPoly factor_K(const Rational& a, int n) {
  if (n < 1) throw DomainError("composition degree must be positive");
  return {x_plus_one_pow(static_cast<unsigned>(n - 1)) * RatPoly({a, Rational(1)}), n};
}

GaussTaggedPoly factor_K(const GaussRational& a, int n) {
  if (n < 1) throw DomainError("composition degree must be positive");
  return {to_gauss(x_plus_one_pow(static_cast<unsigned>(n - 1))) * GaussRatPoly({a, GaussRational(1L)}), n};
}

DegreeTaggedPoly factor_K_infinity(int n) {
  if (n < 1) throw DomainError("composition degree must be positive");
  return {x_plus_one_pow(static_cast<unsigned>(n - 1)), n};
}

DegreeTaggedPoly revert(const DegreeTaggedPoly& p) {
  if (p.poly.degree() > p.n) throw DomainError("polynomial degree exceeds the declared composition degree");
  std::vector<Rational> c(static_cast<std::size_t>(p.n) + 1);
  for (int j = 0; j <= p.n; ++j) c[static_cast<std::size_t>(j)] = p.poly.coeff(p.n - j);
  return {RatPoly(std::move(c)), p.n};
}

namespace {

template <class T>
Poly<T> apply_factor(const T& alpha, const T& beta, const Poly<T>& y) {
  if (detail::coeff_is_zero(alpha) && detail::coeff_is_zero(beta)) {
    throw DomainError("exponential factor with both parameters zero");
  }
  return ((y + y.derivative()).shift_up() * alpha) + y * beta;
}

}  // namespace

ExpForm exp_apply_factor(const Rational& alpha, const Rational& beta, const ExpForm& f) {
  return {apply_factor(alpha, beta, f.y)};
}

GaussExpForm exp_apply_factor(const GaussRational& alpha, const GaussRational& beta, const GaussExpForm& f) {
  return {apply_factor(alpha, beta, f.y)};
}

std::vector<Rational> exp_series(const ExpForm& f, int N) {
  if (N < 0) throw DomainError("series length must be nonnegative");
  std::vector<Rational> gamma(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    Rational falling(1);
    Rational acc(0);
    for (int k = 0; k <= f.y.degree() && k <= j; ++k) {
      acc += f.y.coeff(k) * falling;
      falling *= j - k;
    }
    gamma[static_cast<std::size_t>(j)] = acc;
  }
  return gamma;
}

std::vector<Rational> exp_truncated_compose(std::span<const Rational> f, std::span<const Rational> g, int N) {
  if (N < 0) throw DomainError("series length must be nonnegative");
  const auto need = static_cast<std::size_t>(N) + 1;
  if (f.size() < need || g.size() < need) throw DomainError("series shorter than N+1 terms");
  std::vector<Rational> out(need);
  for (std::size_t j = 0; j < need; ++j) out[j] = f[j] * g[j];
  return out;
}

int sign_changes(const RatPoly& p) { return coefficient_sign_changes(p); }

MonicResult make_monic(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial cannot be made monic");
  return {monic(p), p.leading()};
}

RatPoly compose_from_factor_poly(const RatPoly& q, int n) {
  if (n < 1) throw DomainError("composition degree must be positive");
  const int N = n - 1;
  if (q.degree() > N) throw DomainError("factor polynomial degree exceeds n-1");
  const Rational scale = 1 / power(Rational(n), static_cast<unsigned>(N));
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational acc(0);
    for (int k = 0; k <= q.degree(); ++k) {
      const Rational& qk = q.coeffs()[static_cast<std::size_t>(k)];
      if (is_zero(qk)) continue;
      acc += qk * power(Rational(j), static_cast<unsigned>(k)) * power(Rational(n - j), static_cast<unsigned>(N - k));
    }
    c[static_cast<std::size_t>(j)] = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) * scale * acc;
  }
  return RatPoly(std::move(c));
}

RatPoly exp_from_factor_poly(const RatPoly& g) {
  return RatPoly(monomial_to_falling(g.coeffs()));
}

}  // namespace szego
