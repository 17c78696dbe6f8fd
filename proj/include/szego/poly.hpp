#pragma once

// Dense univariate polynomials with exact coefficients. Coefficients are kept
// in ascending order (index j holds the coefficient of x^j) and trailing zeros
// are always trimmed, so the zero polynomial has no coefficients at all.

#include "szego/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace szego {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }
  static Poly monomial(T value, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1);
    c.back() = std::move(value);
    return Poly(std::move(c));
  }
  /// x - root
  static Poly linear_root(const T& root) { return Poly({-root, T(1L)}); }

  [[nodiscard]] int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }
  [[nodiscard]] std::size_t size() const { return c_.size(); }

  /// Coefficient of x^j, zero outside the stored range.
  [[nodiscard]] T coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return T();
    return c_[static_cast<std::size_t>(j)];
  }
  [[nodiscard]] const T& leading() const { return c_.back(); }

  template <class U>
  [[nodiscard]] U operator()(const U& x) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  [[nodiscard]] Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * T(static_cast<long>(j));
    return Poly(std::move(d));
  }

  /// x * p
  [[nodiscard]] Poly shift_up(int k = 1) const {
    if (is_zero()) return {};
    std::vector<T> d(static_cast<std::size_t>(k), T());
    d.insert(d.end(), c_.begin(), c_.end());
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using GaussRatPoly = Poly<GaussRational>;

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned exponent) {
  Poly<T> result = Poly<T>::constant(T(1L));
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// (x + 1)^k
RatPoly x_plus_one_pow(unsigned k);

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

/// Euclidean division; throws on a zero divisor.
DivMod divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// a / b, throws unless the division is exact.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// p(-x)
RatPoly reflect(const RatPoly& p);
/// Multiplicity of `root` as a root of p (p nonzero).
int root_multiplicity(const RatPoly& p, const Rational& root);
/// Number of sign alternations in the sequence of nonzero coefficients.
int coefficient_sign_changes(const RatPoly& p);

RatPoly real_part(const GaussRatPoly& p);
RatPoly imag_part(const GaussRatPoly& p);
GaussRatPoly to_gauss(const RatPoly& p);
GaussRatPoly conj(const GaussRatPoly& p);

/// Integer polynomial proportional to p with coprime coefficients and
/// positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const RatPoly& p);

std::string to_string(const RatPoly& p);

}  // namespace szego
