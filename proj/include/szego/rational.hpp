#pragma once

// Exact number towers: arbitrary-precision rationals (GMP) and Gaussian
// rationals a + bi with rational parts.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace szego {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for every violated precondition or failed mathematical check in the
/// library. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". The result is canonical (lowest terms, q > 0).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational power(const Rational& base, unsigned exponent);
Integer binomial(unsigned n, unsigned k);

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit widening is intended
  GaussRational(long real) : re(real) {}                 // NOLINT
  GaussRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  [[nodiscard]] GaussRational conj() const { return {re, -im}; }
  [[nodiscard]] Rational norm() const { return Rational(re * re + im * im); }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational d = o.norm();
    if (sgn(d) == 0) throw DomainError("division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const GaussRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

std::string to_string(const GaussRational& z);

}  // namespace szego
