#pragma once

// Exact root counting and isolation for rational polynomials, plus the
// interpolation and falling-factorial conversions used by the factor
// decomposition. Everything here is exact except complex_roots_approx, which
// exists for reporting only.

#include "szego/poly.hpp"

#include <complex>
#include <span>
#include <vector>

namespace szego {

/// A rational number or one of the two infinities.
class Bound {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  Bound(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT
  Bound(long value) : kind_(Kind::finite), value_(value) {}                 // NOLINT
  static Bound neg_inf() { return Bound(Kind::neg_inf); }
  static Bound pos_inf() { return Bound(Kind::pos_inf); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool finite() const { return kind_ == Kind::finite; }
  [[nodiscard]] const Rational& value() const { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Sign of p at a finite point or at +-infinity.
int sign_at(const RatPoly& p, const Bound& x);

/// Sturm sequence of the square-free part of p.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int sturm_count(const RatPoly& p, const Bound& lo, const Bound& hi);
int sturm_count(std::span<const RatPoly> sequence, const Bound& lo, const Bound& hi);

struct SquarefreeFactor {
  RatPoly factor;  // monic, square-free
  int multiplicity = 0;
};

/// Yun's algorithm. The product of factor^multiplicity equals monic(p).
std::vector<SquarefreeFactor> squarefree_decompose(const RatPoly& p);
RatPoly squarefree_part(const RatPoly& p);

/// Real roots in (lo, hi] counted with multiplicity.
int count_roots_with_multiplicity(const RatPoly& p, const Bound& lo, const Bound& hi);

/// Lagrange interpolation through (nodes[i], values[i]) in Newton form.
RatPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

/// Monomial coefficients of sum_k c[k] * t(t-1)...(t-k+1).
std::vector<Rational> falling_to_monomial(std::span<const Rational> c);
/// Inverse of falling_to_monomial.
std::vector<Rational> monomial_to_falling(std::span<const Rational> c);

/// Signed Stirling numbers of the first kind s(n, k) (cached, thread-safe).
Integer stirling_first(unsigned n, unsigned k);
/// Stirling numbers of the second kind S(n, k) (cached, thread-safe).
Integer stirling_second(unsigned n, unsigned k);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  RatPoly poly;  // square-free defining polynomial

  /// lo == hi marks an exact rational root.
  [[nodiscard]] bool is_exact() const { return lo == hi; }
  /// -1, 0 or +1; well defined because intervals never straddle zero.
  [[nodiscard]] int root_sign() const;
  /// Exactly one root of poly in (lo, hi), or poly(lo) == 0 for exact ones,
  /// and the interval does not straddle 0.
  [[nodiscard]] bool check() const;
};

/// One interval per distinct real root, sorted ascending. Rational roots are
/// returned as degenerate intervals [r, r].
std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
};

/// All rational roots with multiplicity, ascending.
std::vector<RationalRoot> rational_roots(const RatPoly& p);

/// deg(p) approximate complex roots (with multiplicity) such that the relative
/// residual |p(z)| / sum_i |p_i| |z|^i at each returned z is below tol.
/// Aberth-Ehrlich iteration on each square-free factor.
std::vector<std::complex<double>> complex_roots_approx(const RatPoly& p, const Rational& tol);

}  // namespace szego
