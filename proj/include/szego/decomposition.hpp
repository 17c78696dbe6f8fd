#pragma once

// Recovery of the composition factors a_i from P (polynomial mode) or from R
// (exponential mode), and the affine map from coefficients to the elementary
// symmetric functions of the a_i.

#include "szego/linalg.hpp"
#include "szego/roots.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace szego {

enum class Mode { polynomial, exponential };

std::string to_string(Mode m);
Mode parse_mode(std::string_view text);

/// The multiset {a_i}. `a_poly` = prod (x - a_i) over the finite a_i is the
/// exact source of truth; the lists below are its classified view.
struct FactorMultiset {
  std::vector<Rational> rational;           // nonzero rational a_i, ascending
  std::vector<GaussRational> complex_pairs; // one entry (im > 0) per conjugate pair
  std::vector<IsolatingInterval> algebraic; // irrational real a_i, ascending
  // Monic product of the leftover factors holding the nonreal a_i that are
  // not Gaussian-rational (it may also carry real irrational a_i listed above).
  RatPoly residual{Rational(1)};
  int unresolved_pairs = 0;
  std::vector<std::complex<double>> unresolved_approx;  // reporting only
  int zeros = 0;
  int infinity = 0;
  Rational scalar{1};
  RatPoly a_poly{Rational(1)};

  /// Finite a_i plus K_infinity factors.
  [[nodiscard]] int count() const { return a_poly.degree() + infinity; }
  [[nodiscard]] int pair_count() const { return static_cast<int>(complex_pairs.size()) + unresolved_pairs; }
  /// Builds a multiset from explicit values. Zeros may be included among `reals`.
  static FactorMultiset from_values(const std::vector<Rational>& reals, const std::vector<GaussRational>& pairs,
                                    int infinity = 0, Rational scalar = Rational(1));
  /// Same multiset (ignores approximations).
  [[nodiscard]] bool same_as(const FactorMultiset& other) const;
};

/// Classifies the roots of a monic a_poly into a FactorMultiset (scalar 1).
FactorMultiset classify_factor_roots(const RatPoly& a_poly);

/// Q(t) = prod (t + a_i) for a polynomial of form (x+1) * (...), deg <= n.
/// Not normalized: its leading coefficient is the scalar of P.
RatPoly poly_factor_core(const RatPoly& p, int n);
/// G(t) with G(j) equal to the j-th series coefficient of e^x r.
RatPoly exp_factor_core(const RatPoly& r);

FactorMultiset decompose_poly(const RatPoly& p, int n);
FactorMultiset decompose_exp(const RatPoly& r);

/// P (polynomial mode, degree n) or R (exponential mode) from a multiset.
RatPoly compose_factors(const FactorMultiset& f, int n, Mode mode);

struct AffineMap {
  int n = 0;
  Mode mode = Mode::polynomial;
  Matrix matrix;
  std::vector<Rational> offset;

  [[nodiscard]] std::vector<Rational> operator()(const std::vector<Rational>& c) const;
};

/// Object from coordinates: P = (x+1)(x^{n-1} + c_1 x^{n-2} + ... + c_{n-1})
/// or R = 1 + c_1 x + ... + c_{n-1} x^{n-1}.
RatPoly object_from_coords(const std::vector<Rational>& c, int n, Mode mode);
/// sigma_j = e_j(a_i) (polynomial) or the coefficients of G (exponential),
/// computed through the full decomposition.
std::vector<Rational> phi_direct(const std::vector<Rational>& c, int n, Mode mode);
AffineMap phi_affine(int n, Mode mode);

struct EigenReport {
  int n = 0;
  Mode mode = Mode::polynomial;
  RatPoly characteristic;
  std::vector<Rational> eigenvalues;  // with multiplicity, ascending
  bool splits = false;
  bool all_positive = false;
  bool invertible = false;
  std::string note;
};
EigenReport phi_eigen_check(const AffineMap& map);
EigenReport phi_eigen_check(int n, Mode mode);

}  // namespace szego
