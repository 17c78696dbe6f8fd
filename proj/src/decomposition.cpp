#include "szego/decomposition.hpp"

#include "szego/composition.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

std::string to_string(Mode m) { return m == Mode::polynomial ? "polynomial" : "exponential"; }

Mode parse_mode(std::string_view text) {
  if (text == "polynomial" || text == "pol" || text == "poly") return Mode::polynomial;
  if (text == "exponential" || text == "exp") return Mode::exponential;
  throw DomainError("unknown mode '" + std::string(text) + "'");
}

namespace {

RatPoly quadratic_for(const GaussRational& z) {
  return RatPoly({z.norm(), -2 * z.re, Rational(1)});
}

bool gauss_less(const GaussRational& a, const GaussRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// Continued-fraction reconstruction of a small-height rational.
std::optional<Rational> rationalize(long double x) {
  if (!std::isfinite(x)) return std::nullopt;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double rest = x;
  for (int step = 0; step < 40; ++step) {
    long double fl = std::floor(rest);
    if (std::fabs(fl) > 1e15L) return std::nullopt;
    Integer a(static_cast<long>(fl));
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    long double approx = p1.get_d() / q1.get_d();
    if (std::fabs(approx - x) <= 1e-12L * std::max<long double>(1, std::fabs(x))) {
      Rational out(p1, q1);
      out.canonicalize();
      return out;
    }
    if (q1 > Integer(1000000000)) return std::nullopt;
    long double frac = rest - fl;
    if (frac == 0) return std::nullopt;
    rest = 1 / frac;
  }
  return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sign(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer num = sqrt(q.get_num());
  Integer den = sqrt(q.get_den());
  return Rational(num, den);
}

std::complex<long double> polish(const RatPoly& g, std::complex<long double> z) {
  std::vector<long double> c;
  for (const auto& q : g.coeffs()) c.push_back(static_cast<long double>(q.get_d()));
  for (int it = 0; it < 8; ++it) {
    std::complex<long double> v = 0;
    std::complex<long double> dv = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      dv = dv * z + v;
      v = v * z + c[i];
    }
    if (dv == std::complex<long double>(0)) break;
    z -= v / dv;
  }
  return z;
}

struct PairSplit {
  std::vector<GaussRational> pairs;
  RatPoly rest;
};

// Strips the Gaussian-rational conjugate pairs out of g.
PairSplit split_gaussian_pairs(RatPoly g) {
  PairSplit out;
  std::vector<std::complex<double>> approx;
  try {
    approx = complex_roots_approx(g, Rational(1, 1000000000));
  } catch (const DomainError&) {
    out.rest = std::move(g);
    return out;
  }
  for (const auto& z0 : approx) {
    if (z0.imag() <= 0 || g.degree() < 2) continue;
    auto z = polish(g, std::complex<long double>(z0.real(), z0.imag()));
    auto s = rationalize(2 * z.real());
    auto p = rationalize(std::norm(z));
    if (!s || !p) continue;
    RatPoly quad({*p, -*s, Rational(1)});
    auto [quo, rem] = divmod(g, quad);
    if (!rem.is_zero()) continue;
    Rational u = *s / 2;
    auto v = rational_sqrt(*p - u * u);
    if (!v || is_zero(*v)) continue;
    out.pairs.emplace_back(u, *v);
    g = std::move(quo);
  }
  out.rest = std::move(g);
  return out;
}

}  // namespace

FactorMultiset classify_factor_roots(const RatPoly& a_poly) {
  if (a_poly.is_zero()) throw DomainError("zero factor polynomial");
  FactorMultiset f;
  f.a_poly = monic(a_poly);
  RatPoly rest = f.a_poly;
  const RatPoly x = RatPoly::monomial(Rational(1), 1);
  while (rest.degree() >= 1 && is_zero(rest.coeff(0))) {
    rest = exact_div(rest, x);
    ++f.zeros;
  }
  if (rest.degree() < 1) return f;
  for (const auto& [factor, mult] : squarefree_decompose(rest)) {
    auto intervals = isolate_real_roots(factor);
    RatPoly nonreal = factor;
    for (const auto& iv : intervals) {
      for (int i = 0; i < mult; ++i) {
        if (iv.is_exact()) f.rational.push_back(iv.lo);
        else f.algebraic.push_back(iv);
      }
      if (iv.is_exact()) nonreal = exact_div(nonreal, RatPoly::linear_root(iv.lo));
    }
    const int nonreal_count = factor.degree() - static_cast<int>(intervals.size());
    if (nonreal_count == 0) continue;
    PairSplit split = split_gaussian_pairs(nonreal);
    for (const auto& z : split.pairs) {
      for (int i = 0; i < mult; ++i) f.complex_pairs.push_back(z);
    }
    const int leftover = nonreal_count / 2 - static_cast<int>(split.pairs.size());
    if (leftover > 0) {
      f.unresolved_pairs += leftover * mult;
      f.residual = f.residual * pow(split.rest, static_cast<unsigned>(mult));
      try {
        for (const auto& z : complex_roots_approx(split.rest, Rational(1, 1000000000))) {
          if (z.imag() > 0) {
            for (int i = 0; i < mult; ++i) f.unresolved_approx.push_back(z);
          }
        }
      } catch (const DomainError&) {
      }
    }
  }
  std::sort(f.rational.begin(), f.rational.end());
  std::sort(f.complex_pairs.begin(), f.complex_pairs.end(), gauss_less);
  std::sort(f.algebraic.begin(), f.algebraic.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return f;
}

FactorMultiset FactorMultiset::from_values(const std::vector<Rational>& reals, const std::vector<GaussRational>& pairs,
                                           int infinity, Rational scalar) {
  if (infinity < 0) throw DomainError("negative infinity count");
  if (is_zero(scalar)) throw DomainError("zero scalar");
  FactorMultiset f;
  f.infinity = infinity;
  f.scalar = std::move(scalar);
  for (const auto& r : reals) {
    f.a_poly = f.a_poly * RatPoly::linear_root(r);
    if (is_zero(r)) ++f.zeros;
    else f.rational.push_back(r);
  }
  for (const auto& z : pairs) {
    if (z.is_real()) throw DomainError("conjugate pair with zero imaginary part");
    GaussRational up = sign(z.im) > 0 ? z : z.conj();
    f.a_poly = f.a_poly * quadratic_for(up);
    f.complex_pairs.push_back(up);
  }
  std::sort(f.rational.begin(), f.rational.end());
  std::sort(f.complex_pairs.begin(), f.complex_pairs.end(), gauss_less);
  return f;
}

bool FactorMultiset::same_as(const FactorMultiset& other) const {
  return a_poly == other.a_poly && infinity == other.infinity && scalar == other.scalar &&
         zeros == other.zeros && rational == other.rational && complex_pairs == other.complex_pairs &&
         unresolved_pairs == other.unresolved_pairs && algebraic.size() == other.algebraic.size();
}

namespace {

void check_degree(int n) {
  if (n < 1) throw DomainError("composition degree must be positive");
}

// Q(t) = prod (t + a_i) from A(x) = prod (x - a_i).
RatPoly q_from_a(const RatPoly& a) {
  RatPoly q = reflect(a);
  return a.degree() % 2 == 0 ? q : -q;
}

FactorMultiset from_core(const RatPoly& core, int expected_count) {
  const int d = core.degree();
  FactorMultiset f = classify_factor_roots(q_from_a(monic(core)));
  f.scalar = core.leading();
  f.infinity = expected_count - d;
  return f;
}

}  // namespace

RatPoly poly_factor_core(const RatPoly& p, int n) {
  check_degree(n);
  if (p.is_zero()) throw DomainError("zero polynomial has no composition factors");
  if (p.degree() > n) throw DomainError("degree of p exceeds n");
  if (!is_zero(p(Rational(-1)))) throw DomainError("not of form (Pn-1)");
  const int N = n - 1;
  const Rational nN = power(Rational(n), static_cast<unsigned>(N));
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (int j = 0; j < n; ++j) {
    nodes.emplace_back(j, n - j);
    nodes.back().canonicalize();
    Rational pj = p.coeff(j) / Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    values.push_back(nN * pj / power(Rational(n - j), static_cast<unsigned>(N)));
  }
  return interpolate(nodes, values);
}

RatPoly exp_factor_core(const RatPoly& r) {
  if (r.is_zero()) throw DomainError("zero polynomial has no composition factors");
  return RatPoly(falling_to_monomial(r.coeffs()));
}

FactorMultiset decompose_poly(const RatPoly& p, int n) {
  RatPoly core = poly_factor_core(p, n);
  if (compose_from_factor_poly(core, n) != p) {
    throw DomainError("internal: recomposition gate failed in polynomial decomposition");
  }
  return from_core(core, n - 1);
}

FactorMultiset decompose_exp(const RatPoly& r) {
  RatPoly g = exp_factor_core(r);
  if (exp_from_factor_poly(g) != r) {
    throw DomainError("internal: recomposition gate failed in exponential decomposition");
  }
  const auto gamma = exp_series(ExpForm{r}, r.degree());
  for (int j = 0; j <= r.degree(); ++j) {
    if (gamma[static_cast<std::size_t>(j)] != g(Rational(j))) {
      throw DomainError("internal: series gate failed in exponential decomposition");
    }
  }
  return from_core(g, g.degree());
}

RatPoly compose_factors(const FactorMultiset& f, int n, Mode mode) {
  RatPoly core = q_from_a(f.a_poly) * f.scalar;
  if (mode == Mode::exponential) {
    if (f.infinity != 0) throw DomainError("infinite factors exist only in polynomial mode");
    return exp_from_factor_poly(core);
  }
  check_degree(n);
  if (f.count() != n - 1) throw DomainError("factor count differs from n-1");
  return compose_from_factor_poly(core, n);
}

std::vector<Rational> AffineMap::operator()(const std::vector<Rational>& c) const {
  auto out = matrix.apply(c);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i];
  return out;
}

RatPoly object_from_coords(const std::vector<Rational>& c, int n, Mode mode) {
  if (n < 2 || c.size() != static_cast<std::size_t>(n - 1)) throw DomainError("coordinate vector must have n-1 entries");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  if (mode == Mode::polynomial) {
    coeffs[static_cast<std::size_t>(n - 1)] = 1;
    for (int i = 1; i <= n - 1; ++i) coeffs[static_cast<std::size_t>(n - 1 - i)] = c[static_cast<std::size_t>(i - 1)];
    return RatPoly({Rational(1), Rational(1)}) * RatPoly(std::move(coeffs));
  }
  coeffs[0] = 1;
  for (int i = 1; i <= n - 1; ++i) coeffs[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)];
  return RatPoly(std::move(coeffs));
}

std::vector<Rational> phi_direct(const std::vector<Rational>& c, int n, Mode mode) {
  RatPoly obj = object_from_coords(c, n, mode);
  std::vector<Rational> sigma(static_cast<std::size_t>(n - 1));
  if (mode == Mode::polynomial) {
    FactorMultiset f = decompose_poly(obj, n);
    RatPoly q = q_from_a(f.a_poly);
    for (int j = 1; j <= n - 1; ++j) sigma[static_cast<std::size_t>(j - 1)] = q.coeff(n - 1 - j);
  } else {
    FactorMultiset f = decompose_exp(obj);
    RatPoly g = q_from_a(f.a_poly) * f.scalar;
    for (int j = 1; j <= n - 1; ++j) sigma[static_cast<std::size_t>(j - 1)] = g.coeff(j);
  }
  return sigma;
}

AffineMap phi_affine(int n, Mode mode) {
  if (n < 2) throw DomainError("the map needs n >= 2");
  const auto dim = static_cast<std::size_t>(n - 1);
  AffineMap map;
  map.n = n;
  map.mode = mode;
  map.offset = phi_direct(std::vector<Rational>(dim), n, mode);
  map.matrix = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim);
    e[i] = 1;
    auto col = phi_direct(e, n, mode);
    for (std::size_t r = 0; r < dim; ++r) map.matrix(r, i) = col[r] - map.offset[r];
  }
  return map;
}

EigenReport phi_eigen_check(const AffineMap& map) {
  EigenReport rep;
  rep.n = map.n;
  rep.mode = map.mode;
  rep.characteristic = characteristic_polynomial(map.matrix);
  rep.invertible = !is_zero(determinant(map.matrix));
  int found = 0;
  for (const auto& root : rational_roots(rep.characteristic)) {
    for (int i = 0; i < root.multiplicity; ++i) rep.eigenvalues.push_back(root.value);
    found += root.multiplicity;
  }
  rep.splits = found == rep.characteristic.degree();
  rep.all_positive = rep.splits && std::all_of(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                                               [](const Rational& e) { return sign(e) > 0; });
  if (!rep.splits) {
    rep.note = "characteristic polynomial " + to_string(rep.characteristic) + " does not split over the rationals";
  } else if (!rep.all_positive) {
    rep.note = "nonpositive eigenvalue present";
  }
  return rep;
}

EigenReport phi_eigen_check(int n, Mode mode) { return phi_eigen_check(phi_affine(n, mode)); }

}  // namespace szego
