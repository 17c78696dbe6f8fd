#include "szego/poly.hpp"

#include <sstream>

namespace szego {

RatPoly x_plus_one_pow(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = Rational(binomial(k, j));
  return RatPoly(std::move(c));
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    auto iu = static_cast<std::size_t>(i);
    if (is_zero(r[iu])) continue;
    Rational f = r[iu] / lead;
    for (int j = 0; j <= db; ++j) r[iu - static_cast<std::size_t>(db - j)] -= f * d[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).remainder; }

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = monic(a);
  RatPoly y = monic(b);
  while (!y.is_zero()) {
    RatPoly r = monic(x % y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

RatPoly reflect(const RatPoly& p) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return RatPoly(std::move(c));
}

int root_multiplicity(const RatPoly& p, const Rational& root) {
  if (p.is_zero()) throw DomainError("zero polynomial has no root multiplicity");
  int m = 0;
  RatPoly cur = p;
  const RatPoly lin = RatPoly::linear_root(root);
  while (cur.degree() >= 1) {
    auto [q, r] = divmod(cur, lin);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

int coefficient_sign_changes(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no sign changes");
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RatPoly real_part(const GaussRatPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& z : p.coeffs()) c.push_back(z.re);
  return RatPoly(std::move(c));
}

RatPoly imag_part(const GaussRatPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& z : p.coeffs()) c.push_back(z.im);
  return RatPoly(std::move(c));
}

GaussRatPoly to_gauss(const RatPoly& p) {
  std::vector<GaussRational> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return GaussRatPoly(std::move(c));
}

GaussRatPoly conj(const GaussRatPoly& p) {
  std::vector<GaussRational> c;
  c.reserve(p.size());
  for (const auto& z : p.coeffs()) c.push_back(z.conj());
  return GaussRatPoly(std::move(c));
}

std::vector<Integer> primitive_integer_coeffs(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no primitive form");
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (is_zero(c)) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    Rational a = abs(c);
    if (j == 0 || a != 1) os << to_string(a);
    if (j >= 1) os << (a != 1 ? "*x" : "x");
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

}  // namespace szego
