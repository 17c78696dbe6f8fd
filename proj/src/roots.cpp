#include "szego/roots.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace szego {

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  if (a.kind_ != Bound::Kind::finite) return false;
  return a.value_ < b.value_;
}

int sign_at(const RatPoly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case Bound::Kind::pos_inf:
      return sign(p.leading());
    case Bound::Kind::neg_inf:
      return (p.degree() % 2 == 0 ? 1 : -1) * sign(p.leading());
    case Bound::Kind::finite:
      break;
  }
  return sign(p(x.value()));
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no root count");
  std::vector<RatPoly> seq;
  seq.push_back(squarefree_part(p));
  if (seq.back().degree() == 0) return seq;
  seq.push_back(seq.back().derivative());
  while (true) {
    RatPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs and tames coefficient growth.
    Rational scale = abs(r.leading());
    seq.push_back(-(r * (1 / scale)));
  }
  return seq;
}

namespace {

int sign_variations(std::span<const RatPoly> seq, const Bound& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sturm_count(std::span<const RatPoly> sequence, const Bound& lo, const Bound& hi) {
  if (!(lo < hi)) throw DomainError("sturm_count requires lo < hi");
  return sign_variations(sequence, lo) - sign_variations(sequence, hi);
}

int sturm_count(const RatPoly& p, const Bound& lo, const Bound& hi) {
  auto seq = sturm_sequence(p);
  return sturm_count(seq, lo, hi);
}

std::vector<SquarefreeFactor> squarefree_decompose(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no square-free decomposition");
  std::vector<SquarefreeFactor> out;
  RatPoly f = monic(p);
  if (f.degree() == 0) return out;
  RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = exact_div(f, a);
  RatPoly c = exact_div(df, a);
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    RatPoly nb = exact_div(b, g);
    RatPoly nc = exact_div(d, g);
    d = nc - nb.derivative();
    b = std::move(nb);
    ++i;
  }
  return out;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no square-free part");
  RatPoly f = monic(p);
  if (f.degree() <= 0) return f;
  return monic(exact_div(f, gcd(f, f.derivative())));
}

int count_roots_with_multiplicity(const RatPoly& p, const Bound& lo, const Bound& hi) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decompose(p)) total += mult * sturm_count(factor, lo, hi);
  return total;
}

RatPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.empty() || nodes.size() != values.size()) {
    throw DomainError("interpolate needs matching, nonempty node and value lists");
  }
  const std::size_t m = nodes.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (nodes[i] == nodes[j]) throw DomainError("interpolate: duplicate node " + to_string(nodes[i]));
    }
  }
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  RatPoly result = RatPoly::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * RatPoly::linear_root(nodes[i]) + RatPoly::constant(dd[i]);
  }
  return result;
}

namespace {

class StirlingTables {
 public:
  Integer first(unsigned n, unsigned k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k <= n ? first_[n][k] : Integer(0);
  }
  Integer second(unsigned n, unsigned k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k <= n ? second_[n][k] : Integer(0);
  }

 private:
  void grow(unsigned n) {
    if (first_.empty()) {
      first_.push_back({Integer(1)});
      second_.push_back({Integer(1)});
    }
    while (first_.size() <= n) {
      const unsigned m = static_cast<unsigned>(first_.size());
      const auto& pf = first_.back();
      const auto& ps = second_.back();
      std::vector<Integer> f(m + 1), s(m + 1);
      for (unsigned k = 0; k <= m; ++k) {
        Integer left = (k >= 1) ? pf[k - 1] : Integer(0);
        Integer keep_f = (k < m) ? pf[k] : Integer(0);
        Integer keep_s = (k < m) ? ps[k] : Integer(0);
        Integer left_s = (k >= 1) ? ps[k - 1] : Integer(0);
        // s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k);  S(m, k) = S(m-1, k-1) + k S(m-1, k)
        f[k] = left - Integer(m - 1) * keep_f;
        s[k] = left_s + Integer(k) * keep_s;
      }
      first_.push_back(std::move(f));
      second_.push_back(std::move(s));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> first_;
  std::vector<std::vector<Integer>> second_;
};

StirlingTables& stirling_tables() {
  static StirlingTables tables;
  return tables;
}

}  // namespace

Integer stirling_first(unsigned n, unsigned k) { return stirling_tables().first(n, k); }
Integer stirling_second(unsigned n, unsigned k) { return stirling_tables().second(n, k); }

std::vector<Rational> falling_to_monomial(std::span<const Rational> c) {
  std::vector<Rational> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      out[i] += c[k] * Rational(stirling_first(static_cast<unsigned>(k), static_cast<unsigned>(i)));
    }
  }
  return out;
}

std::vector<Rational> monomial_to_falling(std::span<const Rational> c) {
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    for (std::size_t k = 0; k <= i; ++k) {
      out[k] += c[i] * Rational(stirling_second(static_cast<unsigned>(i), static_cast<unsigned>(k)));
    }
  }
  return out;
}

int IsolatingInterval::root_sign() const {
  if (is_exact()) return sign(lo);
  return sign(lo) + sign(hi) > 0 ? 1 : -1;
}

bool IsolatingInterval::check() const {
  if (poly.degree() < 1) return false;
  if (is_exact()) return is_zero(poly(lo));
  if (!(lo < hi)) return false;
  if (sign(lo) < 0 && sign(hi) > 0) return false;
  if (is_zero(poly(hi)) || is_zero(poly(lo))) return false;
  return sturm_count(poly, lo, hi) == 1;
}

namespace {

Rational cauchy_bound(const RatPoly& p) {
  Rational best(0);
  const Rational& lead = p.leading();
  for (int j = 0; j < p.degree(); ++j) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(j)] / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

class Isolator {
 public:
  explicit Isolator(RatPoly squarefree)
      : p_(std::move(squarefree)), seq_(sturm_sequence(p_)) {
    auto ints = primitive_integer_coeffs(p_);
    lead_ = abs(ints.back());
  }

  void run(const Rational& a, const Rational& b, std::vector<IsolatingInterval>& out) {
    int count = sturm_count(seq_, a, b);
    split(a, b, count, out);
  }

 private:
  void split(const Rational& a, const Rational& b, int count, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
      out.push_back(single(a, b));
      return;
    }
    Rational mid = (a + b) / 2;
    int left = sturm_count(seq_, a, mid);
    split(a, mid, left, out);
    split(mid, b, count - left, out);
  }

  // Exactly one root in (a, b]. A rational root u/v of the primitive integer
  // form has v | lead, so once the interval is shorter than 1/lead the only
  // candidate is the single multiple of 1/lead inside it.
  IsolatingInterval single(Rational a, Rational b) {
    if (is_zero(p_(b))) return {b, b, p_};
    const Rational a0 = a;
    const Rational b0 = b;
    const Rational unit = Rational(1) / Rational(lead_);
    while ((b - a) >= unit) {
      Rational mid = (a + b) / 2;
      if (is_zero(p_(mid))) return {mid, mid, p_};
      if (sturm_count(seq_, a, mid) == 1) b = mid;
      else a = mid;
    }
    Integer k;
    Rational scaled = a * Rational(lead_);
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational candidate(Integer(k + 1), lead_);
    candidate.canonicalize();
    if (a < candidate && candidate < b && is_zero(p_(candidate))) return {candidate, candidate, p_};
    return {a0, b0, p_};
  }

  RatPoly p_;
  std::vector<RatPoly> seq_;
  Integer lead_;
};

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no isolated roots");
  std::vector<IsolatingInterval> out;
  RatPoly s = squarefree_part(p);
  if (s.degree() < 1) return out;
  const RatPoly whole = s;
  bool zero_root = is_zero(s.coeff(0));
  if (zero_root) s = exact_div(s, RatPoly::monomial(Rational(1), 1));
  if (s.degree() >= 1) {
    Rational bound = cauchy_bound(s);
    Isolator iso(s);
    iso.run(-bound, Rational(0), out);
    if (zero_root) out.push_back({Rational(0), Rational(0), s});
    iso.run(Rational(0), bound, out);
  } else if (zero_root) {
    out.push_back({Rational(0), Rational(0), s});
  }
  for (auto& iv : out) {
    if (zero_root && !iv.is_exact() && (is_zero(iv.lo) || is_zero(iv.hi))) {
      // Pull the endpoint off 0, which is a root of the whole polynomial.
      const bool upper = is_zero(iv.lo);
      Rational t = upper ? iv.hi : iv.lo;
      do {
        t /= 2;
      } while (is_zero(s(t)) || (upper ? sturm_count(s, Bound(0L), Bound(t)) : sturm_count(s, Bound(t), Bound(0L))) != 0);
      (upper ? iv.lo : iv.hi) = t;
    }
    iv.poly = whole;
  }
  return out;
}

std::vector<RationalRoot> rational_roots(const RatPoly& p) {
  std::vector<RationalRoot> out;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    for (const auto& iv : isolate_real_roots(factor)) {
      if (iv.is_exact()) out.push_back({iv.lo, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

namespace {

using cd = std::complex<double>;

struct AberthResult {
  std::vector<cd> roots;
  double worst_residual = 0;
};

double relative_residual(const std::vector<double>& c, cd z) {
  cd value = 0;
  double scale = 0;
  double r = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    value = value * z + c[i];
    scale = scale * r + std::abs(c[i]);
  }
  return scale == 0 ? 0 : std::abs(value) / scale;
}

AberthResult aberth(const RatPoly& f) {
  const int n = f.degree();
  RatPoly m = monic(f);
  std::vector<double> c;
  c.reserve(m.size());
  for (const auto& q : m.coeffs()) c.push_back(q.get_d());
  AberthResult res;
  if (n == 1) {
    res.roots.push_back(cd(-c[0], 0));
    res.worst_residual = relative_residual(c, res.roots[0]);
    return res;
  }
  double radius = 0;
  for (int j = 0; j < n; ++j) radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(j)]), 1.0 / (n - j)));
  if (radius == 0) radius = 1;
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = 2 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius * (1 + 0.05 * k / n), angle);
  }
  auto eval = [&](cd x, cd& dv) {
    cd v = 0;
    dv = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      dv = dv * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int iter = 0; iter < 800; ++iter) {
    double biggest = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      cd dv;
      cd v = eval(z[k], dv);
      if (v == cd(0)) continue;
      cd ratio = v / dv;
      cd sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      cd w = ratio / (1.0 - ratio * sum);
      z[k] -= w;
      biggest = std::max(biggest, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (biggest < 1e-16) break;
  }
  res.roots = z;
  for (auto& r : res.roots) res.worst_residual = std::max(res.worst_residual, relative_residual(c, r));
  return res;
}

}  // namespace

std::vector<std::complex<double>> complex_roots_approx(const RatPoly& p, const Rational& tol) {
  if (p.is_zero()) throw DomainError("zero polynomial has no roots");
  if (sign(tol) <= 0) throw DomainError("tolerance must be positive");
  const double t = tol.get_d();
  std::vector<std::complex<double>> out;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    AberthResult r = aberth(factor);
    if (!(r.worst_residual < t)) {
      std::ostringstream msg;
      msg << "complex root iteration did not converge; best residual " << r.worst_residual;
      throw DomainError(msg.str());
    }
    for (const auto& z : r.roots) {
      for (int i = 0; i < mult; ++i) out.push_back(z);
    }
  }
  return out;
}

}  // namespace szego
