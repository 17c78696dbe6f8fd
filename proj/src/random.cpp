#include "szego/random.hpp"

#include <vector>

namespace szego {

RandomSource::RandomSource(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  for (auto k : key) {
    words.push_back(static_cast<std::uint32_t>(k));
    words.push_back(static_cast<std::uint32_t>(k >> 32U));
  }
  std::seed_seq seq(words.begin(), words.end());
  gen_.seed(seq);
}

int RandomSource::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen_() % span);
}

bool RandomSource::chance(int percent) { return uniform(0, 99) < percent; }

Rational RandomSource::rational(int num_max, int den_max) {
  Rational q(uniform(-num_max, num_max), uniform(1, den_max));
  q.canonicalize();
  return q;
}

Rational RandomSource::nonzero_rational(int num_max, int den_max) {
  for (;;) {
    Rational q = rational(num_max, den_max);
    if (!is_zero(q)) return q;
  }
}

Rational RandomSource::unit() {
  Rational u(Integer(static_cast<unsigned long>(gen_() >> 44U)), Integer(1UL << 20U));
  u.canonicalize();
  return u;
}

RatPoly RandomSource::poly(int degree, int num_max, int den_max) {
  std::vector<Rational> c;
  for (int j = 0; j < degree; ++j) c.push_back(rational(num_max, den_max));
  c.push_back(nonzero_rational(num_max, den_max));
  return RatPoly(std::move(c));
}

}  // namespace szego
