#pragma once

// Seeded generators of small exact test data.

#include "szego/poly.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace szego {

class RandomSource {
 public:
  explicit RandomSource(std::initializer_list<std::uint64_t> key);

  int uniform(int lo, int hi);
  bool chance(int percent);
  /// p/q with |p| <= num_max, 1 <= q <= den_max.
  Rational rational(int num_max = 9, int den_max = 6);
  Rational nonzero_rational(int num_max = 9, int den_max = 6);
  /// Uniform on the dyadic grid of step 2^-20 in [0, 1).
  Rational unit();
  /// Random coefficients up to x^degree, leading coefficient nonzero.
  RatPoly poly(int degree, int num_max = 9, int den_max = 6);

 private:
  std::mt19937_64 gen_;
};

}  // namespace szego
