#pragma once

// Randomized and exhaustive law sweeps over the whole pipeline. Each sweep is
// deterministic in its seed; cases run in parallel unless disabled.

#include "szego/decomposition.hpp"
#include "szego/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace szego {

struct LawConfig {
  std::uint64_t seed = 1;
  double scale = 1.0;  // multiplies every case count
  bool parallel = true;

  [[nodiscard]] long count(long full) const;
};

struct LawResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;  // from the lowest failing case index
  std::string note;
  double seconds = 0;

  [[nodiscard]] bool passed() const { return cases > 0 && failures == 0; }
};

/// Failure message or nullopt. Exceptions thrown by a check count as failures.
using CaseCheck = std::function<std::optional<std::string>(long index, RandomSource& rng)>;

/// Runs check(i, rng_i) for i < count with rng_i keyed by (seed, salt, i).
LawResult sweep(std::string name, long count, const LawConfig& cfg, std::uint64_t salt, const CaseCheck& check);

struct RandomMultiset {
  int n = 2;  // composition degree; exponential objects have degree n - 1
  std::vector<Rational> reals;
  std::vector<GaussRational> pairs;  // im > 0
  int infinity = 0;
  Rational scalar{1};

  [[nodiscard]] FactorMultiset expected() const;
};

/// n - 1 slots filled with zeros, special values, random rationals and
/// conjugate pairs.
RandomMultiset random_multiset(RandomSource& rng, int n, Mode mode, bool allow_infinity);
/// Literal composition of the individual factors, independent of the
/// factor-polynomial shortcut.
RatPoly compose_literally(const RandomMultiset& m, Mode mode);

LawResult law_identity(const LawConfig& cfg);
LawResult law_roundtrip(const LawConfig& cfg, Mode mode);
std::vector<LawResult> law_formula_suite(const LawConfig& cfg);
LawResult law_zero_multiplicity(const LawConfig& cfg, Mode mode);
LawResult law_necessary(const LawConfig& cfg, Mode mode);
LawResult law_base_structure(const LawConfig& cfg, Mode mode);
LawResult law_couple_closed_forms(const LawConfig& cfg, Mode mode);
LawResult law_couple_schedule(const LawConfig& cfg, Mode mode);
LawResult law_realize_all(const LawConfig& cfg, int n_max, Mode mode);
LawResult law_phi(const LawConfig& cfg, int n_max, Mode mode);

}  // namespace szego
