#pragma once

// The coefficient-to-symmetric-function map as a standalone report.

#include "szego/decomposition.hpp"

#include <cstdint>
#include <vector>

namespace szego {

struct PhiRow {
  int n = 0;
  Mode mode = Mode::polynomial;
  AffineMap map;
  EigenReport eigen;
  int affinity_samples = 0;
  int affinity_mismatches = 0;

  [[nodiscard]] bool all_rational() const { return eigen.splits; }
  [[nodiscard]] bool all_positive() const { return eigen.all_positive; }
  [[nodiscard]] bool invertible() const { return eigen.invertible; }
};

/// Number of random coordinate vectors (entries p/q, |p| <= 9, 1 <= q <= 6)
/// on which map(c) differs from phi_direct(c).
int phi_affinity_mismatches(const AffineMap& map, int samples, std::uint64_t seed);

/// Rows for n = 2..n_max. Rows are independent and run in parallel unless
/// `parallel` is false.
std::vector<PhiRow> phi_report(int n_max, Mode mode, int affinity_samples = 0, std::uint64_t seed = 1,
                               bool parallel = true);

}  // namespace szego
