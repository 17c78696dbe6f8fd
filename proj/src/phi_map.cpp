#include "szego/phi_map.hpp"

#include "szego/random.hpp"

#include <exception>

namespace szego {

int phi_affinity_mismatches(const AffineMap& map, int samples, std::uint64_t seed) {
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    RandomSource rng({seed, static_cast<std::uint64_t>(map.n), static_cast<std::uint64_t>(map.mode),
                      static_cast<std::uint64_t>(i), 0x9417ULL});
    std::vector<Rational> c;
    for (int j = 1; j < map.n; ++j) c.push_back(rng.rational());
    if (map(c) != phi_direct(c, map.n, map.mode)) ++bad;
  }
  return bad;
}

std::vector<PhiRow> phi_report(int n_max, Mode mode, int affinity_samples, std::uint64_t seed, bool parallel) {
  if (n_max < 2) throw DomainError("phi_report needs n_max >= 2");
  const int count = n_max - 1;
  std::vector<PhiRow> rows(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    try {
      PhiRow row;
      row.n = i + 2;
      row.mode = mode;
      row.map = phi_affine(row.n, mode);
      row.eigen = phi_eigen_check(row.map);
      row.affinity_samples = affinity_samples;
      row.affinity_mismatches = phi_affinity_mismatches(row.map, affinity_samples, seed);
      rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (...) {
#pragma omp critical(phi_report_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace szego
