#include "oracles.hpp"
#include "szego/phi_map.hpp"

#include <doctest.h>

using namespace szego;
using oracle::q;

TEST_SUITE("phi_map") {
  TEST_CASE("report rows for n_max = 3") {
    auto rows = phi_report(3, Mode::polynomial);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].eigen.eigenvalues == std::vector<Rational>{1});
    CHECK(rows[1].eigen.eigenvalues == std::vector<Rational>{1, q("3/2")});
    for (const auto& r : rows) {
      CHECK(r.all_rational());
      CHECK(r.all_positive());
      CHECK(r.invertible());
    }
    CHECK_THROWS_AS(phi_report(1, Mode::polynomial), DomainError);
  }

  TEST_CASE("rows agree between serial and parallel runs") {
    for (Mode mode : {Mode::polynomial, Mode::exponential}) {
      auto a = phi_report(6, mode, 5, 3, true);
      auto b = phi_report(6, mode, 5, 3, false);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].eigen.eigenvalues == b[i].eigen.eigenvalues);
        CHECK(a[i].map.matrix == b[i].map.matrix);
        CHECK(a[i].affinity_mismatches == 0);
        CHECK(a[i].invertible());
      }
    }
  }

  TEST_CASE("affinity against full decomposition") {
    for (Mode mode : {Mode::polynomial, Mode::exponential}) {
      for (int n = 2; n <= 6; ++n) CHECK(phi_affinity_mismatches(phi_affine(n, mode), 20, 5) == 0);
    }
    AffineMap broken = phi_affine(4, Mode::polynomial);
    broken.offset[0] += 1;
    CHECK(phi_affinity_mismatches(broken, 5, 5) == 5);
  }
}
