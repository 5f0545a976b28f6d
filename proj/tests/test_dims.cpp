#include "doctest.h"
#include "hmf/dims.hpp"
#include "hmf/grouprep.hpp"
#include "hmf/ideals.hpp"

using namespace hmf;

TEST_CASE("rotation-number table") {
  const auto& table = elliptic_point_classes();
  REQUIRE(table.size() == 5);
  int points = 0;
  for (const auto& cls : table) points += cls.multiplicity;
  CHECK(points == 12);
}

TEST_CASE("elliptic contributions are rational for even weights") {
  // frozen values; the weight-8 entry forces the cusp dimension 4 below
  CHECK(elliptic_contribution(2) == Rat(-85, 84));
  CHECK(elliptic_contribution(4) == Rat(19, 28));
  CHECK(elliptic_contribution(6) == Rat(43, 84));
  CHECK(elliptic_contribution(8) == Rat(-1, 12));
  CHECK(elliptic_contribution(10) == Rat(-19, 28));
  CHECK(elliptic_contribution(12) == Rat(13, 84));
  CHECK_THROWS_AS(elliptic_contribution(3), std::invalid_argument);
}

TEST_CASE("level-p dimension table") {
  DimensionReport k1 = dimension_gamma_p(1);
  CHECK(k1.cusp == 0);
  CHECK(k1.total == 4);
  DimensionReport k2 = dimension_gamma_p(2);
  CHECK(k2.cusp == 3);
  CHECK(k2.total == 11);
  DimensionReport k4 = dimension_gamma_p(4);
  CHECK(k4.cusp == 54);
  CHECK(k4.total == 62);
  for (int k = 2; k <= 10; ++k) {
    DimensionReport d = dimension_gamma_p(k);
    Rat eisenstein_part = d.total - d.cusp;
    CHECK(eisenstein_part == count_cusps().count);
  }
}

TEST_CASE("level-one dimensions cross-checked against invariant counts") {
  DimensionReport w8 = dimension_gamma_1(8);
  CHECK(w8.cusp == 4);
  CHECK(w8.total == 5);
  // weight 8: six invariants minus the one relation
  CHECK(w8.total == (long)invariant_basis_deg8().size() - 1);

  // weight 4 and 6 match the invariant strata (no relations below degree 8):
  // degree 4: Sym^4 plus E_2^2; degree 6: Sym^6 plus E_2 Sym^4 plus E_2^3
  DimensionReport w4 = dimension_gamma_1(4);
  CHECK(w4.total == invariant_dimension(4) + 1);
  DimensionReport w6 = dimension_gamma_1(6);
  CHECK(w6.total == invariant_dimension(6) + invariant_dimension(4) + 1);
}

TEST_CASE("volume constants") {
  VolumeConstants v = volume_constants();
  CHECK(v.vol_sl2o == Rat(1, 84));
  CHECK(v.vol_gamma_p == 2);
  CHECK(v.zeta_K_minus1 == Rat(-1, 21));
}

TEST_CASE("Poincare series of the symmetric ring") {
  // independent oracle: convolve (1 + t^2 + t^4 + t^6) with the coefficients
  // of (1-t)^{-4} directly
  auto oracle = [](int k) {
    long total = 0;
    for (int j : {0, 2, 4, 6}) {
      if (k - j < 0) continue;
      long n = k - j, binom = 1;
      for (long i = 1; i <= 3; ++i) binom = binom * (n + i) / i;
      total += binom;
    }
    return total;
  };
  for (int k = 0; k <= 12; ++k) CHECK(poincare_invariant_ring(k) == oracle(k));
  CHECK(poincare_invariant_ring(0) == 1);
  CHECK(poincare_invariant_ring(4) == 46);

  for (int k = 4; k <= 12; ++k)
    CHECK(Rat(poincare_invariant_ring(k)) == poincare_closed_form(k));

  CHECK(galois_trace_term(2) == Rat(4, 3));
  CHECK(galois_trace_term(3) == Rat(32, 3));

  // of the two readings of the cubic term, only the quadratic one matches
  for (int k = 4; k <= 8; ++k) {
    Rat km(k);
    Rat quadratic_reading = Rat(2, 3) * km * km * km - 2 * km * km + Rat(34, 3) * km - 10;
    Rat cubic_reading = Rat(2, 3) * km * km * km - 2 * km * km * km + Rat(34, 3) * km - 10;
    CHECK(Rat(poincare_invariant_ring(k)) == quadratic_reading);
    CHECK(Rat(poincare_invariant_ring(k)) != cubic_reading);
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic_kL(1) == 0);
  CHECK(euler_characteristic_kL(4) == 54);
}
