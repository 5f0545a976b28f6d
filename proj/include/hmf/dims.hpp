#pragma once

// Dimension formulas for parallel-weight Hilbert modular forms: the volume
// term of the trace formula, elliptic contributions from the rotation-number
// data, the level-p dimension table, and the Poincare series of the
// symmetric ring.

#include <array>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

struct EllipticPointClass {
  int order;                   // 2, 3 or 7
  int multiplicity;
  std::array<Rat, 3> rotation; // (alpha_1, alpha_2, alpha_3)
};

// the five classes: orders 2, 3, 3, 7, 7 with multiplicities 4, 1, 3, 1, 3
const std::vector<EllipticPointClass>& elliptic_point_classes();

// sum over the classes of (1/N) sum_{j=1}^{N-1} prod_l
// exp(2 pi i k j a_l) / (1 - exp(2 pi i j a_l)), evaluated exactly in
// cyclotomic fields; the total is rational.  The j-sum excludes j = N, whose
// term is singular.
Rat elliptic_contribution(int k);

struct DimensionReport {
  std::string group;
  int k = 0;
  Rat cusp;
  Rat total;
  int cusps = 8;
};

// level p: cusp dimension 2(k-1)^3 for k >= 3 (3 at k = 2, 0 at k = 1);
// total adds one Eisenstein series per cusp (4 at k = 1)
DimensionReport dimension_gamma_p(int k);

// level one, even k >= 2: cusp dimension vol*(k-1)^3 + elliptic term;
// total adds the single Eisenstein series
DimensionReport dimension_gamma_1(int k);

struct VolumeConstants {
  Rat vol_sl2o;       // 1/84
  Rat vol_gamma_p;    // 2
  Rat zeta_K_minus1;  // -1/21, from vol = -zeta_K(-1)/4
};

VolumeConstants volume_constants();

// chi(kL) = 2(k-1)^3 as a polynomial identity in k
Rat euler_characteristic_kL(int k);

// coefficient of t^k in (1 + t^2 + t^4 + t^6)(1 - t)^{-4}
long poincare_invariant_ring(int k);

// the closed form 8 + (2/3)(k-1)^3 + (28k - 52)/3, valid for k >= 4
Rat poincare_closed_form(int k);

// linear part h(k) = (28k - 52)/3 of the invariant Euler characteristic
Rat galois_trace_term(int k);

}  // namespace hmf
