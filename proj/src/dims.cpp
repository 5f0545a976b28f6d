#include "hmf/dims.hpp"

#include <stdexcept>
#include <string>

#include "hmf/cyclotomic.hpp"

namespace hmf {

const std::vector<EllipticPointClass>& elliptic_point_classes() {
  static const std::vector<EllipticPointClass> table = {
      {2, 4, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}},
      {3, 1, {Rat(1, 3), Rat(1, 3), Rat(1, 3)}},
      {3, 3, {Rat(1, 3), Rat(1, 3), Rat(2, 3)}},
      {7, 1, {Rat(1, 7), Rat(2, 7), Rat(4, 7)}},
      {7, 3, {Rat(1, 7), Rat(2, 7), Rat(3, 7)}},
  };
  return table;
}

namespace {

template <int N>
Rat class_contribution(const EllipticPointClass& cls, int k) {
  using C = Cyclo<N>;
  std::array<long, 3> m;
  for (int l = 0; l < 3; ++l) {
    Rat scaled = cls.rotation[(size_t)l] * N;
    if (scaled.get_den() != 1) throw std::logic_error("rotation number has wrong denominator");
    m[(size_t)l] = scaled.get_num().get_si();
  }
  // The fiber of the weight-k bundle rotates by half the tangent angle, so
  // the numerator carries k/2 per coordinate.  The j = N term is singular
  // and is excluded; rationality of the total checks the convention.
  C total(0);
  for (long j = 1; j < N; ++j) {
    C term(Rat(1));
    for (int l = 0; l < 3; ++l) {
      C numer = C::zeta_pow((k / 2) * j * m[(size_t)l]);
      C denom = C(Rat(1)) - C::zeta_pow(j * m[(size_t)l]);
      term *= numer * denom.inverse();
    }
    total += term;
  }
  Rat value = total.rational_part() * Rat(1, N);
  return value * cls.multiplicity;
}

}  // namespace

Rat elliptic_contribution(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("elliptic term defined for even k >= 2");
  Rat total(0);
  for (const auto& cls : elliptic_point_classes()) {
    switch (cls.order) {
      case 2: total += class_contribution<2>(cls, k); break;
      case 3: total += class_contribution<3>(cls, k); break;
      case 7: total += class_contribution<7>(cls, k); break;
      default: throw std::logic_error("unexpected elliptic order");
    }
  }
  return total;
}

Rat euler_characteristic_kL(int k) {
  Rat km1(k - 1);
  return 2 * km1 * km1 * km1;
}

DimensionReport dimension_gamma_p(int k) {
  if (k < 1) throw std::invalid_argument("weight must be positive");
  DimensionReport r;
  r.group = "gamma(p)";
  r.k = k;
  r.cusps = 8;
  if (k == 1) {
    r.cusp = 0;
    r.total = 4;
  } else if (k == 2) {
    r.cusp = 3;
    r.total = r.cusp + 8;
  } else {
    r.cusp = euler_characteristic_kL(k);
    r.total = r.cusp + 8;
  }
  return r;
}

DimensionReport dimension_gamma_1(int k) {
  // below k = 4 the trace formula computes an Euler characteristic, not h^0
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("level-one dimension needs even k >= 4");
  DimensionReport r;
  r.group = "gamma(1)";
  r.k = k;
  r.cusps = 1;
  Rat km1(k - 1);
  r.cusp = volume_constants().vol_sl2o * km1 * km1 * km1 + elliptic_contribution(k);
  if (r.cusp.get_den() != 1 || r.cusp < 0)
    throw std::logic_error("trace formula did not produce a nonnegative integer");
  r.total = r.cusp + 1;
  return r;
}

VolumeConstants volume_constants() {
  VolumeConstants v;
  v.vol_sl2o = Rat(1, 84);
  // index 336 of the congruence subgroup, center of order 2 acting trivially
  v.vol_gamma_p = v.vol_sl2o * 336 / 2;
  v.zeta_K_minus1 = -4 * v.vol_sl2o;
  return v;
}

long poincare_invariant_ring(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  long total = 0;
  for (int j = 0; j <= 6 && j <= k; j += 2) {
    long n = k - j;  // coefficient of t^n in (1-t)^{-4} is C(n+3, 3)
    total += (n + 1) * (n + 2) * (n + 3) / 6;
  }
  return total;
}

Rat galois_trace_term(int k) { return Rat(28 * k - 52) / 3; }

Rat poincare_closed_form(int k) {
  Rat km1(k - 1);
  return 8 + Rat(2, 3) * km1 * km1 * km1 + galois_trace_term(k);
}

}  // namespace hmf
