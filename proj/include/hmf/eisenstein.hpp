#pragma once

// The parallel weight one Eisenstein series F_0, F_1, F_2, F_4 of level
// p = (2 - w), the weight two series E_2 of level one, and the weight one
// series s_1, s_2, s_3 for Gamma_1(7) together with their Fricke transforms.

#include <array>

#include "hmf/cyclotomic.hpp"
#include "hmf/ideals.hpp"
#include "hmf/qseries.hpp"

namespace hmf {

// F_i = c_i + sum over totally positive a = i mod p of (sum_{(c)|(a)} s(c))
// at the exponents of a; c_0 = 1/14, the others 0.  i must be 0, 1, 2 or 4.
QExpansion<Rat> build_F(int i, long trace_bound);

// Raw class sum without constant term, any residue class 0..6.  Classes
// 3, 5, 6 come out identically zero.
QExpansion<Rat> build_class_series(int residue, long trace_bound);

// E_2 = -1/168 + sum over totally positive a' in p (a' = 7a, a in p^{-2})
// of sigma_1((a') p^{-1}) at the exponents of a'.
QExpansion<Rat> build_E2(long trace_bound);

// s_a = 1/2 - a/7 + sum_{n>0} q^n sum_{d|n} ([d = a mod 7] - [d = -a mod 7])
DiagonalSeries<Rat> build_s(int a, long order_bound);

// Fricke transform on the span of s_1, s_2, s_3: -(1/tau) s_i(-1/(7 tau)) =
// sum_j (zeta^(ij) - zeta^(-ij)) s_j.  Symmetric in (i, j).
std::array<std::array<Cyc7, 3>, 3> fricke_s();

// The series (1/tau^3) F0bar(-1/(7 tau)) computed symbolically through the
// Fricke matrix inside 7(s1+s2-s3)^3 - 147 s1 s2 s3.  Equals 49 g R where
// g is the Gauss sum and R is rational.
DiagonalSeries<Cyc7> fricke_f0bar(long order_bound);

// R = -G * g / 343; throws if any coefficient fails to be rational.
DiagonalSeries<Rat> fricke_f0bar_rational(long order_bound);

struct EisensteinBasis {
  long bound;
  std::array<QExpansion<Rat>, 4> F;  // F_0, F_1, F_2, F_4
  QExpansion<Rat> E2;
};

EisensteinBasis build_eisenstein_basis(long trace_bound);

}  // namespace hmf
