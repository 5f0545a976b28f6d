#pragma once

// Numeric verification of the 84-point singular orbit of the octic surface:
// multiprecision evaluation of the Eisenstein series on H^3, projective
// orbit clustering under the numeric image of the matrix group, and local
// A_2 checks (gradient, Hessian rank, cubic term along the kernel).

#include <array>
#include <vector>

#include "hmf/eisenstein.hpp"
#include "hmf/grouprep.hpp"
#include "hmf/mp_real.hpp"

namespace hmf {

struct NumericPoint {
  std::array<Complex, 4> f;  // values of F_0, F_1, F_2, F_4 at z
  Real radius;               // certified absolute error per coordinate
  long trace_bound = 0;

  std::array<Complex, 4> normalized() const;  // largest-modulus coordinate = 1
};

// Partial sums over Tr(a) <= T with a certified tail radius.  The basis, if
// given, must have bound >= T + 40 (the margin used for the sharp part of
// the tail estimate).  Throws when the tail exceeds max_radius.
NumericPoint evaluate_forms(const std::array<Complex, 3>& z, long trace_bound,
                            const Rat& max_radius, const EisensteinBasis* basis = nullptr);

Complex evaluate_E2(const std::array<Complex, 3>& z, long trace_bound,
                    const EisensteinBasis* basis = nullptr);

// evaluate a polynomial in (F_0, F_1, F_2, F_4, E_2) at complex arguments
Complex evaluate_poly(const PolyQ& p, const std::array<Complex, 5>& at);
PolyQ poly_partial(const PolyQ& p, int var);

struct SingularCheck {
  int chart = 0;        // frozen coordinate (largest modulus)
  Real q_abs;           // |Q| at the point
  Real grad_max;        // max |dQ/dx_i| over the three chart directions
  Real sv[3];           // Hessian singular values, descending
  Real kernel_cubic;    // |D^3 Q (v, v, v)| along the Hessian kernel
  bool vanishing_ok = false;
  bool rank_ok = false;
  bool cubic_ok = false;
  bool pass() const { return vanishing_ok && rank_ok && cubic_ok; }
};

// A_2 test at the given projective representative, at its own scale: |Q| and
// the chart gradient below tol, Hessian of numerical rank 2 with the stated
// guard band, and a nonvanishing cubic term along the kernel direction.
SingularCheck singular_point_check(const std::array<Complex, 4>& f, const PolyQ& octic,
                                   const Rat& tol, double guard_band, const Rat& cubic_min);

struct OrbitClustering {
  int cluster_count = 0;
  int projective_stabilizer = 0;
  Real max_intra;  // largest distance point-to-cluster-representative
  Real min_inter;  // smallest distance between representatives
  std::vector<std::array<Complex, 4>> representatives;
};

// Image of the point under all 336 matrices (numeric specialization
// zeta_7 -> exp(2 pi i/7)), clustered projectively by the sine of the angle
// between coordinate vectors.
OrbitClustering orbit_count(const NumericPoint& p, double cluster_tol, int jobs = 1);

// find a root of Q along the line a + t b and check it is a smooth point
struct SmoothSample {
  bool root_found = false;
  Real residual;
  Real grad_max;
};

SmoothSample sample_smooth_point(const PolyQ& octic, double cluster_tol);

}  // namespace hmf
