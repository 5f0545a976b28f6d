#include "doctest.h"
#include "hmf/octic.hpp"
#include "hmf/relations.hpp"

using namespace hmf;

namespace {

const Rat kTol = Rat(Int(1), rat_pow(Rat(10), 20).get_num());

std::array<Complex, 3> diagonal_point(double im) {
  Complex z(Real(0), Real(im));
  return {z, z, z};
}

}  // namespace

TEST_CASE("evaluation approaches the cusp for large imaginary part") {
  Real::set_default_digits(50);
  NumericPoint p = evaluate_forms(diagonal_point(40.0), 10, Rat(1, 1000));
  // only constant terms survive: the projective point is (1 : 0 : 0 : 0)
  auto n = p.normalized();
  CHECK(n[0].abs().to_double() == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(n[(size_t)i].abs().to_double() < 1e-30);
  CHECK((p.f[0] - Complex(Real(Rat(1, 14)))).abs().to_double() < 1e-30);
}

TEST_CASE("tail bound rejects too-small truncation") {
  Real::set_default_digits(50);
  CHECK_THROWS_AS(evaluate_forms(diagonal_point(1.0), 10, Rat(Int(1), Int(10000000))),
                  std::runtime_error);
}

TEST_CASE("points outside the upper half space are rejected") {
  Real::set_default_digits(50);
  std::array<Complex, 3> bad = {Complex(Real(0), Real(-1)), Complex(Real(0), Real(1)),
                                Complex(Real(0), Real(1))};
  CHECK_THROWS_AS(evaluate_forms(bad, 10, Rat(1)), std::invalid_argument);
}

TEST_CASE("polynomial evaluation and differentiation") {
  PolyQ q = octic_closed_form();
  std::array<Complex, 5> cusp = {Complex(Real(1)), Complex(Real(0)), Complex(Real(0)),
                                 Complex(Real(0)), Complex(Real(0))};
  Complex v = evaluate_poly(q, cusp);
  CHECK(v.re.to_double() == doctest::Approx(-3.0));
  // Euler's relation: sum F_i dQ/dF_i = 8 Q
  std::array<Complex, 5> pt = {Complex(Real(Rat(1, 3))), Complex(Real(Rat(-2, 5))),
                               Complex(Real(Rat(1, 7)), Real(Rat(1, 2))), Complex(Real(1)),
                               Complex(Real(0))};
  Complex sum;
  for (int v2 = 0; v2 < 4; ++v2)
    sum += evaluate_poly(poly_partial(q, v2), pt) * pt[(size_t)v2];
  Complex rhs = evaluate_poly(q, pt) * Complex(Real(8));
  CHECK((sum - rhs).abs().to_double() < 1e-40);
}

TEST_CASE("base point is singular, orbit has 84 points") {
  Real::set_default_digits(50);
  EisensteinBasis basis = build_eisenstein_basis(100);
  NumericPoint p = evaluate_forms(diagonal_point(1.0), 60, kTol, &basis);
  CHECK(p.radius < Real(kTol));

  PolyQ q = octic_closed_form();
  SingularCheck sc = singular_point_check(p.f, q, kTol, 1e6, Rat(Int(1), Int(100000000)));
  CHECK(sc.vanishing_ok);
  CHECK(sc.rank_ok);
  CHECK(sc.cubic_ok);
  CHECK(sc.chart == 0);  // F_0 carries the largest value here

  OrbitClustering orbit = orbit_count(p, 1e-12);
  CHECK(orbit.cluster_count == 84);
  CHECK(orbit.projective_stabilizer == 2);

  // halving the clustering tolerance leaves the count unchanged
  OrbitClustering tighter = orbit_count(p, 0.5e-12);
  CHECK(tighter.cluster_count == 84);
}

TEST_CASE("orbit computation is identical across job counts") {
  Real::set_default_digits(50);
  EisensteinBasis basis = build_eisenstein_basis(100);
  NumericPoint p = evaluate_forms(diagonal_point(1.0), 60, kTol, &basis);
  OrbitClustering serial = orbit_count(p, 1e-12, 1);
  OrbitClustering threaded = orbit_count(p, 1e-12, 4);
  REQUIRE(serial.cluster_count == threaded.cluster_count);
  for (size_t i = 0; i < serial.representatives.size(); ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK((serial.representatives[i][(size_t)j] - threaded.representatives[i][(size_t)j])
                .abs2()
                .is_zero());
    }
}

TEST_CASE("translation by one twists the numeric values by zeta powers") {
  Real::set_default_digits(50);
  EisensteinBasis basis = build_eisenstein_basis(110);
  std::array<Complex, 3> z = {Complex(Real(Rat(3, 10)), Real(Rat(11, 10))),
                              Complex(Real(Rat(-1, 5)), Real(Rat(9, 10))),
                              Complex(Real(Rat(1, 10)), Real(Rat(13, 10)))};
  std::array<Complex, 3> z1 = z;
  for (auto& zi : z1) zi = zi + Complex(Real(1));
  Rat gate(Int(1), rat_pow(Rat(10), 15).get_num());
  NumericPoint p = evaluate_forms(z, 70, gate, &basis);
  NumericPoint q = evaluate_forms(z1, 70, gate, &basis);
  Real two_pi = Real(2) * Real::pi();
  const int cls[4] = {0, 1, 2, 4};
  Real worst(0);
  for (int i = 0; i < 4; ++i) {
    Real arg = two_pi * Real(3 * cls[i] % 7) / Real(7);
    Complex zeta(arg.cos(), arg.sin());
    Real diff = (q.f[(size_t)i] - zeta * p.f[(size_t)i]).abs();
    if (diff > worst) worst = diff;
  }
  // the partial sums satisfy the twist exactly; only rounding remains
  CHECK(worst < Real(Rat(Int(1), rat_pow(Rat(10), 40).get_num())));
}

TEST_CASE("a generic point of the octic is smooth") {
  Real::set_default_digits(50);
  SmoothSample s = sample_smooth_point(octic_closed_form(), 1e-12);
  CHECK(s.root_found);
  CHECK(s.grad_max > Real(Rat(1, 1000)));
}
