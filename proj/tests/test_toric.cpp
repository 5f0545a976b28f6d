#include <random>

#include "doctest.h"
#include "hmf/toric.hpp"

using namespace hmf;

namespace {

long cone_index(const Fan3D& fan, const std::array<int, 3>& cone) {
  const auto& a = fan.rays[(size_t)cone[0]].coords;
  const auto& b = fan.rays[(size_t)cone[1]].coords;
  const auto& c = fan.rays[(size_t)cone[2]].coords;
  long d = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  return d < 0 ? -d : d;
}

}  // namespace

TEST_CASE("hull facets verified by the trace-bound argument") {
  const FieldElement one(1);
  const FieldElement w1sq = parse_element("w^2+2w+1");

  HullFacetReport f1 = verify_hull_facet({one, FieldElement::w2(), w1sq});
  CHECK(f1.ok);
  CHECK(f1.multiplier == parse_element("9-2w-3w^2"));
  CHECK(f1.trace_cap == 14);
  CHECK(f1.divisible == 3);
  CHECK(f1.candidates == 18);  // three of trace 7, fifteen of trace 14

  HullFacetReport f2 = verify_hull_facet({one, parse_element("w+2"), w1sq});
  CHECK(f2.ok);
  CHECK(f2.multiplier == parse_element("2-w"));
  CHECK(f2.trace_cap == 7);
  CHECK(f2.divisible == 3);
}

TEST_CASE("hull facets verified on random unit translates") {
  std::mt19937_64 rng(5001);
  std::uniform_int_distribution<long> d(-2, 2);
  const FieldElement w1sq = parse_element("w^2+2w+1");
  const std::array<FieldElement, 3> base1 = {FieldElement(1), FieldElement::w2(), w1sq};
  const std::array<FieldElement, 3> base2 = {FieldElement(1), parse_element("w+2"), w1sq};
  for (int i = 0; i < 10; ++i) {
    FieldElement u = power(FieldElement::w2(), d(rng)) * power(w1sq, d(rng));
    const auto& base = i % 2 ? base2 : base1;
    HullFacetReport rep = verify_hull_facet({u * base[0], u * base[1], u * base[2]});
    CHECK(rep.ok);
  }
}

TEST_CASE("degenerate facet triples are rejected") {
  // collinear data has no unique supporting functional
  CHECK_THROWS(verify_hull_facet(
      {FieldElement(1), FieldElement(2), FieldElement(3)}));
}

TEST_CASE("fan cone indices") {
  Fan3D ych = build_cusp_fan(Level::full, Resolution::ch);
  int index1 = 0, index2 = 0;
  for (const auto& cone : ych.cones) {
    long d = cone_index(ych, cone);
    if (d == 1) ++index1;
    if (d == 2) ++index2;
    CHECK((d == 1 || d == 2));
  }
  CHECK(index1 == index2);  // one basis triangle per hull triangle

  // the smooth constructor asserts unimodularity internally
  Fan3D ysm = build_cusp_fan(Level::full, Resolution::sm);
  for (const auto& cone : ysm.cones) CHECK(cone_index(ysm, cone) == 1);

  // the index-two triangle splits into three through 1 + w + w^2
  int center = ysm.ray_index(parse_element("1+w+w^2"));
  REQUIRE(center >= 0);
  int through = 0;
  for (const auto& cone : ysm.cones)
    for (int k = 0; k < 3; ++k)
      if (cone[(size_t)k] == center) ++through;
  CHECK(through == 3);
}

TEST_CASE("divisor counts over the eight cusps") {
  DivisorCounts ch = divisor_counts(build_cusp_fan(Level::level_p, Resolution::ch));
  CHECK(ch.d_orbits_per_cusp == 3);
  CHECK(ch.total_d() == 24);
  DivisorCounts sm = divisor_counts(build_cusp_fan(Level::level_p, Resolution::sm));
  CHECK(sm.total_d() + sm.total_e() == 48);
  CHECK(sm.e_orbits_per_cusp == 3);
}

TEST_CASE("star of the first boundary divisor") {
  Fan3D ch = build_cusp_fan(Level::level_p, Resolution::ch);
  int d1 = ch.ray_index(FieldElement(1));
  REQUIRE(d1 >= 0);
  Star2D star_ch = star_quotient(ch, d1);
  CHECK(star_ch.rays.size() == 6);

  Fan3D sm = build_cusp_fan(Level::level_p, Resolution::sm);
  int d1s = sm.ray_index(FieldElement(1));
  Star2D star_sm = star_quotient(sm, d1s);
  CHECK(star_sm.rays.size() == 9);

  // no ray of the star belongs to the divisor's own orbit, no two centers
  // are adjacent, and the unit neighbors alternate between the two other
  // divisor classes
  size_t n = star_sm.neighbors.size();
  for (size_t i = 0; i < n; ++i) {
    const Ray& r = sm.rays[(size_t)star_sm.neighbors[i]];
    const Ray& next = sm.rays[(size_t)star_sm.neighbors[(i + 1) % n]];
    CHECK((r.is_center || r.orbit_class != 0));
    CHECK_FALSE((r.is_center && next.is_center));
    if (!r.is_center && !next.is_center) CHECK(r.orbit_class != next.orbit_class);
  }

  CHECK_THROWS(star_quotient(ch, 9999));
}

TEST_CASE("normal bundle of the boundary surface") {
  Fan3D sm = build_cusp_fan(Level::level_p, Resolution::sm);
  int d1 = sm.ray_index(FieldElement(1));
  std::vector<Rat> nb = normal_bundle_values(sm, d1);
  std::sort(nb.begin(), nb.end());
  const std::vector<Rat> expected = {Rat(-5), Rat(-4), Rat(-3), Rat(-2), Rat(-2),
                                     Rat(-1), Rat(-1), Rat(0),  Rat(0)};
  CHECK(nb == expected);
}

TEST_CASE("exceptional plane has normal degree minus two") {
  Fan3D sm = build_cusp_fan(Level::level_p, Resolution::sm);
  int e1 = sm.ray_index(parse_element("1+w+w^2"));
  REQUIRE(e1 >= 0);
  Star2D star = star_quotient(sm, e1);
  REQUIRE(star.rays.size() == 3);
  // the three projected rays sum to zero: the fan of the projective plane
  std::array<long, 2> sum{0, 0};
  for (const auto& r : star.rays) {
    sum[0] += r[0];
    sum[1] += r[1];
  }
  CHECK(sum == std::array<long, 2>{0, 0});
  // on that fan the divisor class is the value sum times a line
  std::vector<Rat> nb = normal_bundle_values(sm, e1);
  Rat total(0);
  for (const auto& v : nb) total += v;
  CHECK(total == -2);
}

TEST_CASE("PL self-intersection identities") {
  Fan3D sm = build_cusp_fan(Level::level_p, Resolution::sm);
  int d1 = sm.ray_index(FieldElement(1));
  Star2D star = star_quotient(sm, d1);
  std::vector<Rat> values =
      restrict_divisor_to_star(sm, star, coefficients_boundary(sm, Rat(-1), Rat(-3, 2)));
  CHECK(pl_self_intersection(star, values) == Rat(5, 2));

  // a linear functional gives the trivial class
  std::vector<Rat> linear;
  for (const auto& r : star.rays) linear.push_back(Rat(3 * r[0] - 2 * r[1]));
  CHECK(pl_self_intersection(star, linear) == 0);

  // shifting by a linear functional changes nothing
  std::vector<Rat> shifted = values;
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += linear[i];
  CHECK(pl_self_intersection(star, shifted) == Rat(5, 2));

  // refining a smooth cone with interpolated values changes nothing
  Star2D refined;
  std::vector<Rat> refined_values;
  size_t n = star.rays.size();
  refined.center = star.center;
  for (size_t i = 0; i < n; ++i) {
    refined.rays.push_back(star.rays[i]);
    refined.neighbors.push_back(star.neighbors[i]);
    refined_values.push_back(values[i]);
    if (i == 2) {  // subdivide one smooth cone
      const auto& u = star.rays[i];
      const auto& v = star.rays[(i + 1) % n];
      refined.rays.push_back({u[0] + v[0], u[1] + v[1]});
      refined.neighbors.push_back(-1);
      refined_values.push_back(values[i] + values[(i + 1) % n]);
    }
  }
  CHECK(pl_self_intersection(refined, refined_values) == Rat(5, 2));
}

TEST_CASE("boundary curves of the partial resolution") {
  std::vector<Rat> km = kch_boundary_intersections();
  REQUIRE(km.size() == 6);
  for (const auto& v : km) CHECK(v == Rat(1, 2));
}

TEST_CASE("discrepancies") {
  Fan3D sm = build_cusp_fan(Level::level_p, Resolution::sm);
  int e1 = sm.ray_index(parse_element("1+w+w^2"));
  int d1 = sm.ray_index(FieldElement(1));
  CHECK(discrepancy(sm, e1) == Rat(1, 2));
  CHECK(discrepancy(sm, d1) == 0);
  CHECK(discrepancy_relative_to_x(sm, e1) == -1);
  CHECK(discrepancy_relative_to_x(sm, d1) == -1);
}

TEST_CASE("intersection numbers") {
  IntersectionNumbers in = intersection_numbers();
  CHECK(in.L3 == 12);
  CHECK(in.KE2_L == 48);
  CHECK(in.KE2_E == 0);
  CHECK(in.d1_restriction_sq == Rat(5, 2));
  CHECK(in.KE2_D == 60);
  CHECK(in.KE3 == 36);
}

TEST_CASE("doubling the translation window changes nothing") {
  Fan3D sm4 = build_cusp_fan(Level::level_p, Resolution::sm, 4);
  Fan3D sm8 = build_cusp_fan(Level::level_p, Resolution::sm, 8);
  int a = sm4.ray_index(FieldElement(1));
  int b = sm8.ray_index(FieldElement(1));
  auto nb4 = normal_bundle_values(sm4, a);
  auto nb8 = normal_bundle_values(sm8, b);
  std::sort(nb4.begin(), nb4.end());
  std::sort(nb8.begin(), nb8.end());
  CHECK(nb4 == nb8);
  Star2D s4 = star_quotient(sm4, a), s8 = star_quotient(sm8, b);
  CHECK(s4.rays.size() == s8.rays.size());
}
