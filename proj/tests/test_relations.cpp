#include "doctest.h"
#include "hmf/relations.hpp"

using namespace hmf;

TEST_CASE("closed form of the relation") {
  PolyQ p8 = p8_closed_form();
  CHECK(p8.term_count() == 42);
  CHECK(p8.coefficient({0, 0, 0, 0, 4}) == rat_pow(Rat(6, 7), 4));
  CHECK(p8.coefficient({8, 0, 0, 0, 0}) == -3);
  // 15 (6/7 E2) F1^2 F2^2 F4^2
  CHECK(p8.coefficient({0, 2, 2, 2, 1}) == Rat(15) * Rat(6, 7));
  CHECK(p8.coefficient({5, 1, 1, 1, 0}) == 38);
}

TEST_CASE("kernel search finds the relation and is stable in the bound") {
  RelationSearch found = find_relation(25);
  CHECK(found.kernel_dimension == 1);
  CHECK(found.p8 == p8_closed_form());
  for (bool nz : found.kernel_coordinate_nonzero) CHECK(nz);

  RelationSearch again = find_relation(27);
  CHECK(again.p8 == found.p8);

  CHECK_THROWS_AS(find_relation(10), InsufficientRows);
}

TEST_CASE("relation evaluates to the zero series") {
  EisensteinBasis basis = build_eisenstein_basis(25);
  CHECK(evaluate_on_basis(p8_closed_form(), basis).is_zero());
}

TEST_CASE("octic from the relation") {
  PolyQ q = derive_octic(p8_closed_form());
  CHECK(q == octic_closed_form());
  CHECK(q.term_count() == 24);
  CHECK(q.coefficient({5, 1, 1, 1, 0}) == 38);
  for (const auto& [m, c] : q.terms()) CHECK(m[4] == 0);

  const auto& g = generate_group();
  PolyC qc = to_cyclotomic(q);
  CHECK(act_on_polynomial(g.generators[0], qc) == qc);
  CHECK(act_on_polynomial(g.generators[1], qc) == qc);
}

TEST_CASE("weight-two cusp basis") {
  auto quadrics = cusp_basis_weight2();
  REQUIRE(quadrics.size() == 3);
  CHECK(quadrics[0].coefficient({1, 1, 0, 0, 0}) == 2);
  CHECK(quadrics[0].coefficient({0, 0, 0, 2, 0}) == -1);

  EisensteinBasis basis = build_eisenstein_basis(30);
  VanishingChecks v = check_boundary_vanishing(quadrics, basis);
  CHECK(v.constant_terms_zero);
  CHECK(v.orders_certified);
  CHECK(v.min_order >= 1);

  SpanAnalysis span = analyze_span(quadrics);
  CHECK(span.stable_under_generators);
  CHECK(span.dimension == 3);
  CHECK(span.trivial_multiplicity == 0);
}

TEST_CASE("sections of twice the canonical class") {
  auto sections = sections_2K();
  REQUIRE(sections.size() == 8);
  for (const auto& s : sections) CHECK(s.degree() == 4);

  EisensteinBasis basis = build_eisenstein_basis(35);
  VanishingChecks v = check_boundary_vanishing(sections, basis);
  CHECK(v.constant_terms_zero);
  CHECK(v.orders_certified);
  CHECK(v.min_order >= 2);

  SpanAnalysis span = analyze_span(sections);
  CHECK(span.stable_under_generators);
  CHECK(span.dimension == 8);
  CHECK(span.trivial_multiplicity == 1);
  CHECK(span.character_norm_sq == 2);  // 1 + 7 with both irreducible

  const auto& g = generate_group();
  PolyC first = to_cyclotomic(sections[0]);
  CHECK(act_on_polynomial(g.generators[0], first) == first);
  CHECK(act_on_polynomial(g.generators[1], first) == first);
}

TEST_CASE("independence ingredients") {
  IndependenceReport rep = verify_irreducibility_obstructions(20);
  CHECK(rep.invariant_dim_deg2 == 0);
  CHECK(rep.jacobian_nonzero);
  CHECK(rep.p8_has_linear_e2_part);
  // the lowest term of the Jacobian in graded order, with the variable
  // numbering shifted by one against the other common convention
  CHECK(rep.jacobian_leading_monomial == Key3{2, 4, 5});
  CHECK(rep.jacobian_leading_coefficient == -2744);
}
