#include <random>

#include "doctest.h"
#include "hmf/grouprep.hpp"
#include "hmf/relations.hpp"

using namespace hmf;

TEST_CASE("cyclotomic arithmetic") {
  Cyc7 z = Cyc7::zeta_pow(1);
  Cyc7 pw(1);
  for (int i = 0; i < 7; ++i) pw *= z;
  CHECK(pw == Cyc7(1));
  CHECK(Cyc7::zeta_pow(6) == z.conj());

  Cyc7 g = gauss_sum7();
  CHECK(g * g == Cyc7(-7));

  std::mt19937_64 rng(4001);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 50; ++i) {
    Cyc7 x;
    for (size_t k = 0; k < 6; ++k) x[k] = Rat(d(rng));
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyc7(1));
    CHECK(x.galois(3).galois(5) == x);  // 3 * 5 = 15 = 1 mod 7
  }
}

TEST_CASE("generator matrices") {
  CycMatrix g7 = gamma7();
  CHECK(g7.m[0][0] == Cyc7(1));
  CHECK(g7.m[1][1] == Cyc7::zeta_pow(3));
  CHECK(g7.m[2][2] == Cyc7::zeta_pow(6));
  CHECK(g7.m[3][3] == Cyc7::zeta_pow(5));

  CycMatrix g4 = gamma4();
  Cyc7 scale = -(gauss_sum7() * Rat(1, 7));
  CHECK(g4.m[0][0] == scale);
  CHECK(g4.m[0][1] == scale * Rat(2));
  CHECK(g4.m[0][2] == scale * Rat(2));
  CHECK(g4.m[0][3] == scale * Rat(2));
  CHECK(g4.m[1][0] == scale);

  CycMatrix id = CycMatrix::identity();
  CHECK(g4 * g4 == -id);
  CHECK(g4 * g4 * g4 * g4 == id);
  CycMatrix p = id;
  for (int i = 0; i < 7; ++i) p = p * g7;
  CHECK(p == id);
}

TEST_CASE("group closure") {
  const auto& g = generate_group();
  CHECK(g.elements.size() == 336);
  CHECK(projective_size(g) == 168);
}

TEST_CASE("invariant dimensions by Molien averaging") {
  CHECK(invariant_dimension(0) == 1);
  CHECK(invariant_dimension(2) == 0);
  CHECK(invariant_dimension(4) == 1);
  CHECK(invariant_dimension(6) == 1);
  CHECK(invariant_dimension(8) == 3);
  CHECK_THROWS_AS(invariant_dimension(13), std::invalid_argument);
}

TEST_CASE("substitution action composes") {
  const auto& g = generate_group();
  PolyQ sample;
  sample.add_term({2, 1, 0, 1, 1}, Rat(3));
  sample.add_term({0, 2, 2, 0, 0}, Rat(-1, 2));
  PolyC p = to_cyclotomic(sample);
  CycMatrix a = g.generators[0], b = g.generators[1];
  CHECK(act_on_polynomial(a * b, p) == act_on_polynomial(a, act_on_polynomial(b, p)));
  CHECK(act_on_polynomial(CycMatrix::identity(), p) == p);
}

TEST_CASE("rational invariant bases are fixed by both generators") {
  const auto& g = generate_group();
  for (int k : {4, 6, 8}) {
    auto basis = invariant_basis_fdeg(k);
    CHECK((long)basis.size() == invariant_dimension(k));
    for (const auto& p : basis) {
      PolyC pc = to_cyclotomic(p);
      CHECK(act_on_polynomial(g.generators[0], pc) == pc);
      CHECK(act_on_polynomial(g.generators[1], pc) == pc);
    }
  }
}

TEST_CASE("the six weighted-degree-eight invariants") {
  auto basis = invariant_basis_deg8();
  REQUIRE(basis.size() == 6);
  // E_2^4 appears as a pure stratum
  bool found_e24 = false;
  for (const auto& p : basis)
    if (p.term_count() == 1 && p.coefficient({0, 0, 0, 0, 4}) != 0) found_e24 = true;
  CHECK(found_e24);
  // one polynomial in the E_2^2 stratum (the degree-four invariant)
  int e22 = 0;
  for (const auto& p : basis) {
    bool all_e22 = true;
    for (const auto& [m, c] : p.terms())
      if (m[4] != 2) all_e22 = false;
    if (all_e22 && !p.is_zero()) ++e22;
  }
  CHECK(e22 == 1);
}

TEST_CASE("the relation is invariant under both generators") {
  const auto& g = generate_group();
  PolyC p8 = to_cyclotomic(p8_closed_form());
  CHECK(act_on_polynomial(g.generators[0], p8) == p8);
  CHECK(act_on_polynomial(g.generators[1], p8) == p8);
}
