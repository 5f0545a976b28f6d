#include <random>

#include "doctest.h"
#include "hmf/ideals.hpp"

using namespace hmf;

namespace {

FieldElement random_nonzero(std::mt19937_64& rng, long range = 12) {
  std::uniform_int_distribution<long> d(-range, range);
  while (true) {
    FieldElement x{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
    if (!x.is_zero()) return x;
  }
}

}  // namespace

TEST_CASE("factorization of pinned elements") {
  auto f_pi = factor_element(parse_element("2-w"));
  REQUIRE(f_pi.factors.size() == 1);
  CHECK(f_pi.factors[0].first.ramified);
  CHECK(f_pi.factors[0].second == 1);

  auto f_7 = factor_element(FieldElement(7));
  REQUIRE(f_7.factors.size() == 1);
  CHECK(f_7.factors[0].first.ramified);
  CHECK(f_7.factors[0].second == 3);

  auto f = factor_element(parse_element("4-2w"));  // 2 * (2-w)
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first.q == 2);
  CHECK(f.factors[0].first.f == 3);
  CHECK(f.factors[0].second == 1);
  CHECK(f.factors[1].first.ramified);

  CHECK_THROWS_AS(factor_element(FieldElement(0)), std::invalid_argument);
}

TEST_CASE("local norms multiply to the element norm") {
  std::mt19937_64 rng(8001);
  for (int i = 0; i < 300; ++i) {
    FieldElement x = random_nonzero(rng);
    CHECK(factor_element(x).ideal_norm() == abs(norm(x)));
  }
}

TEST_CASE("prime splitting pattern follows the residue of q mod 7") {
  for (long q : {2L, 3L, 5L, 11L, 13L, 29L, 41L, 43L}) {
    auto primes = primes_over(q);
    long r = q % 7;
    if (r == 1 || r == 6) {
      CHECK(primes.size() == 3);  // split completely
      for (const auto& P : primes) CHECK(P.f == 1);
    } else {
      CHECK(primes.size() == 1);
      CHECK(primes[0].f == 3);
    }
  }
  CHECK(primes_over(7).size() == 1);
  CHECK(primes_over(7)[0].ramified);
}

TEST_CASE("sign character on primes") {
  CHECK(s_of_prime(primes_over(2)[0]) == 1);   // 2^3 = 1 mod 7
  CHECK(s_of_prime(primes_over(7)[0]) == 0);
  CHECK(s_of_prime(primes_over(13)[0]) == -1); // 13 = 6 mod 7
}

TEST_CASE("Frobenius rule matches the generator-based character on small primes") {
  for (long q : {2L, 3L, 5L, 11L, 13L, 23L, 29L, 31L, 37L, 41L, 43L}) {
    for (const auto& P : primes_over(q)) {
      FieldElement g = find_generator(P);
      CHECK(abs(norm(g)) == Rat(P.ideal_norm()));
      CHECK(s_of_element_definitional(g) == s_of_prime(P));
    }
  }
}

TEST_CASE("sign character on elements") {
  CHECK(s_of_element(FieldElement(1)) == 1);
  CHECK(s_of_element(parse_element("2-w")) == 0);
  CHECK(s_of_element(FieldElement(2)) == 1);
  CHECK_THROWS_AS(s_of_element(FieldElement(0)), std::invalid_argument);
}

TEST_CASE("three evaluations of s agree on random elements") {
  std::mt19937_64 rng(8002);
  int coprime_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = random_nonzero(rng);
    int via_def = s_of_element_definitional(x);
    CHECK(via_def == s_of_element_product_formula(x));
    CHECK(via_def == s_of_element(x));
    if (via_def != 0) ++coprime_seen;
  }
  CHECK(coprime_seen > 800);
}

TEST_CASE("divisor sums on pinned elements") {
  FieldElement pi = parse_element("2-w");
  CHECK(divisor_sum_s(pi * pi) == 1);            // (a) = p^2
  CHECK(divisor_sum_s(parse_element("4-2w")) == 2);
  CHECK(divisor_sum_s(FieldElement(1)) == 1);
}

TEST_CASE("rho on pinned elements") {
  CHECK(rho_LK(FieldElement(7)) == 1);  // ramified cube
  CHECK(rho_LK(FieldElement(2)) == 2);  // split in the quadratic extension
  CHECK(rho_LK(FieldElement(1)) == 1);
}

TEST_CASE("sigma_1 on pinned ideals") {
  CHECK(sigma1_ideal(factor_element(FieldElement(1))) == 1);
  CHECK(sigma1_ideal(factor_element(parse_element("2-w"))) == 8);
  CHECK(sigma1_ideal(factor_element(FieldElement(2))) == 9);
}

TEST_CASE("divisor-sum identity with rho up to trace 40") {
  long count = 0;
  enumerate_totally_positive(40, -1, [&](long a, long b, long c, long) {
    ++count;
    FieldElement x{Rat(a), Rat(b), Rat(c)};
    IdealFactorization f = factor_element(x);
    CHECK(divisor_sum_s(f) == rho_LK(f));
  });
  CHECK(count > 1000);
}

TEST_CASE("divisor sums and sigma_1 are multiplicative on coprime arguments") {
  std::mt19937_64 rng(8003);
  int used = 0;
  for (int i = 0; i < 400 && used < 120; ++i) {
    FieldElement x = random_nonzero(rng, 6), y = random_nonzero(rng, 6);
    Rat g = gcd(Int(norm(x).get_num()), Int(norm(y).get_num()));
    if (abs(g) != 1) continue;  // coprime norms force coprime ideals
    ++used;
    FieldElement xy = x * y;
    CHECK(divisor_sum_s(xy) == divisor_sum_s(x) * divisor_sum_s(y));
    CHECK(sigma1_ideal(factor_element(xy)) ==
          sigma1_ideal(factor_element(x)) * sigma1_ideal(factor_element(y)));
  }
  CHECK(used >= 100);
}

TEST_CASE("cusp orbits") {
  CuspOrbits c = count_cusps();
  CHECK(c.count == 8);
  CHECK(c.scalar_group_order == 6);
  for (const auto& orbit : c.orbits) CHECK(orbit.size() == 6);
}
