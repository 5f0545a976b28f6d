#include <random>

#include "doctest.h"
#include "hmf/cubic_field.hpp"

using namespace hmf;

namespace {

FieldElement random_element(std::mt19937_64& rng, long range = 50) {
  std::uniform_int_distribution<long> d(-range, range);
  return {Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
}

}  // namespace

TEST_CASE("norm and trace on pinned elements") {
  FieldElement pi = parse_element("2-w");
  CHECK(norm(pi) == 7);
  CHECK(trace(pi) == 7);
  CHECK(norm(FieldElement(1)) == 1);
  CHECK(norm(parse_element("1+w+w^2")) == 7);
  CHECK(trace(FieldElement(0)) == 0);
  CHECK(trace(FieldElement::w2()) == 5);
}

TEST_CASE("closed-form norm agrees with the multiplication-matrix determinant") {
  std::mt19937_64 rng(7001);
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = random_element(rng);
    CHECK(norm(x) == norm_via_matrix(x));
  }
  // rational coordinates too
  FieldElement y{Rat(1, 2), Rat(-3, 7), Rat(5, 3)};
  CHECK(norm(y) == norm_via_matrix(y));
}

TEST_CASE("norm is multiplicative, trace is additive") {
  std::mt19937_64 rng(7002);
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = random_element(rng), y = random_element(rng);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(trace(x + y) == trace(x) + trace(y));
  }
}

TEST_CASE("field inverse and powers") {
  std::mt19937_64 rng(7003);
  for (int i = 0; i < 50; ++i) {
    FieldElement x = random_element(rng, 9);
    if (x.is_zero()) continue;
    CHECK(x * inverse(x) == FieldElement(1));
  }
  FieldElement u = parse_element("w^2+2w+1");
  CHECK(power(u, 3) * power(u, -3) == FieldElement(1));
}

TEST_CASE("total positivity on pinned elements") {
  CHECK(is_totally_positive(parse_element("2-w")));
  CHECK_FALSE(is_totally_positive(FieldElement(-1)));
  CHECK_FALSE(is_totally_positive(FieldElement::w()));
  CHECK_THROWS_AS((void)is_totally_positive(FieldElement(0)), std::invalid_argument);
}

TEST_CASE("total positivity matches interval sign patterns") {
  const auto& ctx = default_embeddings();
  std::mt19937_64 rng(7004);
  int decided = 0;
  for (int i = 0; i < 500; ++i) {
    FieldElement x = random_element(rng, 20);
    if (x.is_zero()) continue;
    auto emb = ctx.embed(x);
    bool all_definite = true, all_positive = true;
    for (const auto& iv : emb) {
      if (!iv.is_positive() && !iv.is_negative()) all_definite = false;
      if (!iv.is_positive()) all_positive = false;
    }
    if (!all_definite) continue;
    ++decided;
    CHECK(is_totally_positive(x) == all_positive);
  }
  CHECK(decided > 450);
}

TEST_CASE("embedding sums and products enclose trace and norm") {
  const auto& ctx = default_embeddings();
  std::mt19937_64 rng(7005);
  for (int i = 0; i < 100; ++i) {
    FieldElement x = random_element(rng, 12);
    auto emb = ctx.embed(x);
    Interval sum = emb[0] + emb[1] + emb[2];
    Interval prod = emb[0] * emb[1] * emb[2];
    CHECK(sum.contains(trace(x)));
    CHECK(prod.contains(norm(x)));
  }
}

TEST_CASE("trace slices reproduce the known tables") {
  auto sorted = [](std::initializer_list<const char*> names) {
    std::vector<FieldElement> v;
    for (const char* n : names) v.push_back(parse_element(n));
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(totally_positive_of_trace(7) == sorted({"-w^2+4", "-w+2", "w^2+w+1"}));
  CHECK(totally_positive_of_trace(14) ==
        sorted({"-5w^2-3w+12", "-3w^2-2w+9", "-2w^2-3w+7", "-2w^2+8", "-w^2-w+6", "-2w+4",
                "-w^2+2w+7", "w+5", "w^2+3", "2w^2-w+1", "3w^2-2w-1", "w^2+3w+4", "2w^2+2w+2",
                "3w^2+w", "2w^2+5w+3"}));
  CHECK(totally_positive_of_trace(1).empty());
  CHECK(totally_positive_of_trace(2).empty());
  CHECK(totally_positive_of_trace(3).size() == 1);
}

TEST_CASE("trace slice members are canonical and valid") {
  for (long t : {5L, 9L, 13L}) {
    auto v = totally_positive_of_trace(t);
    for (size_t i = 0; i < v.size(); ++i) {
      CHECK(trace(v[i]) == t);
      CHECK(norm(v[i]) >= 1);
      CHECK(is_totally_positive(v[i]));
      if (i > 0) CHECK(v[i - 1] < v[i]);
    }
  }
}

TEST_CASE("galois conjugation") {
  CHECK(galois_conjugate(FieldElement::w()) == parse_element("w^2-2"));
  std::mt19937_64 rng(7006);
  for (int i = 0; i < 200; ++i) {
    FieldElement x = random_element(rng, 20);
    CHECK(galois_conjugate(x, 0) == x);
    CHECK(galois_conjugate(galois_conjugate(x, 1), 2) == x);
    CHECK(norm(galois_conjugate(x)) == norm(x));
    CHECK(trace(galois_conjugate(x)) == trace(x));
    if (!x.is_zero())
      CHECK(is_totally_positive(galois_conjugate(x)) == is_totally_positive(x));
  }
  CHECK(trace(galois_conjugate(parse_element("1+2w"))) == trace(parse_element("1+2w")));
}

TEST_CASE("unit group data") {
  UnitGroupData d = unit_group_data();
  CHECK(d.totally_positive_generators[0] == FieldElement::w2());
  CHECK(d.totally_positive_generators[1] == parse_element("w^2+2w+1"));
  CHECK(norm(d.full_generators[0]) == 1);
  CHECK(norm(d.full_generators[1]) == 1);
  CHECK(d.u1_index == 3);
  for (const auto& u : d.u1_generators) {
    CHECK(residue_mod_p(u) == 1);
    CHECK(is_totally_positive(u));
  }
  CHECK(residue_mod_p(FieldElement::w()) == 2);
}

TEST_CASE("interval arithmetic endpoints") {
  Interval a(Rat(-2), Rat(3)), b(Rat(-1), Rat(5));
  Interval p = a * b;
  CHECK(p.lo == -10);  // -2 * 5
  CHECK(p.hi == 15);   // 3 * 5
  CHECK((a + b).lo == -3);
  CHECK((a - b).hi == 4);
  CHECK((a * Rat(-2)).lo == -6);
  CHECK((a * Rat(-2)).hi == 4);
  CHECK(a.contains(Rat(0)));
  CHECK_FALSE(a.is_positive());
  CHECK(Interval(Rat(1, 3), Rat(1, 2)).is_positive());
  CHECK_THROWS_AS(Interval(Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("embedding enclosures meet the requested precision") {
  EmbeddingContext ctx(64);
  Rat target = rat_pow(Rat(1, 10), 64);
  for (const auto& iv : ctx.w_intervals()) {
    Rat width = iv.hi - iv.lo;
    CHECK(width <= target);
    // each interval actually brackets a root of the cubic
    auto value = [](const Rat& x) { return Rat(((x + 1) * x - 2) * x - 1); };
    Rat sign_product = value(iv.lo) * value(iv.hi);
    CHECK(sign_product <= 0);
  }
  // the three enclosures are pairwise disjoint and ordered
  const auto& w = ctx.w_intervals();
  CHECK(w[1].hi < w[0].lo);
  CHECK(w[2].hi < w[1].lo);

  EmbeddingContext coarse(10);
  Rat coarse_width = coarse.w_intervals()[0].hi - coarse.w_intervals()[0].lo;
  CHECK(coarse_width <= rat_pow(Rat(1, 10), 10));
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(7007);
  for (int i = 0; i < 100; ++i) {
    FieldElement x = random_element(rng, 30);
    CHECK(parse_element(x.str()) == x);
  }
  CHECK(parse_element("1/2 + 3/7*w - w^2").a == Rat(1, 2));
  CHECK((FieldElement{Rat(1, 2), Rat(3, 7), Rat(-1)}.str()) == "1/2 + 3/7*w - w^2");
}
