#include "hmf/eisenstein.hpp"

namespace hmf {

QExpansion<Rat> build_class_series(int residue, long trace_bound) {
  if (residue < 0 || residue > 6) throw std::invalid_argument("residue class out of range");
  QExpansion<Rat> f(trace_bound);
  enumerate_totally_positive(trace_bound, residue, [&](long a, long b, long c, long) {
    FieldElement x{Rat(a), Rat(b), Rat(c)};
    long coef = divisor_sum_s(x);
    if (coef != 0) f.add_to(exponents_of(x), Rat(coef));
  });
  return f;
}

QExpansion<Rat> build_F(int i, long trace_bound) {
  if (i != 0 && i != 1 && i != 2 && i != 4) throw std::invalid_argument("residue class must be 0, 1, 2 or 4");
  QExpansion<Rat> f = build_class_series(i, trace_bound);
  if (i == 0) f.add_to({0, 0, 0}, Rat(1, 14));
  return f;
}

QExpansion<Rat> build_E2(long trace_bound) {
  QExpansion<Rat> f(trace_bound);
  f.add_to({0, 0, 0}, Rat(-1, 168));
  enumerate_totally_positive(trace_bound, 0, [&](long a, long b, long c, long) {
    FieldElement x{Rat(a), Rat(b), Rat(c)};
    IdealFactorization fac = factor_element(x);
    // coefficient is sigma_1 of (x) with one power of p removed
    f.add_to(exponents_of(x), Rat(sigma1_ideal(fac.without_p(1))));
  });
  return f;
}

DiagonalSeries<Rat> build_s(int a, long order_bound) {
  if (a < 1 || a > 3) throw std::invalid_argument("s_a defined for a = 1, 2, 3");
  DiagonalSeries<Rat> s;
  s.bound = order_bound;
  s.denom = 1;
  s.add_to(0, Rat(1, 2) - Rat(a, 7));
  for (long n = 1; n <= order_bound; ++n) {
    long coef = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      long r = d % 7;
      if (r == a % 7) ++coef;
      if (r == (7 - a) % 7) --coef;
    }
    if (coef != 0) s.add_to(n, Rat(coef));
  }
  return s;
}

std::array<std::array<Cyc7, 3>, 3> fricke_s() {
  std::array<std::array<Cyc7, 3>, 3> m;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      m[(size_t)i - 1][(size_t)j - 1] = Cyc7::zeta_pow(i * j) - Cyc7::zeta_pow(-i * j);
  return m;
}

namespace {

DiagonalSeries<Cyc7> to_cyc(const DiagonalSeries<Rat>& s) {
  DiagonalSeries<Cyc7> r;
  r.bound = s.bound;
  r.denom = s.denom;
  for (const auto& [n, v] : s.terms) r.terms.emplace(n, Cyc7(v));
  return r;
}

DiagonalSeries<Cyc7> f0bar_in(const std::array<DiagonalSeries<Cyc7>, 3>& s) {
  DiagonalSeries<Cyc7> lin = s[0] + s[1] - s[2];
  return lin * lin * lin * Cyc7(Rat(7)) - s[0] * s[1] * s[2] * Cyc7(Rat(147));
}

}  // namespace

DiagonalSeries<Cyc7> fricke_f0bar(long order_bound) {
  auto m = fricke_s();
  std::array<DiagonalSeries<Cyc7>, 3> base = {to_cyc(build_s(1, order_bound)),
                                              to_cyc(build_s(2, order_bound)),
                                              to_cyc(build_s(3, order_bound))};
  // S_i = (1/tau) s_i(-1/(7 tau)) = -sum_j m[i][j] s_j
  std::array<DiagonalSeries<Cyc7>, 3> transformed;
  for (int i = 0; i < 3; ++i) {
    DiagonalSeries<Cyc7> acc;
    acc.bound = order_bound;
    acc.denom = 1;
    for (int j = 0; j < 3; ++j) acc = acc + base[(size_t)j] * m[(size_t)i][(size_t)j];
    transformed[(size_t)i] = -acc;
  }
  return f0bar_in(transformed);
}

DiagonalSeries<Rat> fricke_f0bar_rational(long order_bound) {
  DiagonalSeries<Cyc7> g_series = fricke_f0bar(order_bound);
  Cyc7 scale = -(gauss_sum7() * Rat(1, 343));  // 1/(49 g) since g^2 = -7
  DiagonalSeries<Rat> r;
  r.bound = g_series.bound;
  r.denom = g_series.denom;
  for (const auto& [n, v] : g_series.terms) {
    Cyc7 c = v * scale;
    r.terms.emplace(n, c.rational_part());  // throws if not rational
  }
  return r;
}

EisensteinBasis build_eisenstein_basis(long trace_bound) {
  EisensteinBasis basis;
  basis.bound = trace_bound;
  const int classes[4] = {0, 1, 2, 4};
  for (int idx = 0; idx < 4; ++idx) basis.F[(size_t)idx] = build_F(classes[idx], trace_bound);
  basis.E2 = build_E2(trace_bound);
  return basis;
}

}  // namespace hmf
