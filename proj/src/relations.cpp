#include "hmf/relations.hpp"

#include <algorithm>

#include "hmf/linalg.hpp"

namespace hmf {

namespace {

QExpansion<Rat> eval_monomial(const Mon5& mon, const EisensteinBasis& basis,
                              std::map<Mon5, QExpansion<Rat>>& cache) {
  auto it = cache.find(mon);
  if (it != cache.end()) return it->second;
  QExpansion<Rat> result(basis.bound);
  if (mon == Mon5{0, 0, 0, 0, 0}) {
    result.set({0, 0, 0}, Rat(1));
  } else {
    int var = 0;
    while (mon[(size_t)var] == 0) ++var;
    Mon5 rest = mon;
    rest[(size_t)var] -= 1;
    const QExpansion<Rat>& factor = var == 4 ? basis.E2 : basis.F[(size_t)(var)];
    result = eval_monomial(rest, basis, cache) * factor;
  }
  return cache.emplace(mon, std::move(result)).first->second;
}

}  // namespace

QExpansion<Rat> evaluate_on_basis(const PolyQ& p, const EisensteinBasis& basis) {
  std::map<Mon5, QExpansion<Rat>> cache;
  QExpansion<Rat> acc(basis.bound);
  for (const auto& [mon, coef] : p.terms()) acc = acc + eval_monomial(mon, basis, cache) * coef;
  return acc;
}

RelationSearch find_relation(long trace_bound) {
  if (trace_bound < 25)
    throw InsufficientRows("trace bound " + std::to_string(trace_bound) +
                           " leaves the relation underdetermined; need at least 25");
  EisensteinBasis basis = build_eisenstein_basis(trace_bound);
  std::vector<PolyQ> inv = invariant_basis_deg8();

  std::vector<QExpansion<Rat>> evaluated;
  evaluated.reserve(inv.size());
  for (const auto& p : inv) evaluated.push_back(evaluate_on_basis(p, basis));

  // rows indexed by the union of supports
  std::map<Key3, size_t, GradedLex> row_of;
  for (const auto& s : evaluated)
    for (const auto& [k, v] : s.terms()) row_of.emplace(k, row_of.size());

  RatMatrix m(row_of.size(), std::vector<Rat>(inv.size(), Rat(0)));
  for (size_t col = 0; col < evaluated.size(); ++col)
    for (const auto& [k, v] : evaluated[col].terms()) m[row_of.at(k)][col] = v;

  auto kernel = rational_kernel(m);
  RelationSearch out;
  out.rows = row_of.size();
  out.kernel_dimension = (int)kernel.size();
  if (out.kernel_dimension != 1)
    throw InsufficientRows("kernel dimension is " + std::to_string(out.kernel_dimension) +
                           ", expected 1");

  const auto& kappa = kernel[0];
  for (size_t j = 0; j < 6; ++j) out.kernel_coordinate_nonzero[j] = kappa[j] != 0;

  PolyQ p8;
  for (size_t j = 0; j < inv.size(); ++j) p8 = p8 + inv[j] * kappa[j];

  // normalize so the coefficient of (6/7 E_2)^4 is 1
  Rat lead = p8.coefficient(Mon5{0, 0, 0, 0, 4});
  if (lead == 0) throw std::logic_error("relation has no E_2^4 term");
  out.p8 = p8 * (rat_pow(Rat(6, 7), 4) / lead);
  return out;
}

// --- closed forms ------------------------------------------------------------

namespace {

// adds coef * F0^e0 F1^x F2^y F4^z E2^e over the cyclic orbit (x,y,z) ->
// (z,x,y) of the exponents of F1, F2, F4
void add_cyc(PolyQ& p, const Rat& coef, int e0, int x, int y, int z, int e) {
  p.add_term({e0, x, y, z, e}, coef);
  p.add_term({e0, z, x, y, e}, coef);
  p.add_term({e0, y, z, x, e}, coef);
}

void add_octic_part(PolyQ& p) {
  p.add_term({8, 0, 0, 0, 0}, Rat(-3));
  p.add_term({5, 1, 1, 1, 0}, Rat(38));
  add_cyc(p, Rat(13), 4, 0, 1, 3, 0);
  add_cyc(p, Rat(-46), 3, 2, 0, 3, 0);
  add_cyc(p, Rat(5), 2, 1, 0, 5, 0);
  p.add_term({2, 2, 2, 2, 0}, Rat(23));
  add_cyc(p, Rat(-2), 1, 0, 0, 7, 0);
  add_cyc(p, Rat(-8), 1, 1, 2, 4, 0);
  add_cyc(p, Rat(2), 0, 0, 2, 6, 0);
  add_cyc(p, Rat(-5), 0, 3, 1, 4, 0);
}

}  // namespace

PolyQ p8_closed_form() {
  const Rat u(6, 7);
  const Rat u2 = u * u, u4 = u2 * u2;
  PolyQ p;
  p.add_term({0, 0, 0, 0, 4}, u4);
  // -3 (6/7 E2)^2 (2 F0^4 + 6 F0 F1 F2 F4 + cyc(F2 F4^3))
  p.add_term({4, 0, 0, 0, 2}, -6 * u2);
  p.add_term({1, 1, 1, 1, 2}, -18 * u2);
  add_cyc(p, -3 * u2, 0, 0, 1, 3, 2);
  // (6/7 E2) * (...)
  p.add_term({6, 0, 0, 0, 1}, -8 * u);
  p.add_term({3, 1, 1, 1, 1}, 20 * u);
  add_cyc(p, 10 * u, 2, 0, 1, 3, 1);
  add_cyc(p, 10 * u, 1, 2, 0, 3, 1);
  p.add_term({0, 2, 2, 2, 1}, 15 * u);
  add_cyc(p, u, 0, 1, 0, 5, 1);
  add_octic_part(p);
  return p;
}

PolyQ octic_closed_form() {
  PolyQ q;
  add_octic_part(q);
  return q;
}

PolyQ derive_octic(const PolyQ& p8) {
  PolyQ q;
  for (const auto& [mon, coef] : p8.terms())
    if (mon[4] == 0) q.add_term(mon, coef);
  return q;
}

std::vector<PolyQ> cusp_basis_weight2() {
  auto quad = [](int i, int j, int k) {
    PolyQ p;
    Mon5 m1{}, m2{};
    m1[(size_t)i] = 1;
    m1[(size_t)j] += 1;
    m2[(size_t)k] = 2;
    p.add_term(m1, Rat(2));
    p.add_term(m2, Rat(-1));
    return p;
  };
  // 2 F0 F1 - F4^2, 2 F0 F2 - F1^2, 2 F0 F4 - F2^2
  return {quad(0, 1, 3), quad(0, 2, 1), quad(0, 3, 2)};
}

std::vector<PolyQ> sections_2K() {
  const Rat u(6, 7);
  std::vector<PolyQ> s(8);

  s[0].add_term({4, 0, 0, 0, 0}, Rat(1));
  s[0].add_term({0, 0, 0, 0, 2}, -(u * u));
  s[0].add_term({1, 1, 1, 1, 0}, Rat(3));
  add_cyc(s[0], Rat(1, 2), 0, 0, 1, 3, 0);

  s[1].add_term({4, 0, 0, 0, 0}, Rat(4));
  s[1].add_term({2, 0, 0, 0, 1}, 4 * u);
  s[1].add_term({1, 1, 1, 1, 0}, Rat(-10));
  add_cyc(s[1], Rat(1), 0, 0, 1, 3, 0);

  // 4 Fi F0 (F0^2 + 6/7 E2) - 10 Fj^2 F0^2 - 4 Fj Fk^2 F0 - 4 Fj Fk Fi^2
  //   + Fk^4 + 12/7 E2 Fj^2   for (i, j, k) = (1, 4, 2), (2, 1, 4), (4, 2, 1)
  struct Rot {
    int i, j, k;
  };
  const Rot rots[3] = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}};  // indices into F1, F2, F4
  for (int r = 0; r < 3; ++r) {
    auto [i, j, k] = rots[r];
    PolyQ& p = s[(size_t)(2 + r)];
    Mon5 m{};
    m[(size_t)i] = 1;
    m[0] = 3;
    p.add_term(m, Rat(4));  // 4 Fi F0^3
    m[0] = 1;
    m[4] = 1;
    p.add_term(m, 4 * u);  // 4 u Fi F0 E2
    m = Mon5{2, 0, 0, 0, 0};
    m[(size_t)j] = 2;
    p.add_term(m, Rat(-10));
    m = Mon5{1, 0, 0, 0, 0};
    m[(size_t)j] += 1;
    m[(size_t)k] += 2;
    p.add_term(m, Rat(-4));
    m = Mon5{0, 0, 0, 0, 0};
    m[(size_t)j] += 1;
    m[(size_t)k] += 1;
    m[(size_t)i] += 2;
    p.add_term(m, Rat(-4));
    m = Mon5{0, 0, 0, 0, 0};
    m[(size_t)k] = 4;
    p.add_term(m, Rat(1));
    m = Mon5{0, 0, 0, 0, 1};
    m[(size_t)j] = 2;
    p.add_term(m, 2 * u);
  }

  // 2 Fa Fb F0^2 + 2 Fb^3 F0 - 2 Fc^2 Fa F0 + Fc^2 Fb^2 - 12/7 E2 Fa Fb
  //   + 2 Fc Fa^3  for (a, b, c) = (2, 1, 4), (1, 4, 2), (4, 2, 1)
  const Rot rots2[3] = {{2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
  for (int r = 0; r < 3; ++r) {
    auto [a, b, c] = rots2[r];
    PolyQ& p = s[(size_t)(5 + r)];
    Mon5 m{2, 0, 0, 0, 0};
    m[(size_t)a] += 1;
    m[(size_t)b] += 1;
    p.add_term(m, Rat(2));
    m = Mon5{1, 0, 0, 0, 0};
    m[(size_t)b] = 3;
    p.add_term(m, Rat(2));
    m = Mon5{1, 0, 0, 0, 0};
    m[(size_t)c] = 2;
    m[(size_t)a] += 1;
    p.add_term(m, Rat(-2));
    m = Mon5{0, 0, 0, 0, 0};
    m[(size_t)c] = 2;
    m[(size_t)b] += 2;
    p.add_term(m, Rat(1));
    m = Mon5{0, 0, 0, 0, 1};
    m[(size_t)a] += 1;
    m[(size_t)b] += 1;
    p.add_term(m, -2 * u);
    m = Mon5{0, 0, 0, 0, 0};
    m[(size_t)c] = 1;
    m[(size_t)a] += 3;
    p.add_term(m, Rat(2));
  }
  return s;
}

// --- span analysis -----------------------------------------------------------

namespace {

std::vector<Mon5> weighted_monomials(int degree) {
  std::vector<Mon5> out;
  for (int e4 = 0; 2 * e4 <= degree; ++e4) {
    int fd = degree - 2 * e4;
    for (int e0 = 0; e0 <= fd; ++e0)
      for (int e1 = 0; e1 + e0 <= fd; ++e1)
        for (int e2 = 0; e2 + e1 + e0 <= fd; ++e2)
          out.push_back({e0, e1, e2, fd - e0 - e1 - e2, e4});
  }
  return out;
}

}  // namespace

SpanAnalysis analyze_span(const std::vector<PolyQ>& polys) {
  SpanAnalysis out;
  if (polys.empty()) return out;
  int degree = polys[0].degree();
  for (const auto& p : polys)
    if (p.degree() != degree) throw std::invalid_argument("span polys must share a weighted degree");

  std::vector<Mon5> ambient = weighted_monomials(degree);
  std::map<Mon5, size_t> index;
  for (size_t i = 0; i < ambient.size(); ++i) index[ambient[i]] = i;

  const size_t n = polys.size();
  RatMatrix B(ambient.size(), std::vector<Rat>(n, Rat(0)));
  for (size_t j = 0; j < n; ++j)
    for (const auto& [m, c] : polys[j].terms()) B[index.at(m)][j] = c;

  RatMatrix basis_check = B;
  out.dimension = rational_rank(basis_check);
  if ((size_t)out.dimension != n) return out;  // dependent input; nothing further to say

  // matrices of the two generators on the span (columns = images in basis)
  const auto& closure = generate_group();
  std::array<std::vector<std::vector<Cyc7>>, 2> gen_matrix;
  for (int gi = 0; gi < 2; ++gi) {
    gen_matrix[(size_t)gi].assign(n, std::vector<Cyc7>(n, Cyc7(0)));
    for (size_t j = 0; j < n; ++j) {
      PolyC image = act_on_polynomial(closure.generators[(size_t)gi], to_cyclotomic(polys[j]));
      // solve B x = image, one rational system per cyclotomic coordinate
      for (size_t d = 0; d < 6; ++d) {
        std::vector<Rat> rhs(ambient.size(), Rat(0));
        bool nonzero = false;
        for (const auto& [m, c] : image.terms()) {
          rhs[index.at(m)] = c[d];
          if (c[d] != 0) nonzero = true;
        }
        std::vector<Rat> x;
        if (!nonzero) continue;
        if (!rational_solve(B, rhs, x)) return out;  // image leaves the span
        for (size_t i = 0; i < n; ++i)
          if (x[i] != 0) gen_matrix[(size_t)gi][i][j] += Cyc7::zeta_pow((long)d) * x[i];
      }
    }
  }
  out.stable_under_generators = true;

  // replay the closure's word tree to get the whole representation
  auto mat_mul = [n](const std::vector<std::vector<Cyc7>>& a,
                     const std::vector<std::vector<Cyc7>>& b) {
    std::vector<std::vector<Cyc7>> r(n, std::vector<Cyc7>(n, Cyc7(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (a[i][k] == Cyc7(0)) continue;
        for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };

  std::vector<Cyc7> chars(closure.elements.size());
  std::vector<std::vector<std::vector<Cyc7>>> reps(closure.elements.size());
  for (size_t e = 0; e < closure.elements.size(); ++e) {
    if (closure.parent[e].first < 0) {
      reps[e].assign(n, std::vector<Cyc7>(n, Cyc7(0)));
      for (size_t i = 0; i < n; ++i) reps[e][i][i] = Cyc7(1);
    } else {
      reps[e] = mat_mul(reps[(size_t)closure.parent[e].first],
                        gen_matrix[(size_t)closure.parent[e].second]);
    }
    Cyc7 tr;
    for (size_t i = 0; i < n; ++i) tr += reps[e][i][i];
    chars[e] = tr;
  }

  Cyc7 sum, norm;
  for (const auto& ch : chars) {
    sum += ch;
    norm += ch * ch.conj();
  }
  out.trivial_multiplicity = sum.rational_part() / 336;
  out.character_norm_sq = norm.rational_part() / 336;
  return out;
}

VanishingChecks check_boundary_vanishing(const std::vector<PolyQ>& polys,
                                         const EisensteinBasis& basis) {
  VanishingChecks out;
  out.constant_terms_zero = true;
  out.orders_certified = true;
  const FieldElement one(1);
  const FieldElement w1sq = (FieldElement::w() + one) * (FieldElement::w() + one);
  const std::array<FieldElement, 3> rays = {one, FieldElement::w2(), w1sq};
  bool first = true;
  for (const auto& p : polys) {
    QExpansion<Rat> series = evaluate_on_basis(p, basis);
    if (series.coefficient({0, 0, 0}) != 0) out.constant_terms_zero = false;
    for (const auto& r : rays) {
      BoundaryOrder bo = boundary_order(series, r);
      if (bo.infinite) continue;
      if (!bo.exact()) out.orders_certified = false;
      if (first || bo.order < out.min_order) {
        out.min_order = bo.order;
        first = false;
      }
    }
  }
  return out;
}

IndependenceReport verify_irreducibility_obstructions(long trace_bound) {
  IndependenceReport out;
  out.invariant_dim_deg2 = invariant_dimension(2);

  EisensteinBasis basis = build_eisenstein_basis(trace_bound);
  QExpansion<Rat> f0_inv = basis.F[0].inverse();
  QExpansion<Rat> j = jacobian_det(basis.F[1] * f0_inv, basis.F[2] * f0_inv, basis.F[3] * f0_inv);
  out.jacobian_nonzero = !j.is_zero();
  if (out.jacobian_nonzero) {
    const auto& [k, v] = *j.terms().begin();
    out.jacobian_leading_monomial = k;
    out.jacobian_leading_coefficient = v;
  }

  PolyQ p8 = p8_closed_form();
  for (const auto& [m, c] : p8.terms())
    if (m[4] == 1) out.p8_has_linear_e2_part = true;
  return out;
}

}  // namespace hmf
