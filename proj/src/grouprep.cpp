#include "hmf/grouprep.hpp"

#include <algorithm>

#include "hmf/linalg.hpp"

namespace hmf {

PolyC to_cyclotomic(const PolyQ& p) {
  PolyC out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Cyc7(c));
  return out;
}

PolyQ to_rational(const PolyC& p) {
  PolyQ out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c.rational_part());
  return out;
}

CycMatrix CycMatrix::identity() {
  CycMatrix r;
  for (int i = 0; i < 4; ++i) r.m[(size_t)i][(size_t)i] = Cyc7(1);
  return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  CycMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Cyc7 acc;
      for (int k = 0; k < 4; ++k) acc += m[(size_t)i][(size_t)k] * o.m[(size_t)k][(size_t)j];
      r.m[(size_t)i][(size_t)j] = acc;
    }
  return r;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[(size_t)i][(size_t)j] = -m[(size_t)i][(size_t)j];
  return r;
}

CycMatrix gamma4() {
  // -(i/sqrt(7)) = -g/7, with g the Gauss sum; the sign is the one consistent
  // with the Fricke expansion of F0bar (the other sign flips that series).
  Cyc7 scale = -(gauss_sum7() * Rat(1, 7));
  Cyc7 a1 = Cyc7::zeta_pow(1) + Cyc7::zeta_pow(6);
  Cyc7 a2 = Cyc7::zeta_pow(2) + Cyc7::zeta_pow(5);
  Cyc7 a3 = Cyc7::zeta_pow(3) + Cyc7::zeta_pow(4);
  Cyc7 two(2), one(1);
  CycMatrix r;
  r.m = {{{one, two, two, two},
          {one, a1, a3, a2},
          {one, a3, a2, a1},
          {one, a2, a1, a3}}};
  for (auto& row : r.m)
    for (auto& x : row) x *= scale;
  return r;
}

CycMatrix gamma7() {
  CycMatrix r;
  r.m[0][0] = Cyc7(1);
  r.m[1][1] = Cyc7::zeta_pow(3);
  r.m[2][2] = Cyc7::zeta_pow(6);
  r.m[3][3] = Cyc7::zeta_pow(5);
  return r;
}

const GroupClosure& generate_group(size_t guard) {
  static const GroupClosure closure = [guard] {
    GroupClosure g;
    g.generators = {gamma4(), gamma7()};
    std::map<CycMatrix, int> seen;
    g.elements.push_back(CycMatrix::identity());
    g.parent.emplace_back(-1, -1);
    seen.emplace(g.elements[0], 0);
    for (size_t head = 0; head < g.elements.size(); ++head) {
      for (int gi = 0; gi < 2; ++gi) {
        CycMatrix next = g.elements[head] * g.generators[(size_t)gi];
        if (seen.emplace(next, (int)g.elements.size()).second) {
          g.elements.push_back(next);
          g.parent.emplace_back((int)head, gi);
          if (g.elements.size() > guard) throw std::runtime_error("group closure exceeded guard");
        }
      }
    }
    return g;
  }();
  return closure;
}

int projective_size(const GroupClosure& g) {
  // scale each matrix so its first nonzero entry is 1, then count distinct
  std::map<CycMatrix, int> classes;
  for (const auto& e : g.elements) {
    Cyc7 lead;
    bool found = false;
    for (int i = 0; i < 4 && !found; ++i)
      for (int j = 0; j < 4 && !found; ++j)
        if (!(e.m[(size_t)i][(size_t)j] == Cyc7(0))) {
          lead = e.m[(size_t)i][(size_t)j];
          found = true;
        }
    CycMatrix canon = e;
    Cyc7 inv = lead.inverse();
    for (auto& row : canon.m)
      for (auto& x : row) x *= inv;
    classes.emplace(canon, 1);
  }
  return (int)classes.size();
}

long invariant_dimension(int k) {
  if (k < 0 || k > 12) throw std::invalid_argument("invariant dimension supported for 0 <= k <= 12");
  const auto& g = generate_group();
  Cyc7 total;
  for (const auto& e : g.elements) {
    // power sums p_j = tr(e^j), then h_k via k h_k = sum p_i h_{k-i}
    std::vector<Cyc7> p((size_t)k + 1), h((size_t)k + 1);
    CycMatrix pw = e;
    for (int j = 1; j <= k; ++j) {
      p[(size_t)j] = pw.trace();
      if (j < k) pw = pw * e;
    }
    h[0] = Cyc7(1);
    for (int j = 1; j <= k; ++j) {
      Cyc7 acc;
      for (int i = 1; i <= j; ++i) acc += p[(size_t)i] * h[(size_t)(j - i)];
      h[(size_t)j] = acc * Rat(1, j);
    }
    total += h[(size_t)k];
  }
  Rat dim = total.rational_part() / 336;
  if (dim.get_den() != 1 || dim < 0) throw std::logic_error("Molien average is not a nonnegative integer");
  return dim.get_num().get_si();
}

namespace {

// images of the four variables under the substitution F_j -> sum_k m[k][j] F_k
std::array<PolyC, 4> variable_images(const CycMatrix& g) {
  std::array<PolyC, 4> img;
  for (int j = 0; j < 4; ++j) {
    PolyC acc;
    for (int k = 0; k < 4; ++k) {
      Mon5 m{};
      m[(size_t)k] = 1;
      acc.add_term(m, g.m[(size_t)k][(size_t)j]);
    }
    img[(size_t)j] = acc;
  }
  return img;
}

}  // namespace

PolyC act_on_polynomial(const CycMatrix& g, const PolyC& p) {
  auto img = variable_images(g);
  PolyC out;
  for (const auto& [mon, coef] : p.terms()) {
    PolyC term = Polynomial<Cyc7>::monomial(Mon5{0, 0, 0, 0, mon[4]}, coef);
    for (int v = 0; v < 4; ++v)
      for (int e = 0; e < mon[(size_t)v]; ++e) term = term * img[(size_t)v];
    out = out + term;
  }
  return out;
}

PolyQ act_on_polynomial_rational(const CycMatrix& g, const PolyQ& p) {
  return to_rational(act_on_polynomial(g, to_cyclotomic(p)));
}

namespace {

std::vector<Mon5> fdeg_monomials(int k, bool gamma7_filtered) {
  std::vector<Mon5> out;
  for (int e0 = 0; e0 <= k; ++e0)
    for (int e1 = 0; e1 + e0 <= k; ++e1)
      for (int e2 = 0; e2 + e1 + e0 <= k; ++e2) {
        int e4 = k - e0 - e1 - e2;
        // gamma_7 multiplies the monomial by zeta^(3 e1 + 6 e2 + 5 e4)
        if (gamma7_filtered && (3 * e1 + 6 * e2 + 5 * e4) % 7 != 0) continue;
        out.push_back({e0, e1, e2, e4, 0});
      }
  return out;
}

}  // namespace

std::vector<PolyQ> invariant_basis_fdeg(int k) {
  // gamma_7 acts diagonally on monomials, so its invariants are spanned by the
  // congruence-filtered monomials; gamma_4 invariance is a rational kernel on
  // top of that (6 rational equations per cyclotomic coordinate).
  std::vector<Mon5> filtered = fdeg_monomials(k, true);
  std::vector<Mon5> all = fdeg_monomials(k, false);
  std::map<Mon5, size_t> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = i;

  CycMatrix g4 = gamma4();
  RatMatrix system(all.size() * 6, std::vector<Rat>(filtered.size(), Rat(0)));
  for (size_t col = 0; col < filtered.size(); ++col) {
    PolyC image = act_on_polynomial(g4, to_cyclotomic(PolyQ::monomial(filtered[col], Rat(1))));
    image.add_term(filtered[col], Cyc7(Rat(-1)));
    for (const auto& [mon, coef] : image.terms()) {
      size_t row = index.at(mon) * 6;
      for (size_t d = 0; d < 6; ++d) system[row + d][col] = coef[d];
    }
  }

  std::vector<PolyQ> basis;
  for (const auto& v : rational_kernel(system)) {
    PolyQ p;
    Int lcm = 1;
    for (const auto& x : v) {
      Int den = x.get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (size_t i = 0; i < filtered.size(); ++i)
      if (v[i] != 0) p.add_term(filtered[i], v[i] * Rat(lcm));
    basis.push_back(std::move(p));
  }
  long expected = invariant_dimension(k);
  if ((long)basis.size() != expected)
    throw std::logic_error("rational invariant basis has unexpected dimension");
  return basis;
}

std::vector<PolyQ> invariant_basis_deg8() {
  std::vector<PolyQ> out;
  const Mon5 e2{0, 0, 0, 0, 1};
  for (PolyQ& p : invariant_basis_fdeg(8)) out.push_back(std::move(p));
  for (PolyQ& p : invariant_basis_fdeg(6)) out.push_back(PolyQ::monomial(e2, Rat(1)) * p);
  for (PolyQ& p : invariant_basis_fdeg(4)) {
    PolyQ e2sq = PolyQ::monomial(Mon5{0, 0, 0, 0, 2}, Rat(1));
    out.push_back(e2sq * p);
  }
  out.push_back(PolyQ::monomial(Mon5{0, 0, 0, 0, 4}, Rat(1)));
  if (out.size() != 6) throw std::logic_error("weighted degree 8 invariant space is not 6-dimensional");
  return out;
}

}  // namespace hmf
