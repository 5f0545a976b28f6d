#pragma once

// The 4x4 matrices gamma_4, gamma_7 over Q(zeta_7) acting on the span of
// F_0, F_1, F_2, F_4; closure of the group they generate (order 336, image
// SL(2, F_7)); invariant dimensions by Molien averaging; and rational bases
// of the invariant polynomial spaces.
//
// A matrix m acts on polynomials by substituting F_j -> sum_k m[k][j] F_k
// (the transpose), so that act(m1 m2) = act(m1) . act(m2) and the column
// (1,1,1,1)/scale of gamma_4 realizes its action on F_0.

#include <array>
#include <map>
#include <vector>

#include "hmf/cyclotomic.hpp"
#include "hmf/qseries.hpp"

namespace hmf {

// exponents of (F_0, F_1, F_2, F_4, E_2)
using Mon5 = std::array<int, 5>;

inline int weighted_degree(const Mon5& m) { return m[0] + m[1] + m[2] + m[3] + 2 * m[4]; }

template <class C>
class Polynomial {
 public:
  using Terms = std::map<Mon5, C>;

  Polynomial() = default;

  static Polynomial monomial(const Mon5& m, const C& coef) {
    Polynomial p;
    if (!(coef == C(0))) p.terms_[m] = coef;
    return p;
  }
  static Polynomial variable(int idx) {
    Mon5 m{};
    m[(size_t)idx] = 1;
    return monomial(m, C(1));
  }

  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Mon5& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Mon5& m, const C& coef) {
    if (coef == C(0)) return;
    auto [it, inserted] = terms_.emplace(m, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial operator*(const C& s) const {
    Polynomial r;
    if (s == C(0)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Mon5 m;
        for (size_t i = 0; i < 5; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m));
    return d;
  }

 private:
  Terms terms_;
};

using PolyQ = Polynomial<Rat>;
using PolyC = Polynomial<Cyc7>;

PolyC to_cyclotomic(const PolyQ& p);
PolyQ to_rational(const PolyC& p);  // throws on non-rational coefficients

struct CycMatrix {
  std::array<std::array<Cyc7, 4>, 4> m;

  static CycMatrix identity();
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator-() const;
  bool operator==(const CycMatrix& o) const { return m == o.m; }
  bool operator<(const CycMatrix& o) const { return m < o.m; }
  Cyc7 trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }
};

CycMatrix gamma4();
CycMatrix gamma7();

struct GroupClosure {
  std::vector<CycMatrix> elements;           // breadth-first from the identity
  std::vector<std::pair<int, int>> parent;   // elements[k] = elements[parent] * gen
  std::array<CycMatrix, 2> generators;       // gamma_4, gamma_7
};

// closure of {gamma_4, gamma_7} under multiplication; aborts beyond the guard
const GroupClosure& generate_group(size_t guard = 1000);

// distinct images modulo scalar matrices
int projective_size(const GroupClosure& g);

// dim Sym^k(V_4)^G by averaging the trace of the induced action on degree-k
// monomials over the group (complete homogeneous symmetric function of the
// eigenvalues, computed from power sums by the Newton recurrence).
long invariant_dimension(int k);

// substitution action described above; E_2 is fixed
PolyC act_on_polynomial(const CycMatrix& g, const PolyC& p);
PolyQ act_on_polynomial_rational(const CycMatrix& g, const PolyQ& p);

// rational basis of the G-invariant polynomials of degree k in the F's alone
std::vector<PolyQ> invariant_basis_fdeg(int k);

// the 6 invariants of weighted degree 8: F-degree 8 (three), E_2 * F-degree 6,
// E_2^2 * F-degree 4, and E_2^4
std::vector<PolyQ> invariant_basis_deg8();

}  // namespace hmf
