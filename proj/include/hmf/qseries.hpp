#pragma once

// Sparse exact trivariate q-expansions at the cusp (i*inf)^3.  A monomial
// q1^n1 q2^n2 q3^n3 corresponds to the lattice element a in O with
//   n1 = Tr(a(2-w))/7 = a - b + 2c,
//   n2 = Tr(a(4-w^2))/7 = a + c,
//   n3 = Tr(a(1+w+w^2))/7 = a + 2c,
// an unimodular change of coordinates, so exponent triples and lattice
// elements are in exact bijection.  n1 + n2 + n3 = Tr(a), which is the
// grading used for truncation.

#include <map>
#include <optional>
#include <vector>

#include "hmf/cubic_field.hpp"
#include "hmf/cyclotomic.hpp"

namespace hmf {

using Key3 = std::array<long, 3>;

inline long key_degree(const Key3& k) { return k[0] + k[1] + k[2]; }

struct GradedLex {
  bool operator()(const Key3& x, const Key3& y) const {
    long dx = key_degree(x), dy = key_degree(y);
    if (dx != dy) return dx < dy;
    return x < y;
  }
};

inline Key3 exponents_of(const FieldElement& x) {
  if (!x.is_integral()) throw std::invalid_argument("exponents need an integral element");
  long a = x.a.get_num().get_si(), b = x.b.get_num().get_si(), c = x.c.get_num().get_si();
  return {a - b + 2 * c, a + c, a + 2 * c};
}

inline FieldElement element_of(const Key3& n) {
  return {Rat(2 * n[1] - n[2]), Rat(n[2] - n[0]), Rat(n[2] - n[1])};
}

template <class C>
class QExpansion {
 public:
  using Terms = std::map<Key3, C, GradedLex>;

  QExpansion() : bound_(0) {}
  explicit QExpansion(long bound) : bound_(bound) {}

  long bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  C coefficient(const Key3& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }

  void set(const Key3& k, C v) {
    if (key_degree(k) > bound_) throw std::invalid_argument("monomial beyond truncation bound");
    if (k[0] < 0 || k[1] < 0 || k[2] < 0) throw std::invalid_argument("negative exponent");
    if (v == C(0))
      terms_.erase(k);
    else
      terms_[k] = std::move(v);
  }

  void add_to(const Key3& k, const C& v) {
    if (key_degree(k) > bound_ || v == C(0)) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }

  bool operator==(const QExpansion& o) const {
    return bound_ == o.bound_ && terms_ == o.terms_;
  }

  QExpansion truncated(long new_bound) const {
    QExpansion r(std::min(new_bound, bound_));
    for (const auto& [k, v] : terms_) {
      if (key_degree(k) > r.bound_) break;
      r.terms_.emplace(k, v);
    }
    return r;
  }

  QExpansion operator+(const QExpansion& o) const {
    QExpansion r(std::min(bound_, o.bound_));
    for (const auto& [k, v] : terms_) {
      if (key_degree(k) > r.bound_) break;
      r.terms_.emplace(k, v);
    }
    for (const auto& [k, v] : o.terms_) {
      if (key_degree(k) > r.bound_) break;
      r.add_to(k, v);
    }
    return r;
  }

  QExpansion operator-() const {
    QExpansion r(bound_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }

  QExpansion operator-(const QExpansion& o) const { return *this + (-o); }

  QExpansion operator*(const C& s) const {
    QExpansion r(bound_);
    if (s == C(0)) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * s);
    return r;
  }

  QExpansion operator*(const QExpansion& o) const {
    QExpansion r(std::min(bound_, o.bound_));
    for (const auto& [kf, vf] : terms_) {
      long df = key_degree(kf);
      if (df > r.bound_) break;
      for (const auto& [kg, vg] : o.terms_) {
        if (df + key_degree(kg) > r.bound_) break;
        r.add_to({kf[0] + kg[0], kf[1] + kg[1], kf[2] + kg[2]}, vf * vg);
      }
    }
    return r;
  }

  // multiplicative inverse; requires a nonzero constant term
  QExpansion inverse() const {
    auto c0 = terms_.find(Key3{0, 0, 0});
    if (c0 == terms_.end()) throw std::invalid_argument("inverse needs a nonzero constant term");
    // g = 1/c0 * sum_j (1 - f/c0)^j, truncation makes the sum finite:
    // iterate g_{next} = g + g*(1 - f*g) doubling-style is overkill here;
    // a simple degree-by-degree solve is clearer
    QExpansion r(bound_);
    C inv0 = C(1) / c0->second;
    r.terms_[{0, 0, 0}] = inv0;
    // (f * r - 1) must vanish; solve for coefficients in graded order
    // r_k = -inv0 * sum_{0 < j <= k} f_j r_{k-j}
    for (long d = 1; d <= bound_; ++d) {
      for (long n1 = 0; n1 <= d; ++n1)
        for (long n2 = 0; n2 + n1 <= d; ++n2) {
          Key3 k{n1, n2, d - n1 - n2};
          C acc(0);
          for (const auto& [kf, vf] : terms_) {
            if (key_degree(kf) > d) break;
            if (kf == Key3{0, 0, 0}) continue;
            Key3 rest{k[0] - kf[0], k[1] - kf[1], k[2] - kf[2]};
            if (rest[0] < 0 || rest[1] < 0 || rest[2] < 0) continue;
            auto it = r.terms_.find(rest);
            if (it != r.terms_.end()) acc += vf * it->second;
          }
          if (!(acc == C(0))) r.terms_[k] = -(inv0 * acc);
        }
    }
    return r;
  }

  QExpansion derivative(int var) const {
    QExpansion r(bound_ > 0 ? bound_ - 1 : 0);
    for (const auto& [k, v] : terms_) {
      if (k[(size_t)var] == 0) continue;
      Key3 kk = k;
      kk[(size_t)var] -= 1;
      if (key_degree(kk) > r.bound_) continue;
      r.add_to(kk, v * C(k[(size_t)var]));
    }
    return r;
  }

 private:
  long bound_;
  Terms terms_;
};

// Univariate restriction to the diagonal z = (tau, tau, tau).  Exponents are
// integers over a fixed denominator: the coefficient at key n is the
// coefficient of q^(n/denom), q = exp(2*pi*i*tau).
template <class C>
struct DiagonalSeries {
  long bound = 0;  // complete for keys <= bound
  long denom = 1;
  std::map<long, C> terms;

  C coefficient(long n) const {
    auto it = terms.find(n);
    return it == terms.end() ? C(0) : it->second;
  }

  void add_to(long n, const C& v) {
    if (n > bound || v == C(0)) return;
    auto [it, inserted] = terms.emplace(n, v);
    if (!inserted) {
      it->second += v;
      if (it->second == C(0)) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  DiagonalSeries rebased(long new_denom) const {
    if (new_denom % denom != 0) throw std::invalid_argument("incompatible denominators");
    long f = new_denom / denom;
    DiagonalSeries r;
    r.bound = bound * f;
    r.denom = new_denom;
    for (const auto& [n, v] : terms) r.terms.emplace(n * f, v);
    return r;
  }

  DiagonalSeries operator+(const DiagonalSeries& o) const {
    if (denom != o.denom) throw std::invalid_argument("denominator mismatch");
    DiagonalSeries r;
    r.bound = std::min(bound, o.bound);
    r.denom = denom;
    for (const auto& [n, v] : terms)
      if (n <= r.bound) r.terms.emplace(n, v);
    for (const auto& [n, v] : o.terms) r.add_to(n, v);
    return r;
  }

  DiagonalSeries operator-() const {
    DiagonalSeries r = *this;
    for (auto& [n, v] : r.terms) v = -v;
    return r;
  }

  DiagonalSeries operator-(const DiagonalSeries& o) const { return *this + (-o); }

  DiagonalSeries operator*(const C& s) const {
    DiagonalSeries r;
    r.bound = bound;
    r.denom = denom;
    if (s == C(0)) return r;
    for (const auto& [n, v] : terms) r.terms.emplace(n, v * s);
    return r;
  }

  DiagonalSeries operator*(const DiagonalSeries& o) const {
    if (denom != o.denom) throw std::invalid_argument("denominator mismatch");
    DiagonalSeries r;
    r.bound = std::min(bound, o.bound);
    r.denom = denom;
    for (const auto& [nf, vf] : terms) {
      if (nf > r.bound) break;
      for (const auto& [ng, vg] : o.terms) {
        if (nf + ng > r.bound) break;
        r.add_to(nf + ng, vf * vg);
      }
    }
    return r;
  }

  bool operator==(const DiagonalSeries& o) const {
    return denom == o.denom && bound == o.bound && terms == o.terms;
  }
};

template <class C>
DiagonalSeries<C> restrict_diagonal(const QExpansion<C>& f) {
  DiagonalSeries<C> r;
  r.bound = f.bound();
  r.denom = 7;
  for (const auto& [k, v] : f.terms()) r.add_to(key_degree(k), v);
  return r;
}

// coefficient-wise twist by zeta_7^(n1+n2+n3): the action of z -> z + (1,1,1)
QExpansion<Cyc7> g7_translate(const QExpansion<Rat>& f);
QExpansion<Cyc7> g7_translate(const QExpansion<Cyc7>& f);
QExpansion<Cyc7> to_cyclotomic(const QExpansion<Rat>& f);

struct BoundaryOrder {
  bool infinite = false;  // empty series
  Rat order;              // min pairing over stored monomials
  Rat certified_below;    // every unstored monomial pairs strictly above this
  bool exact() const { return infinite || order <= certified_below; }
};

// Vanishing order along the boundary divisor whose ray is (2-w)*r: the
// minimum of Tr(a*(2-w)*r)/7 over the support.  Monomials beyond the
// truncation bound T pair above T*min_i((2-w)*r)_i/7, which certifies the
// reported minimum once it falls below that threshold.
BoundaryOrder boundary_order(const QExpansion<Rat>& f, const FieldElement& r);

// det of the matrix (d T_j / d q_i) for the three series ratios
QExpansion<Rat> jacobian_det(const QExpansion<Rat>& t1, const QExpansion<Rat>& t2,
                             const QExpansion<Rat>& t3);

// --- interchange format -----------------------------------------------------

// header "T=<bound>", then one monomial per line: "p/q n1 n2 n3"
std::string to_interchange(const QExpansion<Rat>& f);
QExpansion<Rat> from_interchange(const std::string& text);

// the cyclic-orbit notation q(a1,a2,a3); delta = 1/3 when a1 = a2 = a3
std::string to_symmetrized(const QExpansion<Rat>& f);

}  // namespace hmf
