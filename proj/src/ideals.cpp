#include "hmf/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>

namespace hmf {

namespace {

long poly_mod(long x, long q) {
  // x^3 + x^2 - 2x - 1 mod q, inputs reduced
  long r = ((x + 1) % q * x % q - 2) % q * x % q - 1;
  r %= q;
  return r < 0 ? r + q : r;
}

std::shared_mutex cache_mutex;
std::map<long, std::vector<PrimeIdeal>> prime_cache;

}  // namespace

std::vector<PrimeIdeal> primes_over(long q) {
  {
    std::shared_lock lock(cache_mutex);
    auto it = prime_cache.find(q);
    if (it != prime_cache.end()) return it->second;
  }
  std::vector<PrimeIdeal> out;
  if (q == 7) {
    out.push_back({7, 1, true, 2});  // p = (2 - w), w = 2 mod p
  } else {
    for (long r = 0; r < q; ++r)
      if (poly_mod(r, q) == 0) out.push_back({q, 1, false, r});
    if (out.empty()) out.push_back({q, 3, false, -1});
    // q = +-1 mod 7 splits completely: a cubic with one root mod q has all three
    if (out.size() == 2) throw std::logic_error("partial splitting cannot happen in a Galois cubic");
  }
  std::unique_lock lock(cache_mutex);
  return prime_cache.emplace(q, std::move(out)).first->second;
}

Int IdealFactorization::ideal_norm() const {
  Int n = 1;
  for (const auto& [P, e] : factors)
    for (int i = 0; i < e; ++i) n *= P.ideal_norm();
  return n;
}

int IdealFactorization::p_valuation() const {
  for (const auto& [P, e] : factors)
    if (P.ramified) return e;
  return 0;
}

IdealFactorization IdealFactorization::without_p(int drop) const {
  IdealFactorization out;
  for (const auto& [P, e] : factors) {
    int keep = P.ramified ? e - drop : e;
    if (keep < 0) throw std::invalid_argument("ideal is not divisible by p^drop");
    if (keep > 0) out.factors.emplace_back(P, keep);
  }
  return out;
}

namespace {

// valuation of x at the degree-one prime (q, w - r): Hensel-lift the root r
// and test the image of x in O/P^k = Z/q^k by evaluation at the lift.
int valuation_deg1(const FieldElement& x, long q, long r) {
  Int A = x.a.get_num(), B = x.b.get_num(), C = x.c.get_num();
  Int qk = q;
  Int rk = r;
  int v = 0;
  while (true) {
    Int val = (A + B * rk + C * rk * rk) % qk;
    if (val != 0) return v;
    ++v;
    // lift root to mod q^{v+1}: Newton step, derivative 3r^2 + 2r - 2 invertible
    Int qk1 = qk * q;
    Int fr = ((rk + 1) * rk - 2) * rk - 1;
    Int dfr = 3 * rk * rk + 2 * rk - 2;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), qk1.get_mpz_t()) == 0)
      throw std::logic_error("derivative not invertible in unramified lift");
    rk = (rk - fr * inv) % qk1;
    if (rk < 0) rk += qk1;
    qk = qk1;
  }
}

int valuation_inert(const FieldElement& x, long q) {
  Int A = x.a.get_num(), B = x.b.get_num(), C = x.c.get_num();
  int v = 0;
  while (A % q == 0 && B % q == 0 && C % q == 0) {
    A /= q;
    B /= q;
    C /= q;
    ++v;
  }
  return v;
}

int valuation_at_p(FieldElement x) {
  int v = 0;
  while (residue_mod_p(x) == 0) {
    x = divide_by_pi(x);
    ++v;
  }
  return v;
}

}  // namespace

IdealFactorization factor_element(const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("cannot factor the zero ideal");
  if (!x.is_integral()) throw std::invalid_argument("factor_element needs an integral element");

  Int n = abs(Int(norm(x).get_num()));
  IdealFactorization out;

  // rational primes dividing the norm
  std::vector<long> qs;
  Int m = n;
  for (long q = 2; Int(q) * q <= m; ++q) {
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw std::overflow_error("norm prime too large");
    qs.push_back(m.get_si());
  }
  std::sort(qs.begin(), qs.end());

  for (long q : qs) {
    for (const auto& P : primes_over(q)) {
      int v;
      if (P.ramified)
        v = valuation_at_p(x);
      else if (P.f == 3)
        v = valuation_inert(x, q);
      else
        v = valuation_deg1(x, q, P.root);
      if (v > 0) out.factors.emplace_back(P, v);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  if (out.ideal_norm() != n) throw std::logic_error("local norms do not multiply to |N(x)|");
  return out;
}

int s_of_prime(const PrimeIdeal& P) {
  if (P.ramified) return 0;
  long nmod = 1;
  for (int i = 0; i < P.f; ++i) nmod = nmod * (P.q % 7) % 7;
  if (nmod == 1) return 1;
  if (nmod == 6) return -1;
  throw std::logic_error("prime norm is not a residue or antiresidue mod 7");
}

int legendre_mod7(long x) {
  long r = x % 7;
  if (r < 0) r += 7;
  if (r == 0) return 0;
  return (r == 1 || r == 2 || r == 4) ? 1 : -1;
}

int s_of_element(const FieldElement& c) {
  if (c.is_zero()) throw std::invalid_argument("s of zero is undefined");
  if (residue_mod_p(c) == 0) return 0;
  int s = 1;
  for (const auto& [P, e] : factor_element(c).factors)
    if (e % 2 != 0) s *= s_of_prime(P);
  return s;
}

int s_of_element_definitional(const FieldElement& c) {
  if (c.is_zero()) throw std::invalid_argument("s of zero is undefined");
  int r = residue_mod_p(c);
  if (r == 0) return 0;
  // unit residues +-2^j cover F_7^*; pick u with u*c = 1 mod p
  const FieldElement w = FieldElement::w();
  for (int j = 0; j < 3; ++j)
    for (int sign = 0; sign < 2; ++sign) {
      FieldElement u = power(w, j);
      if (sign) u = -u;
      if (residue_mod_p(u) * r % 7 == 1) {
        FieldElement c1 = u * c;
        return norm(c1) > 0 ? 1 : -1;
      }
    }
  throw std::logic_error("unit residues failed to cover F_7^*");
}

int s_of_element_product_formula(const FieldElement& c) {
  if (c.is_zero()) throw std::invalid_argument("s of zero is undefined");
  int r = residue_mod_p(c);
  if (r == 0) return 0;
  return (norm(c) > 0 ? 1 : -1) * legendre_mod7(r);
}

long divisor_sum_s(const IdealFactorization& f) {
  long total = 1;
  for (const auto& [P, e] : f.factors) {
    int s = s_of_prime(P);
    long sum = 0;
    int sj = 1;  // s^0 = 1 also when s = 0
    for (int j = 0; j <= e; ++j) {
      sum += sj;
      sj *= s;
    }
    total *= sum;
  }
  return total;
}

long divisor_sum_s(const FieldElement& a) { return divisor_sum_s(factor_element(a)); }

long rho_LK(const IdealFactorization& f) {
  long total = 1;
  for (const auto& [P, e] : f.factors) {
    long local;
    if (P.ramified)
      local = 1;
    else if (s_of_prime(P) == 1)  // split in L
      local = e + 1;
    else
      local = e % 2 == 0 ? 1 : 0;
    total *= local;
  }
  return total;
}

long rho_LK(const FieldElement& b) { return rho_LK(factor_element(b)); }

Int sigma1_ideal(const IdealFactorization& f) {
  Int total = 1;
  for (const auto& [P, e] : f.factors) {
    Int nq = P.ideal_norm();
    Int sum = 0, pw = 1;
    for (int j = 0; j <= e; ++j) {
      sum += pw;
      pw *= nq;
    }
    total *= sum;
  }
  return total;
}

FieldElement find_generator(const PrimeIdeal& P) {
  Int target = P.ideal_norm();
  auto in_ideal = [&](long a, long b, long c) {
    if (P.ramified) return (a + 2 * b + 4 * c) % 7 == 0;
    if (P.f == 3) return a % P.q == 0 && b % P.q == 0 && c % P.q == 0;
    long v = (a + b * P.root + c * P.root % P.q * P.root) % P.q;
    return ((v % P.q) + P.q) % P.q == 0;
  };
  for (long radius2 = 4;; radius2 *= 4) {
    long box = (long)std::sqrt((double)radius2) + 1;
    for (long a = -box; a <= box; ++a)
      for (long b = -box; b <= box; ++b)
        for (long c = -box; c <= box; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          FieldElement x{Rat(a), Rat(b), Rat(c)};
          if (trace_of_square(x) > radius2) continue;
          if (!in_ideal(a, b, c)) continue;
          if (abs(norm(x)) == Rat(target)) return x;
        }
    if (radius2 > (1L << 40)) throw std::runtime_error("generator search exhausted");
  }
}

CuspOrbits count_cusps() {
  // scalar group: residues of the units +-w^j
  std::vector<int> scalars;
  for (long r : {1, 2, 4})
    for (long sgn : {1, 6}) {
      int v = (int)(r * sgn % 7);
      if (std::find(scalars.begin(), scalars.end(), v) == scalars.end()) scalars.push_back(v);
    }
  std::sort(scalars.begin(), scalars.end());

  CuspOrbits out;
  out.scalar_group_order = (int)scalars.size();
  bool seen[7][7] = {};
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) {
      if ((x == 0 && y == 0) || seen[x][y]) continue;
      std::vector<std::pair<int, int>> orbit;
      for (int s : scalars) {
        int xs = x * s % 7, ys = y * s % 7;
        if (!seen[xs][ys]) {
          seen[xs][ys] = true;
          orbit.emplace_back(xs, ys);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      out.orbits.push_back(std::move(orbit));
    }
  out.count = (int)out.orbits.size();
  return out;
}

}  // namespace hmf
