#pragma once

// Ideal arithmetic in O = Z[w].  O is a PID; every prime of O lies over a
// rational prime q and has residue degree 1 (q = 0, 1, 6 mod 7) or 3.  The
// ramified prime is p = (2 - w) over 7, with (7) = p^3.

#include <map>
#include <optional>
#include <vector>

#include "hmf/cubic_field.hpp"

namespace hmf {

struct PrimeIdeal {
  long q = 0;           // rational prime below
  int f = 1;            // residue degree, 1 or 3
  bool ramified = false;
  long root = -1;       // root of x^3 + x^2 - 2x - 1 mod q when f == 1

  Int ideal_norm() const {
    Int n = q;
    for (int i = 1; i < f; ++i) n *= q;
    return n;
  }

  bool operator<(const PrimeIdeal& o) const {
    return q != o.q ? q < o.q : root < o.root;
  }
  bool operator==(const PrimeIdeal& o) const { return q == o.q && root == o.root; }
};

struct IdealFactorization {
  std::vector<std::pair<PrimeIdeal, int>> factors;  // exponents >= 1, sorted

  Int ideal_norm() const;
  bool is_trivial() const { return factors.empty(); }
  // valuation at p (0 if p does not occur)
  int p_valuation() const;
  IdealFactorization without_p(int drop) const;  // divide out p^drop
};

// Primes of O over q, each as (PrimeIdeal).  Cached process-wide.
std::vector<PrimeIdeal> primes_over(long q);

// Factorization of the principal ideal (x), x integral and nonzero.
IdealFactorization factor_element(const FieldElement& x);

// The quadratic character s: 0 on p, else +1 iff N(P) = 1 mod 7
// (P splits in Q(zeta_7)) and -1 iff N(P) = 6 mod 7 (P inert).
int s_of_prime(const PrimeIdeal& P);

// s on a principal ideal (c), via the Frobenius rule on the factorization.
int s_of_element(const FieldElement& c);

// Definitional evaluation: pick the generator c1 of (c) with c1 = 1 mod p
// (unit residues cover all of F_7^*) and return sign(Norm(c1)).
int s_of_element_definitional(const FieldElement& c);

// Product formula: sign(Norm(c)) * legendre(c mod p, 7).
int s_of_element_product_formula(const FieldElement& c);

// sum of s over ideal divisors of (a); multiplicative over prime powers
long divisor_sum_s(const FieldElement& a);
long divisor_sum_s(const IdealFactorization& f);

// number of ideals of L = Q(zeta_7) with relative norm (b)
long rho_LK(const FieldElement& b);
long rho_LK(const IdealFactorization& f);

// sum of norms of ideal divisors
Int sigma1_ideal(const IdealFactorization& f);

int legendre_mod7(long x);

// A generator of P, found by enumerating lattice elements of growing
// Tr(x^2) (the sum-of-squares norm of the embedding) inside P.
FieldElement find_generator(const PrimeIdeal& P);

struct CuspOrbits {
  int count = 0;
  int scalar_group_order = 0;
  std::vector<std::vector<std::pair<int, int>>> orbits;  // nonzero pairs over F_7
};

// Cusps of the level-p threefold: nonzero points of (O/p)^2 modulo the unit
// residues acting by scalars.
CuspOrbits count_cusps();

}  // namespace hmf
