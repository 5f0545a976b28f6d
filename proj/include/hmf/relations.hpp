#pragma once

// The degree-8 relation among F_0, F_1, F_2, F_4, E_2; the octic obtained by
// setting E_2 = 0; the weight-two cusp basis; the eight sections of 2K; and
// the algebraic-independence ingredients.

#include <stdexcept>

#include "hmf/eisenstein.hpp"
#include "hmf/grouprep.hpp"

namespace hmf {

struct InsufficientRows : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// evaluate a polynomial in (F_0, F_1, F_2, F_4, E_2) on the q-expansions
QExpansion<Rat> evaluate_on_basis(const PolyQ& p, const EisensteinBasis& basis);

struct RelationSearch {
  PolyQ p8;                       // normalized: (6/7 E_2)^4 coefficient is 1
  int kernel_dimension = 0;
  std::array<bool, 6> kernel_coordinate_nonzero{};  // leave-one-out full rank
  size_t rows = 0;
};

// Assemble the 6 weighted-degree-8 invariants evaluated on the Eisenstein
// series, truncated at trace T, and compute the kernel of the coefficient
// matrix.  Throws InsufficientRows for T < 25 and on kernel dimension != 1.
RelationSearch find_relation(long trace_bound);

// the closed form of the relation, for coefficient-level comparison
PolyQ p8_closed_form();

// substitute E_2 = 0
PolyQ derive_octic(const PolyQ& p8);
PolyQ octic_closed_form();

// 2 F_0 F_1 - F_4^2, 2 F_0 F_2 - F_1^2, 2 F_0 F_4 - F_2^2
std::vector<PolyQ> cusp_basis_weight2();

// the eight weighted-degree-4 sections of 2K
std::vector<PolyQ> sections_2K();

struct SpanAnalysis {
  bool stable_under_generators = false;
  int dimension = 0;
  Rat trivial_multiplicity;   // (1/336) sum of characters
  Rat character_norm_sq;      // (1/336) sum chi * conj(chi)
};

// Representation generated by the given polynomials under the matrix group:
// verifies the span is stable under both generators and computes the
// character data over the whole group by replaying the closure words.
SpanAnalysis analyze_span(const std::vector<PolyQ>& polys);

struct VanishingChecks {
  bool constant_terms_zero = false;
  Rat min_order;        // over all polys and the three vertex rays
  bool orders_certified = false;
};

// boundary orders of the given polynomials at the rays over
// r in {1, w^2, (w+1)^2}, evaluated on the basis
VanishingChecks check_boundary_vanishing(const std::vector<PolyQ>& polys,
                                         const EisensteinBasis& basis);

struct IndependenceReport {
  long invariant_dim_deg2 = -1;        // must be 0
  bool jacobian_nonzero = false;
  Key3 jacobian_leading_monomial{};
  Rat jacobian_leading_coefficient;
  bool p8_has_linear_e2_part = false;  // rules out (E2^2 + a P4)(E2^2 + b P4)
};

IndependenceReport verify_irreducibility_obstructions(long trace_bound);

}  // namespace hmf
