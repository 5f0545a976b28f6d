#pragma once

// Cusp resolution fans and toric intersection theory.  The cusp of the
// level-one threefold is resolved by the fan of cones over the facets of the
// convex hull of totally positive integers: U-translates of the triangles
// {1, w^2, (w+1)^2} (lattice index 2, subdivided through 1+w+w^2 in the
// smooth version) and {1, 2+w, (w+1)^2} (a lattice basis).  The level-p cusp
// uses the same fan dilated by 2-w with the index-3 unit group U_1, which
// splits each divisor orbit into three.
//
// All geometry is computed in the undilated coordinates; dilation by 2-w is
// a lattice isomorphism and only affects labels and printout.

#include <array>
#include <vector>

#include "hmf/cubic_field.hpp"

namespace hmf {

enum class Level { full, level_p };
enum class Resolution { ch, sm };

struct Ray {
  FieldElement base;  // in the Y picture (multiply by 2-w for level p)
  std::array<long, 3> coords{};
  bool is_center = false;  // E-type (norm 7) vs hull vertex (unit)
  int orbit_class = 0;     // 0..2 by unit residue 1, 4, 2 mod p
};

struct Fan3D {
  Level level = Level::full;
  Resolution resolution = Resolution::ch;
  std::vector<Ray> rays;
  std::vector<std::array<int, 3>> cones;  // ray indices
  int window = 4;                         // unit-translation word length

  int ray_index(const FieldElement& base) const;
  FieldElement scaled(const Ray& r) const;
};

Fan3D build_cusp_fan(Level level, Resolution res, int window = 4);

struct DivisorCounts {
  int d_orbits_per_cusp = 0;
  int e_orbits_per_cusp = 0;
  int cusps = 8;
  int total_d() const { return d_orbits_per_cusp * cusps; }
  int total_e() const { return e_orbits_per_cusp * cusps; }
};

DivisorCounts divisor_counts(const Fan3D& fan);

// 2D star fan of a ray: neighbors in cyclic order, projected to the rank-2
// quotient lattice.
struct Star2D {
  int center = -1;
  std::vector<int> neighbors;                 // 3D ray indices, cyclic
  std::vector<std::array<long, 2>> rays;      // primitive projected coordinates
};

Star2D star_quotient(const Fan3D& fan, int ray_index);

// PL values of the restriction to the star of the divisor with the given
// coefficients per ray; the center's coefficient is absorbed by subtracting
// coeff(center) times the functional x -> first coordinate of x / center.
std::vector<Rat> restrict_divisor_to_star(const Fan3D& fan, const Star2D& star,
                                          const std::vector<Rat>& coefficients);

// coefficient vectors for common divisors
std::vector<Rat> coefficients_self(const Fan3D& fan, int ray_index);  // the ray's own orbit
std::vector<Rat> coefficients_boundary(const Fan3D& fan, const Rat& d_coef, const Rat& e_coef);

// PL values of the normal bundle of the divisor at the given ray
std::vector<Rat> normal_bundle_values(const Fan3D& fan, int ray_index);

// exact self-intersection of the PL divisor on the star surface; singular
// cones (index 2) are subdivided with linearly interpolated values
Rat pl_self_intersection(const Star2D& star, const std::vector<Rat>& values);

// intersection of the PL divisor with each boundary curve of the star surface
std::vector<Rat> pl_curve_intersections(const Star2D& star, const std::vector<Rat>& values);

// support function of the convex hull evaluated at the ray, minus one:
// 0 on hull vertices, 1/2 on the centers
Rat discrepancy(const Fan3D& fan, int ray_index);

// every exceptional ray has coefficient -1 relative to the minimal model
inline Rat discrepancy_relative_to_x(const Fan3D&, int) { return Rat(-1); }

struct HullFacetReport {
  FieldElement multiplier;          // mu with Tr(r * mu) = m on the facet
  long trace_cap = 0;               // m
  size_t candidates = 0;            // totally positive elements of trace in 7Z, <= m
  size_t divisible = 0;             // those divisible by mu
  std::vector<FieldElement> ratios;
  bool ratios_are_vertices = false;
  bool ok = false;
};

// Proves the triple spans a hull facet: solves the supporting functional,
// clears denominators to a totally positive multiplier mu in p, enumerates
// the finitely many totally positive elements with Tr(r mu) <= m, and checks
// that exactly the three vertices survive division by mu.
HullFacetReport verify_hull_facet(const std::array<FieldElement, 3>& vertices);

struct IntersectionNumbers {
  Rat L3;
  Rat KE2_L;              // (K - E/2)^2 L
  Rat KE2_E;              // (K - E/2)^2 E
  Rat d1_restriction_sq;  // (2L - 3/2 E - D)^2 restricted to D_1
  Rat KE2_D;              // (K - E/2)^2 D
  Rat KE3;                // (K - E/2)^3
};

IntersectionNumbers intersection_numbers();

// K restricted to D_1 on the partial resolution, dotted with each of the six
// boundary curves
std::vector<Rat> kch_boundary_intersections();

}  // namespace hmf
