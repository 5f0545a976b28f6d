#include "hmf/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hmf/dims.hpp"
#include "hmf/linalg.hpp"

namespace hmf {

namespace {

std::array<long, 3> int_coords(const FieldElement& x) {
  if (!x.is_integral()) throw std::invalid_argument("ray must be integral");
  return {x.a.get_num().get_si(), x.b.get_num().get_si(), x.c.get_num().get_si()};
}

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
          const std::array<long, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

int orbit_class_of_residue(int r) {
  switch (r) {
    case 1: return 0;
    case 4: return 1;
    case 2: return 2;
    default: throw std::logic_error("unit residue must be 1, 2 or 4");
  }
}

}  // namespace

int Fan3D::ray_index(const FieldElement& base) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i].base == base) return (int)i;
  return -1;
}

FieldElement Fan3D::scaled(const Ray& r) const {
  return level == Level::level_p ? r.base * pi_generator() : r.base;
}

Fan3D build_cusp_fan(Level level, Resolution res, int window) {
  Fan3D fan;
  fan.level = level;
  fan.resolution = res;
  fan.window = window;

  const FieldElement one(1);
  const FieldElement w = FieldElement::w();
  const FieldElement w2 = FieldElement::w2();
  const FieldElement w1sq = (w + one) * (w + one);
  const FieldElement center = one + w + w2;
  const FieldElement delta2_mid = w + FieldElement(2);

  std::map<FieldElement, int> index;
  auto add_ray = [&](const FieldElement& r) {
    auto it = index.find(r);
    if (it != index.end()) return it->second;
    Ray ray;
    ray.base = r;
    ray.coords = int_coords(r);
    Rat n = norm(r);
    if (n == 1) {
      ray.is_center = false;
      ray.orbit_class = orbit_class_of_residue(residue_mod_p(r));
    } else if (n == 7) {
      ray.is_center = true;
      ray.orbit_class = orbit_class_of_residue(residue_mod_p(r * inverse(center)));
    } else {
      throw std::logic_error("fan ray is neither a unit nor a triangle center");
    }
    fan.rays.push_back(ray);
    int id = (int)fan.rays.size() - 1;
    index.emplace(r, id);
    return id;
  };
  auto add_cone = [&](const FieldElement& x, const FieldElement& y, const FieldElement& z) {
    fan.cones.push_back({add_ray(x), add_ray(y), add_ray(z)});
  };

  for (long i = -window; i <= window; ++i) {
    for (long j = -window; j <= window; ++j) {
      FieldElement u = power(w2, i) * power(w1sq, j);
      FieldElement t1 = u, t2 = u * w2, t3 = u * w1sq;  // index-2 triangle
      if (res == Resolution::ch) {
        add_cone(t1, t2, t3);
      } else {
        FieldElement c = u * center;
        add_cone(t1, t2, c);
        add_cone(t2, t3, c);
        add_cone(t1, t3, c);
      }
      add_cone(u, u * delta2_mid, t3);  // basis triangle
    }
  }

  // lattice indices: sm cones are unimodular, ch cones have index 1 or 2
  for (const auto& cone : fan.cones) {
    long d = std::abs(det3(fan.rays[(size_t)cone[0]].coords, fan.rays[(size_t)cone[1]].coords,
                           fan.rays[(size_t)cone[2]].coords));
    if (res == Resolution::sm && d != 1) throw std::logic_error("smooth fan has a non-unimodular cone");
    if (res == Resolution::ch && d != 1 && d != 2)
      throw std::logic_error("hull fan cone has unexpected index");
  }
  return fan;
}

DivisorCounts divisor_counts(const Fan3D& fan) {
  DivisorCounts out;
  bool d_seen[3] = {}, e_seen[3] = {};
  for (const auto& r : fan.rays) {
    if (r.is_center)
      e_seen[(size_t)r.orbit_class] = true;
    else
      d_seen[(size_t)r.orbit_class] = true;
  }
  int d_classes = (int)(d_seen[0] + d_seen[1] + d_seen[2]);
  int e_classes = (int)(e_seen[0] + e_seen[1] + e_seen[2]);
  if (fan.level == Level::full) {
    // all units (and all centers) form a single orbit under the full unit group
    out.d_orbits_per_cusp = d_classes > 0 ? 1 : 0;
    out.e_orbits_per_cusp = e_classes > 0 ? 1 : 0;
    out.cusps = 1;
  } else {
    out.d_orbits_per_cusp = d_classes;
    out.e_orbits_per_cusp = fan.resolution == Resolution::sm ? e_classes : 0;
    out.cusps = 8;
  }
  return out;
}

namespace {

long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// unimodular U with U * v = (1, 0, 0); rows 2 and 3 give the quotient map
std::array<std::array<long, 3>, 3> quotient_projection(const std::array<long, 3>& v) {
  long x, y;
  long g1 = ext_gcd(v[0], v[1], x, y);
  if (g1 == 0) {
    if (std::abs(v[2]) != 1) throw std::invalid_argument("ray is not primitive");
    return {{{0, 0, v[2]}, {1, 0, 0}, {0, 1, 0}}};
  }
  std::array<std::array<long, 3>, 3> G1 = {
      {{x, y, 0}, {-v[1] / g1, v[0] / g1, 0}, {0, 0, 1}}};
  // after G1, v maps to (g1, 0, v[2])
  long x2, y2;
  long g2 = ext_gcd(g1, v[2], x2, y2);
  if (g2 != 1) throw std::invalid_argument("ray is not primitive");
  std::array<std::array<long, 3>, 3> G2 = {{{x2, 0, y2}, {0, 1, 0}, {-v[2], 0, g1}}};
  std::array<std::array<long, 3>, 3> U{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) U[(size_t)i][(size_t)j] += G2[(size_t)i][(size_t)k] * G1[(size_t)k][(size_t)j];
  return U;
}

std::array<long, 2> apply_projection(const std::array<std::array<long, 3>, 3>& U,
                                     const std::array<long, 3>& x) {
  std::array<long, 2> out{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k) out[(size_t)i] += U[(size_t)(i + 1)][(size_t)k] * x[(size_t)k];
  return out;
}

long det2(const std::array<long, 2>& a, const std::array<long, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace

Star2D star_quotient(const Fan3D& fan, int ray_index) {
  Star2D star;
  star.center = ray_index;

  // cones through the ray give the neighbor adjacency
  std::map<int, std::vector<int>> adj;
  for (const auto& cone : fan.cones) {
    int pos = -1;
    for (int k = 0; k < 3; ++k)
      if (cone[(size_t)k] == ray_index) pos = k;
    if (pos < 0) continue;
    int a = cone[(size_t)((pos + 1) % 3)], b = cone[(size_t)((pos + 2) % 3)];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (adj.empty()) throw std::invalid_argument("ray is not a vertex of the fan");
  for (const auto& [r, nb] : adj)
    if (nb.size() != 2) throw std::logic_error("star of ray is not closed in this window");

  // walk the cycle
  int start = adj.begin()->first;
  int prev = -1, cur = start;
  do {
    star.neighbors.push_back(cur);
    const auto& nb = adj.at(cur);
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  } while (cur != start);

  auto U = quotient_projection(fan.rays[(size_t)ray_index].coords);
  for (int r : star.neighbors)
    star.rays.push_back(apply_projection(U, fan.rays[(size_t)r].coords));

  // orient positively
  long d = det2(star.rays[0], star.rays[1]);
  if (d < 0) {
    std::reverse(star.neighbors.begin(), star.neighbors.end());
    std::reverse(star.rays.begin(), star.rays.end());
  }
  size_t n = star.rays.size();
  for (size_t i = 0; i < n; ++i)
    if (det2(star.rays[i], star.rays[(i + 1) % n]) <= 0)
      throw std::logic_error("star fan is not a positively oriented cycle");

  for (const auto& r : star.rays)
    if (std::gcd(std::abs(r[0]), std::abs(r[1])) != 1)
      throw std::logic_error("projected ray is not primitive");
  return star;
}

std::vector<Rat> restrict_divisor_to_star(const Fan3D& fan, const Star2D& star,
                                          const std::vector<Rat>& coefficients) {
  const Ray& center = fan.rays[(size_t)star.center];
  FieldElement inv_center = inverse(center.base);
  Rat cv = coefficients[(size_t)star.center];
  std::vector<Rat> values;
  values.reserve(star.neighbors.size());
  for (int r : star.neighbors) {
    // functional with value 1 on the center: first coordinate of x / center
    Rat lambda = (fan.rays[(size_t)r].base * inv_center).a;
    values.push_back(coefficients[(size_t)r] - cv * lambda);
  }
  return values;
}

std::vector<Rat> coefficients_self(const Fan3D& fan, int ray_index) {
  const Ray& v = fan.rays[(size_t)ray_index];
  std::vector<Rat> c(fan.rays.size(), Rat(0));
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const Ray& r = fan.rays[i];
    bool same_orbit = fan.level == Level::level_p
                          ? (r.is_center == v.is_center && r.orbit_class == v.orbit_class)
                          : (r.is_center == v.is_center);
    if (same_orbit) c[i] = 1;
  }
  return c;
}

std::vector<Rat> coefficients_boundary(const Fan3D& fan, const Rat& d_coef, const Rat& e_coef) {
  std::vector<Rat> c(fan.rays.size(), Rat(0));
  for (size_t i = 0; i < fan.rays.size(); ++i) c[i] = fan.rays[i].is_center ? e_coef : d_coef;
  return c;
}

std::vector<Rat> normal_bundle_values(const Fan3D& fan, int ray_index) {
  Star2D star = star_quotient(fan, ray_index);
  return restrict_divisor_to_star(fan, star, coefficients_self(fan, ray_index));
}

namespace {

struct SmoothStar {
  std::vector<std::array<long, 2>> rays;
  std::vector<Rat> values;
  std::vector<int> original;  // index into the input star, -1 for inserted rays
};

SmoothStar subdivide(const Star2D& star, const std::vector<Rat>& values) {
  SmoothStar s;
  size_t n = star.rays.size();
  for (size_t i = 0; i < n; ++i) {
    s.rays.push_back(star.rays[i]);
    s.values.push_back(values[i]);
    s.original.push_back((int)i);
    const auto& u = star.rays[i];
    const auto& v = star.rays[(i + 1) % n];
    long d = det2(u, v);
    if (d == 1) continue;
    if (d != 2) throw std::logic_error("star subdivision implemented for index <= 2 only");
    // index-2 cone: the midpoint (u+v)/2 is the unique interior lattice ray
    if ((u[0] + v[0]) % 2 != 0 || (u[1] + v[1]) % 2 != 0)
      throw std::logic_error("index-2 cone midpoint is not integral");
    s.rays.push_back({(u[0] + v[0]) / 2, (u[1] + v[1]) / 2});
    s.values.push_back((values[i] + values[(i + 1) % n]) / 2);  // linear on the cone
    s.original.push_back(-1);
  }
  return s;
}

// u_{j-1} + u_{j+1} = a_j u_j on a smooth complete fan
long self_intersection_coefficient(const std::array<long, 2>& prev, const std::array<long, 2>& cur,
                                   const std::array<long, 2>& next) {
  long sx = prev[0] + next[0], sy = prev[1] + next[1];
  if (cur[0] != 0) {
    if (sx % cur[0] != 0 || sy * cur[0] != sx * cur[1])
      throw std::logic_error("fan is not smooth at a ray");
    return sx / cur[0];
  }
  if (sx != 0 || sy % cur[1] != 0) throw std::logic_error("fan is not smooth at a ray");
  return sy / cur[1];
}

}  // namespace

Rat pl_self_intersection(const Star2D& star, const std::vector<Rat>& values) {
  SmoothStar s = subdivide(star, values);
  size_t n = s.rays.size();
  Rat total(0);
  for (size_t j = 0; j < n; ++j) {
    long a = self_intersection_coefficient(s.rays[(j + n - 1) % n], s.rays[j], s.rays[(j + 1) % n]);
    total += s.values[j] * (s.values[(j + n - 1) % n] + s.values[(j + 1) % n] - Rat(a) * s.values[j]);
  }
  return total;
}

std::vector<Rat> pl_curve_intersections(const Star2D& star, const std::vector<Rat>& values) {
  SmoothStar s = subdivide(star, values);
  size_t n = s.rays.size();
  std::vector<Rat> out(star.rays.size(), Rat(0));
  for (size_t j = 0; j < n; ++j) {
    if (s.original[j] < 0) continue;
    long a = self_intersection_coefficient(s.rays[(j + n - 1) % n], s.rays[j], s.rays[(j + 1) % n]);
    out[(size_t)s.original[j]] =
        s.values[(j + n - 1) % n] + s.values[(j + 1) % n] - Rat(a) * s.values[j];
  }
  return out;
}

Rat discrepancy(const Fan3D& fan, int ray_index) {
  const Ray& ray = fan.rays[(size_t)ray_index];
  // hull support function: solve the facet functional on a hull cone
  // containing the ray; hull cones are the ch cones of the same window
  Fan3D hull = fan.resolution == Resolution::ch ? fan : build_cusp_fan(fan.level, Resolution::ch, fan.window);
  for (const auto& cone : hull.cones) {
    // membership: ray = sum alpha_i t_i with alpha_i >= 0
    RatMatrix m(3, std::vector<Rat>(3));
    for (int col = 0; col < 3; ++col) {
      const auto& t = hull.rays[(size_t)cone[(size_t)col]].coords;
      for (int row = 0; row < 3; ++row) m[(size_t)row][(size_t)col] = Rat(t[(size_t)row]);
    }
    std::vector<Rat> rhs = {Rat(ray.coords[0]), Rat(ray.coords[1]), Rat(ray.coords[2])};
    std::vector<Rat> alpha;
    if (!rational_solve(m, rhs, alpha)) continue;
    if (alpha[0] < 0 || alpha[1] < 0 || alpha[2] < 0) continue;
    // the support function is 1 on each facet vertex
    return alpha[0] + alpha[1] + alpha[2] - 1;
  }
  throw std::logic_error("ray lies in no hull cone of this window");
}

HullFacetReport verify_hull_facet(const std::array<FieldElement, 3>& vertices) {
  HullFacetReport out;

  // trace pairing matrix of the basis {1, w, w^2}
  const long T[3][3] = {{3, -1, 5}, {-1, 5, -4}, {5, -4, 13}};
  RatMatrix sys(3, std::vector<Rat>(3));
  for (int i = 0; i < 3; ++i) {
    auto vc = int_coords(vertices[(size_t)i]);
    for (int j = 0; j < 3; ++j) {
      Rat acc(0);
      for (int k = 0; k < 3; ++k) acc += Rat(T[(size_t)j][(size_t)k] * vc[(size_t)k]);
      sys[(size_t)i][(size_t)j] = acc;
    }
  }
  std::vector<Rat> lambda;
  if (!rational_solve(sys, {Rat(1), Rat(1), Rat(1)}, lambda))
    throw std::invalid_argument("degenerate vertex triple: supporting functional is not unique");

  // clear denominators: mu = m * lambda must be integral, totally positive, in p
  Int m = 1;
  for (const auto& x : lambda) {
    Int d = x.get_den();
    m = m / gcd(m, d) * d;
  }
  FieldElement mu{lambda[0] * Rat(m), lambda[1] * Rat(m), lambda[2] * Rat(m)};
  if (!is_totally_positive(mu)) throw std::logic_error("facet functional is not totally positive");
  if (residue_mod_p(mu) != 0) throw std::logic_error("facet functional does not lie in p");
  out.multiplier = mu;
  out.trace_cap = m.get_si();

  // any totally positive r with Tr(r mu) <= m yields a totally positive
  // product r*mu of trace in {7, 14, ..., m}; enumerate the candidates and
  // keep those divisible by mu
  FieldElement mu_inv = inverse(mu);
  std::vector<FieldElement> ratios;
  size_t candidates = 0;
  enumerate_totally_positive(out.trace_cap, -1, [&](long a, long b, long c, long t) {
    if (t % 7 != 0) return;
    ++candidates;
    FieldElement y{Rat(a), Rat(b), Rat(c)};
    FieldElement r = y * mu_inv;
    if (r.is_integral()) ratios.push_back(r);
  });
  out.candidates = candidates;
  out.divisible = ratios.size();
  out.ratios = ratios;

  std::vector<FieldElement> expect(vertices.begin(), vertices.end());
  std::sort(expect.begin(), expect.end());
  std::sort(ratios.begin(), ratios.end());
  out.ratios_are_vertices = ratios == expect;
  out.ok = out.ratios_are_vertices && out.divisible == 3;
  return out;
}

IntersectionNumbers intersection_numbers() {
  IntersectionNumbers out;
  // leading term of the Euler characteristic: chi(k) = (L^3/6) k^3 + ...,
  // so L^3 is the third finite difference
  Rat chi[4];
  for (int k = 0; k < 4; ++k) chi[k] = euler_characteristic_kL(k);
  out.L3 = chi[3] - 3 * chi[2] + 3 * chi[1] - chi[0];

  out.KE2_L = 4 * out.L3;  // L restricts trivially to D and E
  out.KE2_E = 0;           // K - E/2 is pulled back from the partial resolution

  Fan3D fan = build_cusp_fan(Level::level_p, Resolution::sm);
  int d1 = -1;
  for (size_t i = 0; i < fan.rays.size(); ++i)
    if (!fan.rays[i].is_center && fan.rays[i].orbit_class == 0 && fan.rays[i].base == FieldElement(1))
      d1 = (int)i;
  if (d1 < 0) throw std::logic_error("D_1 ray missing from fan");
  Star2D star = star_quotient(fan, d1);
  // restriction of 2L - 3/2 E - D: L is trivial here, so coefficients -1 on
  // D-rays and -3/2 on E-rays
  std::vector<Rat> coeff = coefficients_boundary(fan, Rat(-1), Rat(-3, 2));
  std::vector<Rat> values = restrict_divisor_to_star(fan, star, coeff);
  out.d1_restriction_sq = pl_self_intersection(star, values);

  out.KE2_D = 24 * out.d1_restriction_sq;
  out.KE3 = 2 * out.KE2_L - Rat(3, 2) * out.KE2_E - out.KE2_D;
  return out;
}

std::vector<Rat> kch_boundary_intersections() {
  Fan3D fan = build_cusp_fan(Level::level_p, Resolution::ch);
  int d1 = fan.ray_index(FieldElement(1));
  if (d1 < 0) throw std::logic_error("D_1 ray missing from fan");
  Star2D star = star_quotient(fan, d1);
  // K on the partial resolution is 2L - D
  std::vector<Rat> coeff = coefficients_boundary(fan, Rat(-1), Rat(0));
  std::vector<Rat> values = restrict_divisor_to_star(fan, star, coeff);
  return pl_curve_intersections(star, values);
}

}  // namespace hmf
