#include "hmf/octic.hpp"

#include <algorithm>

#include "hmf/parallel.hpp"

namespace hmf {

namespace {

constexpr long kTailMargin = 40;

// q_j(z) = exp(2 pi i Tr(e_j z)/7) for the basis e_j dual to the exponent
// coordinates; a monomial (n1, n2, n3) evaluates to prod q_j^{n_j}.
std::array<Complex, 3> monomial_bases(const std::array<Complex, 3>& z, int digits) {
  const EmbeddingContext ctx(digits + 10);
  const FieldElement duals[3] = {element_of({1, 0, 0}), element_of({0, 1, 0}),
                                 element_of({0, 0, 1})};
  Real two_pi = Real(2) * Real::pi();
  std::array<Complex, 3> q;
  for (int j = 0; j < 3; ++j) {
    auto emb = ctx.embed(duals[j]);
    Complex tr;
    for (int i = 0; i < 3; ++i) tr += z[(size_t)i] * Complex(Real(emb[(size_t)i].mid()));
    // exp(2 pi i tr / 7)
    Complex arg = Complex(Real(0), two_pi / Real(7)) * tr;
    q[(size_t)j] = arg.exp();
  }
  return q;
}

struct PowerTable {
  std::vector<Complex> p[3];
  PowerTable(const std::array<Complex, 3>& q, long max_exp) {
    for (int j = 0; j < 3; ++j) {
      p[j].reserve((size_t)max_exp + 1);
      p[j].push_back(Complex(Real(1)));
      for (long e = 1; e <= max_exp; ++e) p[j].push_back(p[j].back() * q[(size_t)j]);
    }
  }
  Complex at(const Key3& k) const { return p[0][(size_t)k[0]] * p[1][(size_t)k[1]] * p[2][(size_t)k[2]]; }
};

Real min_imaginary_part(const std::array<Complex, 3>& z) {
  Real y = z[0].im;
  for (int i = 1; i < 3; ++i)
    if (z[(size_t)i].im < y) y = z[(size_t)i].im;
  return y;
}

// crude bound on everything beyond trace T0: count <= (t+1)^2, coefficients
// <= (t/3)^6, decay exp(-2 pi y t / 7); the ratio test keeps it honest
Real crude_tail(long t0, const Real& y) {
  Real two_pi_y = Real(2) * Real::pi() * y / Real(7);
  auto term = [&](long t) {
    Real tt(t);
    Real poly = (tt + Real(1)) * (tt + Real(1));
    Real cube = (tt / Real(3));
    Real c6 = cube * cube * cube;
    c6 = c6 * c6;
    return poly * c6 * (-(two_pi_y * tt)).exp();
  };
  Real first = term(t0 + 1);
  Real ratio = term(t0 + 2) / first;
  if (!(ratio < Real(Rat(1, 2))))
    throw std::runtime_error("tail ratio test failed; increase the trace bound");
  return first * Real(2);
}

Complex evaluate_series(const QExpansion<Rat>& s, long T, const PowerTable& pw) {
  Complex acc;
  for (const auto& [k, v] : s.terms()) {
    if (key_degree(k) > T) break;
    acc += pw.at(k) * Complex(Real(v));
  }
  return acc;
}

Real series_tail(const QExpansion<Rat>& s, long T, const PowerTable& pw, const Real& y) {
  // sharp part: the actual coefficients between T and the build bound
  Real acc(0);
  for (const auto& [k, v] : s.terms()) {
    if (key_degree(k) <= T) continue;
    Real mag = pw.at(k).abs();
    Real cmag = Real(v).abs();
    acc += cmag * mag;
  }
  return acc + crude_tail(s.bound(), y);
}

}  // namespace

std::array<Complex, 4> NumericPoint::normalized() const {
  int best = 0;
  Real mx = f[0].abs2();
  for (int i = 1; i < 4; ++i) {
    Real m = f[(size_t)i].abs2();
    if (m > mx) {
      mx = m;
      best = i;
    }
  }
  std::array<Complex, 4> out;
  for (int i = 0; i < 4; ++i) out[(size_t)i] = f[(size_t)i] / f[(size_t)best];
  return out;
}

NumericPoint evaluate_forms(const std::array<Complex, 3>& z, long trace_bound,
                            const Rat& max_radius, const EisensteinBasis* basis) {
  Real y = min_imaginary_part(z);
  if (!(y > Real(0))) throw std::invalid_argument("point must lie in the upper half space");

  EisensteinBasis local;
  if (basis == nullptr) {
    local = build_eisenstein_basis(trace_bound + kTailMargin);
    basis = &local;
  }
  if (basis->bound < trace_bound + kTailMargin)
    throw std::invalid_argument("basis bound too small for the tail estimate");

  auto q = monomial_bases(z, Real::default_digits());
  PowerTable pw(q, basis->bound);

  NumericPoint out;
  out.trace_bound = trace_bound;
  Real radius(0);
  for (int i = 0; i < 4; ++i) {
    out.f[(size_t)i] = evaluate_series(basis->F[(size_t)i], trace_bound, pw);
    Real r = series_tail(basis->F[(size_t)i], trace_bound, pw, y);
    if (r > radius) radius = r;
  }
  // rounding slack, far below the truncation radius at working precision
  Int slack_den = 1;
  for (int i = 0; i < Real::default_digits() - 5; ++i) slack_den *= 10;
  radius += Real(Rat(Int(1), slack_den));
  out.radius = radius;
  if (Real(max_radius) < radius) throw std::runtime_error("tail bound exceeds the requested radius");
  return out;
}

Complex evaluate_E2(const std::array<Complex, 3>& z, long trace_bound,
                    const EisensteinBasis* basis) {
  EisensteinBasis local;
  if (basis == nullptr) {
    local = build_eisenstein_basis(trace_bound + kTailMargin);
    basis = &local;
  }
  auto q = monomial_bases(z, Real::default_digits());
  PowerTable pw(q, basis->bound);
  return evaluate_series(basis->E2, trace_bound, pw);
}

Complex evaluate_poly(const PolyQ& p, const std::array<Complex, 5>& at) {
  // power cache per variable
  std::array<std::vector<Complex>, 5> pows;
  for (int v = 0; v < 5; ++v) pows[(size_t)v].push_back(Complex(Real(1)));
  auto power = [&](int v, int e) {
    auto& tab = pows[(size_t)v];
    while ((int)tab.size() <= e) tab.push_back(tab.back() * at[(size_t)v]);
    return tab[(size_t)e];
  };
  Complex acc;
  for (const auto& [m, c] : p.terms()) {
    Complex term{Real(c)};
    for (int v = 0; v < 5; ++v)
      if (m[(size_t)v] > 0) term = term * power(v, m[(size_t)v]);
    acc += term;
  }
  return acc;
}

PolyQ poly_partial(const PolyQ& p, int var) {
  PolyQ out;
  for (const auto& [m, c] : p.terms()) {
    if (m[(size_t)var] == 0) continue;
    Mon5 mm = m;
    mm[(size_t)var] -= 1;
    out.add_term(mm, c * m[(size_t)var]);
  }
  return out;
}

namespace {

// eigenvalues of a 3x3 Hermitian PSD matrix via the trigonometric solution
// of the characteristic cubic; returns descending
std::array<Real, 3> hermitian_eigenvalues(const std::array<std::array<Complex, 3>, 3>& m) {
  Real e1 = m[0][0].re + m[1][1].re + m[2][2].re;
  // sum of principal 2x2 minors
  auto minor = [&](int i, int j) {
    return m[(size_t)i][(size_t)i] * m[(size_t)j][(size_t)j] -
           m[(size_t)i][(size_t)j] * m[(size_t)j][(size_t)i];
  };
  Real e2 = (minor(0, 1) + minor(0, 2) + minor(1, 2)).re;
  Complex det = m[0][0] * minor(1, 2) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Real e3 = det.re;

  // lambda^3 - e1 lambda^2 + e2 lambda - e3; depress with lambda = t + e1/3
  Real a = -e1, b = e2, c = -e3;
  Real third(Rat(1, 3));
  Real p = b - a * a * third;
  Real q = a * a * a * Real(Rat(2, 27)) - a * b * third + c;
  std::array<Real, 3> lam;
  if (!(p < Real(0))) {
    // numerically (near-)triple root
    for (auto& l : lam) l = -a * third;
    return lam;
  }
  Real mp3 = (-p * third).sqrt();
  Real arg = q * Real(Rat(3, 2)) / (p * mp3);  // 3q/(2p) * sqrt(-3/p)
  if (arg > Real(1)) arg = Real(1);
  if (arg < Real(-1)) arg = Real(-1);
  Real theta;
  mpfr_acos(theta.raw(), arg.raw(), MPFR_RNDN);
  for (int k = 0; k < 3; ++k) {
    Real angle = (theta + Real(2 * k) * Real::pi()) / Real(3);
    lam[(size_t)k] = Real(2) * mp3 * angle.cos() - a * third;
  }
  std::sort(lam.begin(), lam.end(), [](const Real& x, const Real& y) { return y < x; });
  return lam;
}

}  // namespace

SingularCheck singular_point_check(const std::array<Complex, 4>& f, const PolyQ& octic,
                                   const Rat& tol, double guard_band, const Rat& cubic_min) {
  SingularCheck out;
  Real mx = f[0].abs2();
  for (int i = 1; i < 4; ++i)
    if (f[(size_t)i].abs2() > mx) {
      mx = f[(size_t)i].abs2();
      out.chart = i;
    }
  std::array<Complex, 5> at = {f[0], f[1], f[2], f[3], Complex(Real(0))};

  std::array<int, 3> dirs;
  int d = 0;
  for (int v = 0; v < 4; ++v)
    if (v != out.chart) dirs[(size_t)d++] = v;

  out.q_abs = evaluate_poly(octic, at).abs();
  out.grad_max = Real(0);
  std::array<PolyQ, 3> partials;
  for (int i = 0; i < 3; ++i) {
    partials[(size_t)i] = poly_partial(octic, dirs[(size_t)i]);
    Real g = evaluate_poly(partials[(size_t)i], at).abs();
    if (g > out.grad_max) out.grad_max = g;
  }
  Real rtol = Real(tol);
  out.vanishing_ok = out.q_abs < rtol && out.grad_max < rtol;

  // Hessian in the chart directions
  std::array<std::array<Complex, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h[(size_t)i][(size_t)j] = evaluate_poly(poly_partial(partials[(size_t)i], dirs[(size_t)j]), at);

  // singular values via H^* H
  std::array<std::array<Complex, 3>, 3> hh;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex acc;
      for (int k = 0; k < 3; ++k) acc += h[(size_t)k][(size_t)i].conj() * h[(size_t)k][(size_t)j];
      hh[(size_t)i][(size_t)j] = acc;
    }
  auto lam = hermitian_eigenvalues(hh);
  for (int i = 0; i < 3; ++i) {
    Real l = lam[(size_t)i];
    out.sv[i] = (l > Real(0) ? l : Real(0)).sqrt();
  }
  out.rank_ok = out.sv[2] < rtol && out.sv[1] > rtol * Real(guard_band);

  // kernel direction: cross product of the two rows with the largest norms
  std::array<Real, 3> rownorm;
  for (int i = 0; i < 3; ++i)
    rownorm[(size_t)i] = h[(size_t)i][0].abs2() + h[(size_t)i][1].abs2() + h[(size_t)i][2].abs2();
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (rownorm[(size_t)i] < rownorm[(size_t)drop]) drop = i;
  int r1 = (drop + 1) % 3, r2 = (drop + 2) % 3;
  std::array<Complex, 3> v = {
      h[(size_t)r1][1] * h[(size_t)r2][2] - h[(size_t)r1][2] * h[(size_t)r2][1],
      h[(size_t)r1][2] * h[(size_t)r2][0] - h[(size_t)r1][0] * h[(size_t)r2][2],
      h[(size_t)r1][0] * h[(size_t)r2][1] - h[(size_t)r1][1] * h[(size_t)r2][0]};
  Real vnorm = (v[0].abs2() + v[1].abs2() + v[2].abs2()).sqrt();
  if (vnorm.is_zero()) return out;
  for (auto& x : v) x = x / Complex(vnorm);

  // third derivative along the kernel
  Complex cubic;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PolyQ dij = poly_partial(partials[(size_t)i], dirs[(size_t)j]);
      for (int k = 0; k < 3; ++k) {
        Complex c = evaluate_poly(poly_partial(dij, dirs[(size_t)k]), at);
        cubic += c * v[(size_t)i] * v[(size_t)j] * v[(size_t)k];
      }
    }
  out.kernel_cubic = cubic.abs();
  out.cubic_ok = out.kernel_cubic > Real(cubic_min);
  return out;
}

namespace {

Complex cyc_to_complex(const Cyc7& c, const std::array<Complex, 7>& zeta_pows) {
  Complex acc;
  for (size_t k = 0; k < 6; ++k) {
    if (c[k] == 0) continue;
    acc += zeta_pows[k] * Complex(Real(c[k]));
  }
  return acc;
}

// sine of the angle between the complex lines spanned by x and y
Real projective_distance(const std::array<Complex, 4>& x, const std::array<Complex, 4>& y) {
  Complex inner;
  Real nx(0), ny(0);
  for (int i = 0; i < 4; ++i) {
    inner += x[(size_t)i] * y[(size_t)i].conj();
    nx += x[(size_t)i].abs2();
    ny += y[(size_t)i].abs2();
  }
  Real cos2 = inner.abs2() / (nx * ny);
  Real sin2 = Real(1) - cos2;
  if (sin2 < Real(0)) sin2 = Real(0);
  return sin2.sqrt();
}

}  // namespace

OrbitClustering orbit_count(const NumericPoint& p, double cluster_tol, int jobs) {
  const auto& group = generate_group();

  std::array<Complex, 7> zeta_pows;
  Real two_pi = Real(2) * Real::pi();
  for (long k = 0; k < 7; ++k) {
    Real arg = two_pi * Real(k) / Real(7);
    zeta_pows[(size_t)k] = Complex(arg.cos(), arg.sin());
  }

  // value vectors transform by the transpose: F(gz) is proportional to
  // gamma(g)^T F(z), matching the column convention of the action on forms
  std::vector<std::array<Complex, 4>> images(group.elements.size());
  parallel_for(group.elements.size(), jobs, [&](size_t e) {
    const auto& g = group.elements[e];
    for (int i = 0; i < 4; ++i) {
      Complex acc;
      for (int j = 0; j < 4; ++j)
        acc += cyc_to_complex(g.m[(size_t)j][(size_t)i], zeta_pows) * p.f[(size_t)j];
      images[e][(size_t)i] = acc;
    }
  });

  OrbitClustering out;
  Real tol(cluster_tol);
  out.max_intra = Real(0);
  int stab = 0;
  for (const auto& img : images) {
    if (projective_distance(img, p.f) < tol) ++stab;
    bool placed = false;
    for (const auto& rep : out.representatives) {
      Real dist = projective_distance(img, rep);
      if (dist < tol) {
        if (dist > out.max_intra) out.max_intra = dist;
        placed = true;
        break;
      }
    }
    if (!placed) out.representatives.push_back(img);
  }
  out.cluster_count = (int)out.representatives.size();
  out.projective_stabilizer = stab / 2;  // matrices map two-to-one onto the projective group

  bool first = true;
  for (size_t i = 0; i < out.representatives.size(); ++i)
    for (size_t j = i + 1; j < out.representatives.size(); ++j) {
      Real dist = projective_distance(out.representatives[i], out.representatives[j]);
      if (first || dist < out.min_inter) out.min_inter = dist;
      first = false;
    }
  if (!first && out.min_inter < tol * Real(10))
    throw std::runtime_error("ambiguous clustering: clusters closer than ten times the tolerance");
  return out;
}

SmoothSample sample_smooth_point(const PolyQ& octic, double) {
  SmoothSample out;
  // fixed line a + t b and Newton iteration on Q(a + t b)
  std::array<Complex, 5> a = {Complex(Real(Rat(3, 7))), Complex(Real(Rat(-2, 5))),
                              Complex(Real(Rat(1, 3))), Complex(Real(Rat(4, 9))),
                              Complex(Real(0))};
  std::array<Complex, 5> b = {Complex(Real(Rat(1, 2)), Real(Rat(1, 5))), Complex(Real(Rat(2, 3))),
                              Complex(Real(Rat(-1, 4)), Real(Rat(1, 7))), Complex(Real(1)),
                              Complex(Real(0))};
  std::array<PolyQ, 4> partials;
  for (int v = 0; v < 4; ++v) partials[(size_t)v] = poly_partial(octic, v);

  Complex t(Real(Rat(3, 10)), Real(Rat(7, 10)));
  Real step_floor(Rat(Int(1), rat_pow(Rat(10), 40).get_num()));
  for (int iter = 0; iter < 300; ++iter) {
    std::array<Complex, 5> at;
    for (int v = 0; v < 5; ++v) at[(size_t)v] = a[(size_t)v] + t * b[(size_t)v];
    Complex q = evaluate_poly(octic, at);
    Complex dq;
    for (int v = 0; v < 4; ++v) dq += evaluate_poly(partials[(size_t)v], at) * b[(size_t)v];
    if (dq.abs2().is_zero()) break;
    Complex step = q / dq;
    t = t - step;
    if (step.abs() < step_floor) break;
  }
  std::array<Complex, 5> at;
  for (int v = 0; v < 5; ++v) at[(size_t)v] = a[(size_t)v] + t * b[(size_t)v];
  out.residual = evaluate_poly(octic, at).abs();
  out.root_found = out.residual < Real(Rat(Int(1), rat_pow(Rat(10), 30).get_num()));
  out.grad_max = Real(0);
  for (int v = 0; v < 4; ++v) {
    Real g = evaluate_poly(partials[(size_t)v], at).abs();
    if (g > out.grad_max) out.grad_max = g;
  }
  return out;
}

}  // namespace hmf
