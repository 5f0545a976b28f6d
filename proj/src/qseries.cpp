#include "hmf/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace hmf {

QExpansion<Cyc7> to_cyclotomic(const QExpansion<Rat>& f) {
  QExpansion<Cyc7> r(f.bound());
  for (const auto& [k, v] : f.terms()) r.set(k, Cyc7(v));
  return r;
}

QExpansion<Cyc7> g7_translate(const QExpansion<Rat>& f) { return g7_translate(to_cyclotomic(f)); }

QExpansion<Cyc7> g7_translate(const QExpansion<Cyc7>& f) {
  QExpansion<Cyc7> r(f.bound());
  for (const auto& [k, v] : f.terms()) r.set(k, v * Cyc7::zeta_pow(key_degree(k)));
  return r;
}

BoundaryOrder boundary_order(const QExpansion<Rat>& f, const FieldElement& r) {
  BoundaryOrder out;
  FieldElement mu = pi_generator() * r;
  if (!is_totally_positive(mu)) throw std::invalid_argument("ray multiplier must be totally positive");

  // rational lower bound for min_i mu_i from the interval embeddings
  Rat mu_min;
  bool first = true;
  for (const auto& iv : default_embeddings().embed(mu)) {
    if (first || iv.lo < mu_min) mu_min = iv.lo;
    first = false;
  }
  if (!(mu_min > 0)) throw std::logic_error("embedding interval failed to certify positivity");
  out.certified_below = Rat(f.bound()) * mu_min / 7;

  if (f.is_zero()) {
    out.infinite = true;
    return out;
  }
  bool have = false;
  for (const auto& [k, v] : f.terms()) {
    Rat pairing = trace(element_of(k) * mu) / 7;
    if (!have || pairing < out.order) {
      out.order = pairing;
      have = true;
    }
  }
  return out;
}

QExpansion<Rat> jacobian_det(const QExpansion<Rat>& t1, const QExpansion<Rat>& t2,
                             const QExpansion<Rat>& t3) {
  const QExpansion<Rat>* ts[3] = {&t1, &t2, &t3};
  QExpansion<Rat> d[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = ts[j]->derivative(i);
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
         d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

std::string to_interchange(const QExpansion<Rat>& f) {
  std::ostringstream os;
  os << "T=" << f.bound() << "\n";
  for (const auto& [k, v] : f.terms())
    os << v.get_str() << " " << k[0] << " " << k[1] << " " << k[2] << "\n";
  return os.str();
}

QExpansion<Rat> from_interchange(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header) || header.rfind("T=", 0) != 0)
    throw std::invalid_argument("missing T= header");
  QExpansion<Rat> f(std::stol(header.substr(2)));
  std::string coef;
  long n1, n2, n3;
  while (is >> coef >> n1 >> n2 >> n3) f.set({n1, n2, n3}, rat_parse(coef));
  return f;
}

std::string to_symmetrized(const QExpansion<Rat>& f) {
  // group the support into cyclic orbits (n1,n2,n3) -> (n3,n1,n2)
  std::map<Key3, Rat, GradedLex> reps;
  for (const auto& [k, v] : f.terms()) {
    if (k == Key3{0, 0, 0}) continue;
    Key3 orbit[3] = {k, {k[2], k[0], k[1]}, {k[1], k[2], k[0]}};
    Key3 rep = *std::min_element(orbit, orbit + 3, GradedLex());
    auto it = reps.find(rep);
    if (it == reps.end())
      reps.emplace(rep, v);
    else if (it->second != v)
      throw std::logic_error("series is not cyclically symmetric");
  }
  std::ostringstream os;
  Rat c0 = f.coefficient({0, 0, 0});
  bool any = false;
  if (c0 != 0) {
    os << c0.get_str();
    any = true;
  }
  for (const auto& [k, v] : reps) {
    if (any) os << " + ";
    if (v != 1) os << v.get_str() << "*";
    os << "q(" << k[0] << "," << k[1] << "," << k[2] << ")";
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace hmf
