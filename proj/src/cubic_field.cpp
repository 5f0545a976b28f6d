#include "hmf/cubic_field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace hmf {

Rat trace(const FieldElement& x) { return 3 * x.a - x.b + 5 * x.c; }

Rat norm(const FieldElement& x) {
  const Rat &a = x.a, &b = x.b, &c = x.c;
  return a * a * a - a * a * b + 5 * a * a * c - 2 * a * b * b - a * b * c + 6 * a * c * c +
         b * b * b - b * b * c - 2 * b * c * c + c * c * c;
}

Rat norm_via_matrix(const FieldElement& x) {
  // columns of the multiplication-by-x matrix in basis {1, w, w^2}
  const Rat &a = x.a, &b = x.b, &c = x.c;
  Rat m[3][3] = {{a, c, b - c}, {b, a + 2 * c, 2 * b - c}, {c, b - c, a - b + 3 * c}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rat trace_of_square(const FieldElement& x) {
  const Rat &a = x.a, &b = x.b, &c = x.c;
  return 3 * a * a + 5 * b * b + 13 * c * c - 2 * a * b + 10 * a * c - 8 * b * c;
}

FieldElement galois_conjugate(const FieldElement& x, int k) {
  FieldElement y = x;
  k = ((k % 3) + 3) % 3;
  for (int i = 0; i < k; ++i) y = FieldElement{y.a - 2 * y.b + 3 * y.c, -y.c, y.b - y.c};
  return y;
}

FieldElement inverse(const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("inverse of zero");
  FieldElement adj = galois_conjugate(x, 1) * galois_conjugate(x, 2);
  return adj / norm(x);
}

FieldElement power(const FieldElement& x, long e) {
  FieldElement base = e < 0 ? inverse(x) : x;
  unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
  FieldElement acc(1);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool is_totally_positive(const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("total positivity of zero is undefined");
  Rat e1 = trace(x);
  if (!(e1 > 0)) return false;
  Rat e2 = (e1 * e1 - trace_of_square(x)) / 2;
  if (!(e2 > 0)) return false;
  return norm(x) > 0;
}

int residue_mod_p(const FieldElement& x) {
  if (!x.is_integral()) throw std::invalid_argument("residue mod p needs an integral element");
  Int v = x.a.get_num() + 2 * x.b.get_num() + 4 * x.c.get_num();
  Int r = v % 7;
  if (r < 0) r += 7;
  return (int)r.get_si();
}

FieldElement divide_by_pi(const FieldElement& x) {
  // (2 - w)^{-1} = (4 + 3w + w^2)/7
  static const FieldElement inv_pi{Rat(4, 7), Rat(3, 7), Rat(1, 7)};
  return x * inv_pi;
}

// --- printing / parsing -----------------------------------------------------

std::string FieldElement::str() const {
  auto term = [](const Rat& coef, const char* var, bool lead) -> std::string {
    if (coef == 0) return "";
    std::string s;
    Rat ab = abs(coef);
    if (coef < 0)
      s += lead ? "-" : " - ";
    else if (!lead)
      s += " + ";
    if (ab != 1 || var[0] == '\0') {
      s += ab.get_str();
      if (var[0]) s += "*";
    }
    s += var;
    return s;
  };
  std::string s;
  s += term(a, "", true);
  s += term(b, "w", s.empty());
  s += term(c, "w^2", s.empty());
  return s.empty() ? "0" : s;
}

FieldElement parse_element(const std::string& input) {
  // accepts forms like "2-w", "-5*w^2 - 3*w + 12", "1/2 + 3/7*w"
  std::string s;
  for (char ch : input)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.empty()) throw std::invalid_argument("empty element");

  FieldElement out{Rat(0), Rat(0), Rat(0)};
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("dangling sign in: " + input);
    std::string digits;
    while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) digits += s[i++];
    Rat coef = digits.empty() ? Rat(1) : rat_parse(digits);
    if (sign < 0) coef = -coef;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'w') {
      ++i;
      if (i + 1 < s.size() && s[i] == '^' && s[i + 1] == '2') {
        out.c += coef;
        i += 2;
      } else {
        out.b += coef;
      }
    } else {
      if (digits.empty()) throw std::invalid_argument("bad term in: " + input);
      out.a += coef;
    }
  }
  return out;
}

// --- embeddings -------------------------------------------------------------

namespace {

Rat cubic_value(const Rat& x) { return ((x + 1) * x - 2) * x - 1; }

// Exact bisection of w^3 + w^2 - 2w - 1 on an isolating bracket.
Interval isolate_root(Rat lo, Rat hi, int decimal_digits) {
  bool lo_neg = cubic_value(lo) < 0;
  if (lo_neg == (cubic_value(hi) < 0)) throw std::logic_error("bracket does not isolate a root");
  Rat target(1);
  for (int i = 0; i < decimal_digits; ++i) target /= 10;
  while (hi - lo > target) {
    Rat mid = (lo + hi) / 2;
    Rat v = cubic_value(mid);
    if (v == 0) return {mid, mid};
    if ((v < 0) == lo_neg)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace

EmbeddingContext::EmbeddingContext(int decimal_digits) : digits_(decimal_digits) {
  // roots in the embedding order w -> 2cos(2*pi/7), 2cos(4*pi/7), 2cos(6*pi/7)
  w_[0] = isolate_root(Rat(1), Rat(2), decimal_digits);
  w_[1] = isolate_root(Rat(-1), Rat(0), decimal_digits);
  w_[2] = isolate_root(Rat(-2), Rat(-1), decimal_digits);
  for (int i = 0; i < 3; ++i) w2_[i] = w_[i] * w_[i];
}

std::array<Interval, 3> EmbeddingContext::embed(const FieldElement& x) const {
  std::array<Interval, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = Interval(x.a) + w_[i] * x.b + w2_[i] * x.c;
  return out;
}

const EmbeddingContext& default_embeddings() {
  static const EmbeddingContext ctx(64);
  return ctx;
}

// --- enumeration ------------------------------------------------------------

namespace {

struct EnumBounds {
  // double enclosures of the embeddings, padded; safe because candidates are
  // confirmed with the exact test before being reported
  double w[3], w2[3];
  EnumBounds() {
    const auto& ctx = default_embeddings();
    for (int i = 0; i < 3; ++i) {
      w[i] = ctx.w_intervals()[i].mid().get_d();
      w2[i] = w[i] * w[i];
    }
  }
};

bool totally_positive_i64(long a, long b, long c) {
  long e1 = 3 * a - b + 5 * c;
  if (e1 <= 0) return false;
  long tr2 = 3 * a * a + 5 * b * b + 13 * c * c - 2 * a * b + 10 * a * c - 8 * b * c;
  if (e1 * e1 - tr2 <= 0) return false;
  long n = a * a * a - a * a * b + 5 * a * a * c - 2 * a * b * b - a * b * c + 6 * a * c * c +
           b * b * b - b * b * c - 2 * b * c * c + c * c * c;
  return n > 0;
}

}  // namespace

void enumerate_totally_positive(long max_trace, int residue_filter,
                                const std::function<void(long, long, long, long)>& visit) {
  if (max_trace < 1) return;
  static const EnumBounds E;
  const double T = (double)max_trace;

  // 0 < x_i < T under every embedding pins b and c inside a box of side O(T);
  // dual functionals b = Tr(x*(-1+2w+w^2))/7, c = Tr(x*(-3+w+2w^2))/7.
  auto coeff_range = [&](double k0, double k1, double k2) {
    double lo = 0, hi = 0;
    double coef[3];
    for (int i = 0; i < 3; ++i) coef[i] = (k0 + k1 * E.w[i] + k2 * E.w2[i]) / 7.0;
    for (int i = 0; i < 3; ++i) {
      if (coef[i] < 0) lo += coef[i] * T;
      else hi += coef[i] * T;
    }
    return std::pair<long, long>{(long)std::floor(lo) - 1, (long)std::ceil(hi) + 1};
  };
  auto [b_lo, b_hi] = coeff_range(-1, 2, 1);
  auto [c_lo, c_hi] = coeff_range(-3, 1, 2);

  // collect per trace slice so the visit order is (trace, lex)
  std::vector<std::vector<std::array<long, 3>>> slices((size_t)max_trace + 1);
  for (long b = b_lo; b <= b_hi; ++b) {
    for (long c = c_lo; c <= c_hi; ++c) {
      // positivity of each embedding bounds a from below, trace from above
      double a_min = -(b * E.w[0] + c * E.w2[0]);
      for (int i = 1; i < 3; ++i) a_min = std::max(a_min, -(b * E.w[i] + c * E.w2[i]));
      long a_start = (long)std::floor(a_min) - 1;
      long num = max_trace + b - 5 * c;
      long a_end = num >= 0 ? num / 3 : -((-num + 2) / 3);
      for (long a = a_start; a <= a_end; ++a) {
        long t = 3 * a - b + 5 * c;
        if (t < 1 || t > max_trace) continue;
        if (residue_filter >= 0) {
          long r = (a + 2 * b + 4 * c) % 7;
          if (r < 0) r += 7;
          if (r != residue_filter) continue;
        }
        if (totally_positive_i64(a, b, c)) slices[(size_t)t].push_back({a, b, c});
      }
    }
  }
  for (long t = 1; t <= max_trace; ++t) {
    auto& slice = slices[(size_t)t];
    std::sort(slice.begin(), slice.end());
    for (const auto& e : slice) visit(e[0], e[1], e[2], t);
  }
}

std::vector<FieldElement> totally_positive_of_trace(long t) {
  std::vector<FieldElement> out;
  if (t < 1) return out;
  enumerate_totally_positive(t, -1, [&](long a, long b, long c, long tr) {
    if (tr == t) out.emplace_back(Rat(a), Rat(b), Rat(c));
  });
  return out;
}

UnitGroupData unit_group_data() {
  const FieldElement w = FieldElement::w();
  const FieldElement w1sq = (w + FieldElement(1)) * (w + FieldElement(1));  // w^2 + 2w + 1
  UnitGroupData d;
  d.full_generators = {w, -(w + FieldElement(1))};
  d.totally_positive_generators = {FieldElement::w2(), w1sq};
  d.u1_generators = {FieldElement::w2() * w1sq, power(w + FieldElement(1), 6)};
  for (const auto& u : d.u1_generators)
    if (residue_mod_p(u) != 1) throw std::logic_error("U_1 generator is not 1 mod p");
  // index = size of the image of U in F_7^* under reduction
  std::array<int, 7> seen{};
  int count = 0;
  int r0 = residue_mod_p(d.totally_positive_generators[0]);
  int r1 = residue_mod_p(d.totally_positive_generators[1]);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      long r = 1;
      for (int k = 0; k < i; ++k) r = r * r0 % 7;
      for (int k = 0; k < j; ++k) r = r * r1 % 7;
      if (!seen[(size_t)r]) {
        seen[(size_t)r] = 1;
        ++count;
      }
    }
  d.u1_index = count;
  return d;
}

}  // namespace hmf
