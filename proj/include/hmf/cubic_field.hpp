#pragma once

// Exact arithmetic in the totally real cubic field K = Q(w) of discriminant
// 49, where w = 2cos(2*pi/7) satisfies w^3 + w^2 - 2w - 1 = 0.  The ring of
// integers is Z[w].  Everything in this header is exact; real embeddings are
// exposed only as rational intervals.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

struct FieldElement {
  // coordinates in the basis {1, w, w^2}
  Rat a, b, c;

  FieldElement() : a(0), b(0), c(0) {}
  FieldElement(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
  FieldElement(long n) : a(n), b(0), c(0) {}

  static FieldElement w() { return {Rat(0), Rat(1), Rat(0)}; }
  static FieldElement w2() { return {Rat(0), Rat(0), Rat(1)}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool is_integral() const {
    return a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1;
  }

  FieldElement operator+(const FieldElement& o) const { return {a + o.a, b + o.b, c + o.c}; }
  FieldElement operator-(const FieldElement& o) const { return {a - o.a, b - o.b, c - o.c}; }
  FieldElement operator-() const { return {-a, -b, -c}; }

  // multiplication via w^3 = -w^2 + 2w + 1, w^4 = 3w^2 - w - 1
  FieldElement operator*(const FieldElement& o) const {
    Rat bc = b * o.c + c * o.b;
    Rat cc = c * o.c;
    return {a * o.a + bc - cc,
            a * o.b + b * o.a + 2 * bc - cc,
            a * o.c + c * o.a + b * o.b - bc + 3 * cc};
  }

  FieldElement operator*(const Rat& s) const { return {a * s, b * s, c * s}; }
  FieldElement operator/(const Rat& s) const { return {a / s, b / s, c / s}; }

  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // lexicographic on (a, b, c); the canonical enumeration order
  bool operator<(const FieldElement& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }

  std::string str() const;
};

FieldElement parse_element(const std::string& s);

Rat trace(const FieldElement& x);            // 3a - b + 5c
Rat norm(const FieldElement& x);             // closed form
Rat norm_via_matrix(const FieldElement& x);  // det of multiplication matrix (oracle)
Rat trace_of_square(const FieldElement& x);

FieldElement galois_conjugate(const FieldElement& x, int k = 1);  // w -> w^2 - 2
FieldElement inverse(const FieldElement& x);
FieldElement power(const FieldElement& x, long e);  // e may be negative

// Exact total positivity via the elementary symmetric functions of the
// embeddings: x >> 0 iff Tr(x) > 0, (Tr(x)^2 - Tr(x^2))/2 > 0, Norm(x) > 0.
bool is_totally_positive(const FieldElement& x);

// residue of an integral element in O/p = F_7 (w == 2 mod p)
int residue_mod_p(const FieldElement& x);

// value is divisible by the generator 2 - w exactly when residue is 0
FieldElement divide_by_pi(const FieldElement& x);  // x / (2 - w)

inline FieldElement pi_generator() { return {Rat(2), Rat(-1), Rat(0)}; }  // 2 - w

// --- real embeddings -------------------------------------------------------

// Rational enclosures of the three embeddings w -> 2cos(2*pi*k/7),
// k = 1, 2, 3, computed by exact bisection of w^3 + w^2 - 2w - 1.
class EmbeddingContext {
 public:
  explicit EmbeddingContext(int decimal_digits = 64);

  const std::array<Interval, 3>& w_intervals() const { return w_; }
  std::array<Interval, 3> embed(const FieldElement& x) const;

  int digits() const { return digits_; }

 private:
  int digits_;
  std::array<Interval, 3> w_;   // w under the three embeddings
  std::array<Interval, 3> w2_;  // w^2
};

// process-wide context at the default 64 digits
const EmbeddingContext& default_embeddings();

// --- enumeration ------------------------------------------------------------

// Visits every totally positive element of O with trace <= max_trace, in
// increasing trace and lexicographic (a,b,c) order within a trace slice.
// residue_filter, if in 0..6, keeps only elements == that class mod p.
void enumerate_totally_positive(long max_trace, int residue_filter,
                                const std::function<void(long a, long b, long c, long t)>& visit);

// The complete set of totally positive integers of the given trace,
// lexicographically sorted.
std::vector<FieldElement> totally_positive_of_trace(long t);

struct UnitGroupData {
  std::array<FieldElement, 2> full_generators;              // w, -w-1 (norm one)
  std::array<FieldElement, 2> totally_positive_generators;  // w^2, (w+1)^2
  std::array<FieldElement, 2> u1_generators;                // w^2(w+1)^2, (w+1)^6
  int u1_index;                                             // index of U_1 in U
};

UnitGroupData unit_group_data();

}  // namespace hmf
