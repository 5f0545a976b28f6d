#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmf {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

// Closed rational interval [lo, hi].  Endpoints are exact, so interval
// arithmetic here never rounds; widths only grow through genuine
// uncertainty in the inputs.
struct Interval {
  Rat lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(const Rat& point) : lo(point), hi(point) {}
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  Rat mid() const { return (lo + hi) / 2; }
  Rat radius() const { return (hi - lo) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool is_positive() const { return lo > 0; }
  bool is_negative() const { return hi < 0; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator-() const { return {-hi, -lo}; }

  Interval operator*(const Interval& o) const {
    Rat c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    Rat mn = c[0], mx = c[0];
    for (int i = 1; i < 4; ++i) {
      if (c[i] < mn) mn = c[i];
      if (c[i] > mx) mx = c[i];
    }
    return {mn, mx};
  }

  Interval operator*(const Rat& s) const {
    return s >= 0 ? Interval{lo * s, hi * s} : Interval{hi * s, lo * s};
  }

  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
};

}  // namespace hmf
