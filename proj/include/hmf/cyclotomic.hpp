#pragma once

// Exact arithmetic in Q(zeta_P) for a prime P, with coordinates in the power
// basis 1, zeta, ..., zeta^{P-2} modulo the cyclotomic polynomial
// 1 + x + ... + x^{P-1}.

#include <array>
#include <stdexcept>
#include <string>

#include "hmf/rational.hpp"

namespace hmf {

template <int P>
class Cyclo {
  static_assert(P >= 2);

 public:
  static constexpr int dim = P - 1;

  Cyclo() { coords_.fill(Rat(0)); }
  Cyclo(const Rat& r) : Cyclo() { coords_[0] = r; }
  Cyclo(long n) : Cyclo(Rat(n)) {}

  static Cyclo zeta_pow(long k) {
    k %= P;
    if (k < 0) k += P;
    Cyclo z;
    if (k < dim) {
      z.coords_[(size_t)k] = 1;
    } else {
      // zeta^{P-1} = -(1 + zeta + ... + zeta^{P-2})
      for (auto& c : z.coords_) c = -1;
    }
    return z;
  }

  const Rat& operator[](size_t i) const { return coords_[i]; }
  Rat& operator[](size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < dim; ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  const Rat& rational_part() const {
    if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
    return coords_[0];
  }

  bool operator==(const Cyclo& o) const { return coords_ == o.coords_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  bool operator<(const Cyclo& o) const { return coords_ < o.coords_; }

  Cyclo operator+(const Cyclo& o) const {
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) r.coords_[i] = coords_[i] + o.coords_[i];
    return r;
  }
  Cyclo operator-(const Cyclo& o) const {
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) r.coords_[i] = coords_[i] - o.coords_[i];
    return r;
  }
  Cyclo operator-() const {
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) r.coords_[i] = -coords_[i];
    return r;
  }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }

  Cyclo operator*(const Cyclo& o) const {
    // raw product has degree <= 2P - 4; fold with zeta^P = 1, then reduce
    // the zeta^{P-1} coefficient with the cyclotomic relation
    std::array<Rat, P> raw;
    raw.fill(Rat(0));
    for (size_t i = 0; i < dim; ++i) {
      if (coords_[i] == 0) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (o.coords_[j] == 0) continue;
        raw[(i + j) % P] += coords_[i] * o.coords_[j];
      }
    }
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) r.coords_[i] = raw[i] - raw[P - 1];
    return r;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo operator*(const Rat& s) const {
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) r.coords_[i] = coords_[i] * s;
    return r;
  }

  // Galois map zeta -> zeta^t, gcd(t, P) = 1
  Cyclo galois(long t) const {
    Cyclo r;
    for (size_t i = 0; i < dim; ++i) {
      if (coords_[i] == 0) continue;
      r += zeta_pow((long)(i)*t) * coords_[i];
    }
    return r;
  }

  Cyclo conj() const { return galois(P - 1); }

  Cyclo inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    // solve (this) * y = 1 by elimination on the multiplication matrix
    Rat m[dim][dim + 1];
    for (int col = 0; col < dim; ++col) {
      Cyclo img = *this * zeta_pow(col);
      for (int row = 0; row < dim; ++row) m[row][col] = img.coords_[(size_t)row];
    }
    for (int row = 0; row < dim; ++row) m[row][dim] = row == 0 ? 1 : 0;
    for (int col = 0; col < dim; ++col) {
      int piv = -1;
      for (int row = col; row < dim; ++row)
        if (m[row][col] != 0) {
          piv = row;
          break;
        }
      if (piv < 0) throw std::logic_error("singular multiplication matrix");
      for (int k = 0; k <= dim; ++k) std::swap(m[col][k], m[piv][k]);
      for (int row = 0; row < dim; ++row) {
        if (row == col || m[row][col] == 0) continue;
        Rat factor = m[row][col] / m[col][col];
        for (int k = col; k <= dim; ++k) m[row][k] -= factor * m[col][k];
      }
    }
    Cyclo y;
    for (int i = 0; i < dim; ++i) y.coords_[(size_t)i] = m[i][dim] / m[i][i];
    return y;
  }

  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < dim; ++i) {
      if (coords_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coords_[i].get_str();
      if (i > 0) s += "*z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::array<Rat, dim> coords_;
};

using Cyc7 = Cyclo<7>;

// g = sum over t of legendre(t, 7) * zeta_7^t; satisfies g^2 = -7 and equals
// i*sqrt(7) under the embedding zeta_7 -> exp(2*pi*i/7).
inline Cyc7 gauss_sum7() {
  Cyc7 g;
  const int legendre[7] = {0, 1, 1, -1, 1, -1, -1};
  for (long t = 1; t < 7; ++t) g += Cyc7::zeta_pow(t) * Rat(legendre[t]);
  return g;
}

}  // namespace hmf
