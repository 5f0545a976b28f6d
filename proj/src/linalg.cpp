#include "hmf/linalg.hpp"

#include <stdexcept>

namespace hmf {

namespace {

std::vector<std::vector<Int>> clear_denominators(const RatMatrix& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Int lcm = 1;
    for (const auto& x : row) {
      Int d = x.get_den();
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.get_num() * (lcm / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

// Bareiss elimination; returns pivot columns and leaves m in echelon form.
std::vector<int> bareiss(std::vector<std::vector<Int>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> rational_kernel(const RatMatrix& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  auto mi = clear_denominators(m);
  std::vector<int> pivots = bareiss(mi);

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[(size_t)c] = true;

  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    // back-substitute through the echelon rows
    for (size_t pi = pivots.size(); pi-- > 0;) {
      size_t row = pi;
      size_t pc = (size_t)pivots[pi];
      Rat acc(0);
      for (size_t j = pc + 1; j < cols; ++j)
        if (v[j] != 0) acc += Rat(mi[row][j]) * v[j];
      v[pc] = -acc / Rat(mi[row][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rational_rank(const RatMatrix& m) {
  auto mi = clear_denominators(m);
  return (int)bareiss(mi).size();
}

bool rational_solve(const RatMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& out) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  RatMatrix aug = m;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);
  auto kernel = rational_kernel(aug);
  // solutions of m x = rhs <-> kernel vectors with last coordinate -1 (scaled)
  for (const auto& v : kernel) {
    if (v[cols] != 0) {
      out.assign(cols, Rat(0));
      for (size_t j = 0; j < cols; ++j) out[j] = -v[j] / v[cols];
      return true;
    }
  }
  return false;
}

}  // namespace hmf
