#pragma once

#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

using RatMatrix = std::vector<std::vector<Rat>>;

// Right nullspace basis, exact.  Rows are cleared to integers and eliminated
// with fraction-free (Bareiss) pivoting, so intermediate entries stay integral.
std::vector<std::vector<Rat>> rational_kernel(const RatMatrix& m);

int rational_rank(const RatMatrix& m);

// Solve m x = rhs for the unique solution of a full-column-rank system;
// returns false when the system is inconsistent.
bool rational_solve(const RatMatrix& m, const std::vector<Rat>& rhs, std::vector<Rat>& out);

}  // namespace hmf
