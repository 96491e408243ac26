#pragma once

#include <vector>

#include "diffalg/rational.hpp"

namespace diffalg::detail {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Basis of the right null space of M (rows x ncols), exact arithmetic.
/// Deterministic: first-nonzero pivoting, free variables in column order.
std::vector<std::vector<Rational>> nullspace(RatMatrix M, size_t ncols);

/// Solves M x = rhs if consistent (least structural solution: free vars 0).
bool solve(RatMatrix M, std::vector<Rational> rhs, std::vector<Rational>& x);

} // namespace diffalg::detail
