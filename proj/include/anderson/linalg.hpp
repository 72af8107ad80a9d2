#pragma once

#include <optional>
#include <vector>

#include "anderson/ring.hpp"

namespace anderson {

/// Solves A * x = b over Z_n exactly. A is row-major with entries reduced
/// mod n. Returns one solution, or nullopt when none exists.
///
/// The matrix is diagonalized by Smith-style unimodular row and column
/// operations carried out mod n (every 2x2 gcd rotation has integer
/// determinant 1, so it stays invertible mod n). Each diagonal congruence
/// d*y = c (mod n) is then solvable iff gcd(d, n) divides c, which makes
/// the procedure a complete decision procedure, not a heuristic.
std::optional<std::vector<long long>> solve_mod(
    long long n, std::vector<std::vector<long long>> a,
    std::vector<long long> b);

/// Solves A * x = b over a product ring componentwise via solve_mod and
/// recombines coordinates. Complete: returns nullopt only when some
/// component system has no solution.
std::optional<std::vector<RingElem>> solve_linear(
    const RingSpec& ring, const std::vector<std::vector<RingElem>>& a,
    const std::vector<RingElem>& b);

}  // namespace anderson
