#pragma once

#include "maxlin/linsystem.hpp"

#include <cstdint>
#include <utility>

namespace maxlin {

// Counter-based PRNG: a pure function of (seed, index), so generation never
// depends on iteration order.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t index);

// Exact maximum excess over all 2^n assignments (n <= 24), with the
// lexicographically smallest maximizer under +1 < -1, x1 most significant.
std::pair<Rational, Assignment> brute_force_max_excess(const LinearSystem& s);

// The tight construction: [n] split into kappa-1 blocks of size r, and for
// every nonempty subset I of a block the unit-weight equation
// prod_{i in I} x_i = -1. Has n = r*(kappa-1) variables and maximum excess
// exactly kappa-1.
LinearSystem tight_instance(int kappa, int r);

struct RandomSpec {
    std::size_t n_vars = 0;
    std::size_t n_equations = 0;
    std::size_t max_arity = 0;      // r
    std::uint64_t max_weight = 1;   // weights uniform in [1, max_weight]
    std::uint64_t seed = 0;
};

// m distinct random left-hand sides with 1..r variables, random signs,
// integer weights in [1, max_weight]. Deterministic per seed; errors when
// more equations are requested than distinct lhs exist.
LinearSystem random_instance(const RandomSpec& spec);

} // namespace maxlin
