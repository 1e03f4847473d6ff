#pragma once

#include "maxlin/gf2.hpp"

#include <cstddef>
#include <vector>

namespace maxlin {

// A family of distinct nonzero vectors in F2^dimension, each with at most
// max_arity set bits.
struct VectorFamily {
    std::size_t dimension = 0;
    std::vector<BitVector> vectors;
    std::size_t max_arity = 0;
};

// Finds k vectors of M forming an M-sum-free set: linearly independent, and
// no XOR of two or more of them equals any member of M. Requires M to span
// F2^n and n >= max_arity*(k-1) + 1; violations raise PreconditionError
// naming the failed condition.
std::vector<BitVector> find_msum_free(const VectorFamily& m, int k);

// Exhaustive check of both M-sum-free conditions (oracle use; enumerates all
// 2^|K| subsets, so |K| must be small). Throws if K is not a subset of M.
bool verify_msum_free(const VectorFamily& m, const std::vector<BitVector>& k_set);

} // namespace maxlin
