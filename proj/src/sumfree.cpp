#include "maxlin/sumfree.hpp"

#include "maxlin/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace maxlin {

namespace {

void validate_family(const VectorFamily& m) {
    std::set<BitVector> seen;
    for (const auto& v : m.vectors) {
        if (v.size() != m.dimension) throw std::invalid_argument("family dimension mismatch");
        if (v.none()) throw PreconditionError("family contains the zero vector");
        if (v.popcount() > m.max_arity)
            throw PreconditionError("family vector exceeds the arity bound r");
        if (!seen.insert(v).second) throw PreconditionError("family vectors are not distinct");
    }
}

bool is_independent(const std::vector<BitVector>& vectors, std::size_t dim) {
    return rank(vectors, dim) == vectors.size();
}

} // namespace

std::vector<BitVector> find_msum_free(const VectorFamily& m, int k) {
    validate_family(m);
    if (k < 1) throw PreconditionError("k must be at least 1");
    const std::size_t n = m.dimension;
    const std::size_t r = m.max_arity;
    if (rank(m.vectors, n) != n)
        throw PreconditionError("family does not span F2^n");
    if (n < r * (static_cast<std::size_t>(k) - 1) + 1)
        throw PreconditionError("n < (k-1)r+1");

    if (k == 1) return {m.vectors.front()};

    BitVector ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i);
    // k >= 2 forces r < n, so no family vector can be all-ones.
    MAXLIN_CHECK(std::find(m.vectors.begin(), m.vectors.end(), ones) == m.vectors.end(),
                 "all-ones vector unexpectedly in the family");

    // Greedy basis in input order.
    std::vector<BitVector> basis;
    for (const auto& v : m.vectors) {
        basis.push_back(v);
        if (!is_independent(basis, n)) basis.pop_back();
        if (basis.size() == n) break;
    }
    MAXLIN_CHECK(basis.size() == n, "spanning family yielded no basis");

    auto subset = express_in_basis(ones, basis);
    MAXLIN_CHECK(subset.has_value(), "all-ones vector not expressible in a basis");
    std::vector<BitVector> expr;
    for (int pos : *subset) expr.push_back(basis[static_cast<std::size_t>(pos) - 1]);

    for (std::size_t iter = 0;; ++iter) {
        MAXLIN_CHECK(iter <= n, "sum-free shortening loop failed to terminate");
        {
            BitVector acc(n);
            for (const auto& v : expr) acc ^= v;
            MAXLIN_CHECK(acc == ones && is_independent(expr, n),
                         "expression invariant for the all-ones vector broken");
        }
        const std::set<BitVector> in_expr(expr.begin(), expr.end());
        bool shortened = false;
        for (const auto& v : m.vectors) {
            if (in_expr.count(v)) continue;
            auto combo = express_in_basis(v, expr);
            if (!combo) continue;
            // v = sum over `combo`; swapping it in shortens the expression.
            MAXLIN_CHECK(combo->size() >= 2, "dependent vector duplicated a family member");
            std::vector<BitVector> next{v};
            std::set<int> used(combo->begin(), combo->end());
            for (std::size_t i = 0; i < expr.size(); ++i)
                if (!used.count(static_cast<int>(i) + 1)) next.push_back(expr[i]);
            expr = std::move(next);
            shortened = true;
            break;
        }
        if (!shortened) break;
    }

    // Every vector outside the expression is independent of it, so the
    // expression is M-sum-free; its size s satisfies s*r >= n > r(k-1).
    MAXLIN_CHECK(expr.size() * r >= n, "sum-free expression too short for the size argument");
    MAXLIN_CHECK(expr.size() >= static_cast<std::size_t>(k), "sum-free expression smaller than k");
    expr.resize(static_cast<std::size_t>(k));
    return expr;
}

bool verify_msum_free(const VectorFamily& m, const std::vector<BitVector>& k_set) {
    validate_family(m);
    const std::set<BitVector> family(m.vectors.begin(), m.vectors.end());
    for (const auto& v : k_set)
        if (!family.count(v)) throw std::invalid_argument("K is not a subset of M");
    if (k_set.size() > 20) throw std::invalid_argument("K too large for exhaustive verification");

    if (!is_independent(k_set, m.dimension)) return false;
    std::set<BitVector> outside = family;
    for (const auto& v : k_set) outside.erase(v);

    const std::size_t count = k_set.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
        if (std::popcount(mask) < 2) continue;
        BitVector sum(m.dimension);
        for (std::size_t i = 0; i < count; ++i)
            if ((mask >> i) & 1) sum ^= k_set[i];
        if (outside.count(sum)) return false;
    }
    return true;
}

} // namespace maxlin
