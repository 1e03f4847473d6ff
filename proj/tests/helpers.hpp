#pragma once

#include "maxlin/linsystem.hpp"
#include "maxlin/testkit.hpp"

#include <initializer_list>
#include <vector>

namespace maxlin::test {

struct EqSpec {
    std::vector<int> vars;
    int rhs;
    long weight_num;
    long weight_den = 1;
};

inline LinearSystem make_system(std::size_t n, std::initializer_list<EqSpec> eqs) {
    LinearSystem s(n);
    for (const auto& e : eqs)
        s.add_vars(e.vars, e.rhs, Rational(e.weight_num, e.weight_den));
    return s;
}

inline bool same_equations(const LinearSystem& a, const LinearSystem& b) {
    if (a.n_vars() != b.n_vars() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.eq(i).lhs == b.eq(i).lhs)) return false;
        if (a.eq(i).rhs != b.eq(i).rhs) return false;
        if (a.eq(i).weight != b.eq(i).weight) return false;
    }
    return true;
}

// All 2^n assignments of an n-variable system, mask bit i-1 => x_i = -1.
inline Assignment assignment_from_mask(std::size_t n, std::uint64_t mask) {
    Assignment x = Assignment::all_plus(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) x.values[i] = -1;
    return x;
}

inline bool satisfies_mark(const MarkRecord& mark, const Assignment& x) {
    int product = 1;
    for (int v : mark.marked_lhs.vars()) product *= x.value(v);
    return product == mark.marked_rhs;
}

} // namespace maxlin::test
