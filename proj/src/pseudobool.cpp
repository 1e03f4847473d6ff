#include "maxlin/pseudobool.hpp"

#include "maxlin/errors.hpp"
#include "maxlin/solver.hpp"

#include <stdexcept>

namespace maxlin {

void FourierPolynomial::add_term(const std::vector<int>& vars, const Rational& coef) {
    if (vars.empty()) throw std::invalid_argument("term index set must be nonempty");
    add_term_support(BitVector::from_vars(n_vars_, vars), coef);
}

void FourierPolynomial::add_term_support(const BitVector& support, const Rational& coef) {
    if (support.size() != n_vars_) throw std::invalid_argument("term dimension mismatch");
    if (support.none()) throw std::invalid_argument("term index set must be nonempty");
    if (coef == 0) return;
    auto [it, fresh] = terms_.emplace(support, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

std::size_t FourierPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [support, coef] : terms_) d = std::max(d, support.popcount());
    return d;
}

Rational evaluate(const FourierPolynomial& f, const Assignment& x) {
    if (x.size() != f.n_vars()) throw std::invalid_argument("assignment dimension mismatch");
    const BitVector neg = x.negative_mask();
    Rational total = f.constant();
    for (const auto& [support, coef] : f.terms()) {
        if (support.parity_and(neg))
            total -= coef;
        else
            total += coef;
    }
    return total;
}

std::pair<LinearSystem, Rational> to_excess_system(const FourierPolynomial& f) {
    LinearSystem s(f.n_vars());
    for (const auto& [support, coef] : f.terms()) {
        const int rhs = coef > 0 ? 1 : -1;
        s.add(support, rhs, coef > 0 ? coef : Rational(-coef));
    }
    return {std::move(s), f.constant()};
}

BoundResult lower_bound(const FourierPolynomial& f) {
    if (f.terms().empty())
        return {f.constant(), Assignment::all_plus(f.n_vars()), 0, 0};

    auto [system, offset] = to_excess_system(f);
    Rational min_coef = system.min_weight();

    // Rule 1 cannot fire on distinct terms; Rule 2 shrinks the variable set
    // to rank A, the incidence rank the bound is stated with.
    auto [reduced, log] = reduce(system);
    MAXLIN_CHECK(reduced.size() == system.size() && reduced.min_weight() == min_coef,
                 "reduction merged distinct Fourier terms");

    const std::size_t rank_used = reduced.n_vars();
    const std::size_t r = f.degree();
    const int k_star = static_cast<int>((rank_used + r - 1) / r);
    MAXLIN_CHECK(k_star >= 1, "nonempty term set must give k* >= 1");

    Assignment x = guaranteed_excess_assignment(reduced, k_star);
    Assignment witness = lift_assignment(log, std::move(x));

    BoundResult out;
    out.bound = offset + Rational(k_star) * min_coef;
    out.rank_used = rank_used;
    out.k_star = k_star;
    MAXLIN_CHECK(evaluate(f, witness) >= out.bound, "witness fell below the lower bound");
    out.witness = std::move(witness);
    return out;
}

} // namespace maxlin
