#pragma once

#include "maxlin/linsystem.hpp"

#include <map>
#include <utility>
#include <vector>

namespace maxlin {

// Pseudo-boolean function on {-1,+1}^n in Fourier form: a constant plus
// sparse terms coef(I) * prod_{i in I} x_i with nonzero coefficients and
// nonempty index sets. Duplicate terms merge on insertion; terms whose
// coefficient cancels to zero are dropped.
class FourierPolynomial {
public:
    FourierPolynomial() = default;
    explicit FourierPolynomial(std::size_t n_vars, Rational constant = Rational(0))
        : n_vars_(n_vars), constant_(std::move(constant)) {}

    std::size_t n_vars() const { return n_vars_; }
    const Rational& constant() const { return constant_; }
    void set_constant(Rational c) { constant_ = std::move(c); }

    // vars holds 1-based indices; must be nonempty and within range.
    void add_term(const std::vector<int>& vars, const Rational& coef);
    void add_term_support(const BitVector& support, const Rational& coef);

    const std::map<BitVector, Rational>& terms() const { return terms_; }
    std::size_t degree() const; // max |I|, 0 when no terms

private:
    std::size_t n_vars_ = 0;
    Rational constant_ = Rational(0);
    std::map<BitVector, Rational> terms_;
};

Rational evaluate(const FourierPolynomial& f, const Assignment& x);

// The excess-system view: one equation per term with rhs = sign(coef) and
// weight |coef|; for every x, evaluate(f,x) = offset + excess(system,x).
std::pair<LinearSystem, Rational> to_excess_system(const FourierPolynomial& f);

struct BoundResult {
    Rational bound;
    Assignment witness;
    std::size_t rank_used = 0;
    int k_star = 0;
};

// Constructive lower bound on max f: bound = constant +
// floor((rank A + r - 1)/r) * min |coef|, where A is the variable-term
// incidence matrix and r the degree; the witness attains at least the bound.
BoundResult lower_bound(const FourierPolynomial& f);

} // namespace maxlin
