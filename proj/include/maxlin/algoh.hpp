#pragma once

#include "maxlin/linsystem.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace maxlin {

// Result of driving Algorithm H: the marking trail, the residual system
// (same variable dimension as the input; marked variables simply no longer
// occur), and the accumulated marked weight.
struct HRun {
    std::vector<MarkRecord> marks;
    LinearSystem residual;
    Rational total_marked_weight;
};

// One iteration of Algorithm H on a Rule-1-saturated system: mark equation
// eq_index (1-based) and variable `var` in it, delete the equation, replace
// every other equation containing var by the symmetric-difference rewrite
// (lhs := I xor I', rhs := b*b', weight unchanged), then re-apply Rule 1.
std::pair<LinearSystem, MarkRecord> h_step(const LinearSystem& s, int eq_index, int var);

// Picks the equation to mark either by current 1-based index or by its lhs
// in the pre-run system, followed through rewrites by stable id.
struct EquationSelector {
    std::variant<int, BitVector> which;

    static EquationSelector by_index(int index) { return {index}; }
    static EquationSelector by_original_lhs(BitVector lhs) { return {std::move(lhs)}; }
};

// Drives Algorithm H on an irreducible system. Marks equations following
// `plan` (an empty plan means lowest-current-index choices); the marked
// variable is the lowest-index variable of the chosen lhs. Stops as soon as
// the system is empty, the marked weight reaches `budget` (nullopt meaning
// no weight cap), or a nonempty plan is exhausted.
HRun run_h(const LinearSystem& s, const std::vector<EquationSelector>& plan,
           const std::optional<Rational>& budget);

// Assignment over the variables of the H input with excess at least
// total_marked_weight: conditional expectations on the residual, then the
// marked variables are back-substituted in reverse marking order.
Assignment complete_assignment(const HRun& run);

// Method of conditional expectations: fixes variables in index order, always
// keeping the conditional expected excess nonnegative (ties pick +1), so the
// returned assignment has excess(s, x) >= 0.
Assignment conditional_expectations(const LinearSystem& s);

} // namespace maxlin
