#include "maxlin/algoh.hpp"

#include "maxlin/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace maxlin {

std::pair<LinearSystem, MarkRecord> h_step(const LinearSystem& s, int eq_index, int var) {
    if (eq_index < 1 || static_cast<std::size_t>(eq_index) > s.size())
        throw std::invalid_argument("equation index out of range");
    if (!s.distinct_lhs())
        throw std::invalid_argument("h_step requires a Rule-1 saturated system");
    const Equation& marked = s.eq(static_cast<std::size_t>(eq_index) - 1);
    if (var < 1 || static_cast<std::size_t>(var) > s.n_vars() || !marked.lhs.test_var(var))
        throw std::invalid_argument("marked variable does not occur in the marked equation");

    LinearSystem out(s.n_vars());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 == static_cast<std::size_t>(eq_index)) continue;
        const Equation& e = s.eq(i);
        if (e.lhs.test_var(var)) {
            BitVector lhs = marked.lhs ^ e.lhs;
            // Distinct left-hand sides guarantee I xor I' is nonempty.
            MAXLIN_CHECK(lhs.any(), "H rewrite produced an empty left-hand side");
            out.push(Equation{std::move(lhs), marked.rhs * e.rhs, e.weight, e.id});
        } else {
            out.push(e);
        }
    }
    auto [saturated, merge_log] = apply_rule1(out);
    (void)merge_log; // merges do not affect lifting
    MarkRecord record{marked.lhs, marked.rhs, var, marked.weight};
    return {std::move(saturated), std::move(record)};
}

namespace {

int resolve_selector(const LinearSystem& sys, const EquationSelector& sel,
                     const std::map<BitVector, std::uint32_t>& original_ids) {
    if (const int* idx = std::get_if<int>(&sel.which)) {
        if (*idx < 1 || static_cast<std::size_t>(*idx) > sys.size())
            throw PreconditionError("plan selector index out of range");
        return *idx;
    }
    const BitVector& lhs = std::get<BitVector>(sel.which);
    auto it = original_ids.find(lhs);
    if (it == original_ids.end())
        throw PreconditionError("plan selector lhs not present in the input system");
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (sys.eq(i).id == it->second) return static_cast<int>(i) + 1;
    throw PreconditionError("plan selector refers to a deleted equation");
}

} // namespace

HRun run_h(const LinearSystem& s, const std::vector<EquationSelector>& plan,
           const std::optional<Rational>& budget) {
    if (!is_irreducible(s)) throw PreconditionError("run_h requires an irreducible system");

    std::map<BitVector, std::uint32_t> original_ids;
    for (const auto& e : s.equations()) original_ids.emplace(e.lhs, e.id);

    HRun run{{}, s, Rational(0)};
    std::size_t next_plan = 0;
    while (true) {
        if (budget && run.total_marked_weight >= *budget) break;
        if (next_plan >= plan.size() && !plan.empty()) break; // a plan bounds the run
        if (run.residual.empty()) {
            if (next_plan < plan.size())
                throw PreconditionError("plan selector refers to a deleted equation");
            break;
        }
        int eq_index;
        if (next_plan < plan.size()) {
            eq_index = resolve_selector(run.residual, plan[next_plan], original_ids);
            ++next_plan;
        } else {
            eq_index = 1;
        }
        const int var = run.residual.eq(static_cast<std::size_t>(eq_index) - 1).lhs.lowest_set_var();
        auto [next, record] = h_step(run.residual, eq_index, var);
        run.total_marked_weight += record.weight;
        run.marks.push_back(std::move(record));
        run.residual = std::move(next);
    }
    return run;
}

Assignment conditional_expectations(const LinearSystem& s) {
    const std::size_t n = s.n_vars();
    Assignment x = Assignment::all_plus(n);

    // Per-equation state: number of not-yet-fixed variables and the sign of
    // the already-fixed part of the product.
    std::vector<std::size_t> unfixed(s.size());
    std::vector<int> fixed_sign(s.size(), 1);
    std::vector<std::vector<std::size_t>> eqs_of_var(n);
    for (std::size_t j = 0; j < s.size(); ++j) {
        unfixed[j] = s.eq(j).lhs.popcount();
        for (int v : s.eq(j).lhs.vars()) eqs_of_var[static_cast<std::size_t>(v) - 1].push_back(j);
    }

    for (std::size_t i = 0; i < n; ++i) {
        // Terms fully fixed by this choice contribute +/- their coefficient;
        // everything else has conditional expectation 0.
        Rational delta(0);
        for (std::size_t j : eqs_of_var[i])
            if (unfixed[j] == 1) {
                const Equation& e = s.eq(j);
                delta += e.weight * e.rhs * fixed_sign[j];
            }
        const int sign = delta >= 0 ? 1 : -1;
        x.values[i] = static_cast<std::int8_t>(sign);
        for (std::size_t j : eqs_of_var[i]) {
            --unfixed[j];
            if (sign < 0) fixed_sign[j] = -fixed_sign[j];
        }
    }
    return x;
}

Assignment complete_assignment(const HRun& run) {
    Assignment x = conditional_expectations(run.residual);
    for (auto it = run.marks.rbegin(); it != run.marks.rend(); ++it) {
        int product = it->marked_rhs;
        for (int var : it->marked_lhs.vars())
            if (var != it->marked_var) product *= x.value(var);
        x.set(it->marked_var, product);
    }
    return x;
}

} // namespace maxlin
