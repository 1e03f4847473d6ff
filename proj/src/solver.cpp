#include "maxlin/solver.hpp"

#include "maxlin/algoh.hpp"
#include "maxlin/errors.hpp"
#include "maxlin/sumfree.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace maxlin {

namespace {

// Greedy lowest-index selection of n' equations with linearly independent
// rows; exists whenever the system is irreducible. Returns 0-based indices.
std::vector<std::size_t> independent_equations(const LinearSystem& s) {
    std::vector<std::size_t> chosen;
    std::vector<BitVector> echelon;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < s.size() && chosen.size() < s.n_vars(); ++i) {
        BitVector row = s.eq(i).lhs;
        for (std::size_t j = 0; j < echelon.size(); ++j)
            if (row.test(pivots[j])) row ^= echelon[j];
        if (!row.any()) continue;
        chosen.push_back(i);
        pivots.push_back(static_cast<std::size_t>(row.lowest_set_var()) - 1);
        echelon.push_back(std::move(row));
    }
    MAXLIN_CHECK(chosen.size() == s.n_vars(),
                 "reduced system lacks n independent equation rows");
    return chosen;
}

// The unique assignment falsifying all selected equations: solve the square
// system with every right-hand side flipped.
Assignment falsify_all(const LinearSystem& s, const std::vector<std::size_t>& picks) {
    const std::size_t n = s.n_vars();
    std::vector<BitVector> rows;
    BitVector rhs(n);
    rows.reserve(n);
    for (std::size_t p = 0; p < picks.size(); ++p) {
        const Equation& e = s.eq(picks[p]);
        rows.push_back(e.lhs);
        // In additive form an equation reads sum z_i = 0/1 for rhs +1/-1;
        // falsifying flips that bit.
        if (e.rhs == 1) rhs.set(p);
    }
    auto z = solve_square(BitMatrix(n, std::move(rows)), rhs);
    MAXLIN_CHECK(z.has_value(), "independent square system was inconsistent");
    Assignment x = Assignment::all_plus(n);
    for (std::size_t i = 0; i < n; ++i)
        if (z->test(i)) x.values[i] = -1;
    return x;
}

std::string memo_key(const LinearSystem& s, const Rational& remaining) {
    std::vector<std::string> lines;
    lines.reserve(s.size());
    for (const auto& e : s.equations()) {
        std::string line = e.lhs.to_string();
        line += e.rhs > 0 ? "+" : "-";
        line += e.weight.str();
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string key = std::to_string(s.n_vars());
    key += '|';
    key += remaining.str();
    for (const auto& l : lines) {
        key += '|';
        key += l;
    }
    return key;
}

struct SearchState {
    Rational target; // 2k
    SolveStats* stats = nullptr;
    std::map<std::string, bool>* failed = nullptr; // residual+remaining -> proven No
};

class LogScope {
public:
    LogScope(std::vector<TransformRecord>& path) : path_(path), base_(path.size()) {}
    ~LogScope() { path_.resize(base_); }
    void push(TransformRecord rec) { path_.push_back(std::move(rec)); }

private:
    std::vector<TransformRecord>& path_;
    std::size_t base_;
};

Assignment lift_path(const std::vector<TransformRecord>& path, Assignment x) {
    TransformLog log;
    log.records = path;
    return lift_assignment(log, std::move(x));
}

std::optional<Assignment> search_node(const LinearSystem& input, const Rational& marked,
                                      std::vector<TransformRecord>& path, SearchState& st) {
    st.stats->nodes += 1;
    LogScope scope(path);

    auto [sys, rlog] = reduce(input);
    st.stats->reductions += rlog.records.size();
    for (auto& rec : rlog.records) scope.push(std::move(rec));

    if (marked >= st.target)
        return lift_path(path, conditional_expectations(sys));

    const Rational remaining = st.target - marked;
    // The residual maximum excess never exceeds the residual total weight.
    if (sys.total_weight() < remaining) return std::nullopt;

    // Subtrees are a pure function of (residual, remaining); remembering the
    // refuted ones collapses permuted marking orders. Key construction is not
    // worth it on very large systems whose trees stay shallow.
    const bool use_memo = sys.size() <= 2048;
    std::string key;
    if (use_memo) {
        key = memo_key(sys, remaining);
        if (st.failed->count(key)) return std::nullopt;
    }

    const std::vector<std::size_t> picks = independent_equations(sys);
    const Assignment all_false = falsify_all(sys, picks);
    if (excess(sys, all_false) >= remaining) return lift_path(path, all_false);

    // Any assignment reaching the threshold satisfies one of the picked
    // equations; branch on which one an H iteration marks.
    for (std::size_t pick : picks) {
        const int var = sys.eq(pick).lhs.lowest_set_var();
        auto [child, mark] = h_step(sys, static_cast<int>(pick) + 1, var);
        const Rational child_marked = marked + mark.weight;
        scope.push(mark);
        auto found = search_node(child, child_marked, path, st);
        path.pop_back();
        if (found) return found;
    }
    if (use_memo) st.failed->emplace(std::move(key), true);
    return std::nullopt;
}

Verdict finish_yes(const LinearSystem& original, Assignment witness, SolveStats stats,
                   const Rational& threshold) {
    Verdict v;
    v.yes = true;
    v.achieved_excess = excess(original, witness);
    MAXLIN_CHECK(*v.achieved_excess >= threshold, "search witness misses the threshold");
    v.witness = std::move(witness);
    v.stats = std::move(stats);
    return v;
}

Verdict search_sequential(const LinearSystem& s, int k) {
    SolveStats stats;
    stats.regime = "search_tree";
    std::map<std::string, bool> failed;
    SearchState st{Rational(2 * k), &stats, &failed};
    std::vector<TransformRecord> path;
    auto found = search_node(s, Rational(0), path, st);
    if (found) return finish_yes(s, std::move(*found), std::move(stats), st.target);
    Verdict v;
    v.yes = false;
    v.stats = std::move(stats);
    return v;
}

// Parallel variant: the root's branches run concurrently to completion and
// the published result is the lowest-index Yes, matching the sequential
// order. Each task owns its memo table.
Verdict search_parallel(const LinearSystem& s, int k) {
    SolveStats stats;
    stats.regime = "search_tree_parallel";
    const Rational target(2 * k);

    std::vector<TransformRecord> path;
    LogScope scope(path);

    stats.nodes += 1;
    auto [sys, rlog] = reduce(s);
    stats.reductions += rlog.records.size();
    for (auto& rec : rlog.records) scope.push(std::move(rec));

    if (Rational(0) >= target)
        return finish_yes(s, lift_path(path, conditional_expectations(sys)), std::move(stats), target);
    if (sys.total_weight() < target) {
        Verdict v;
        v.yes = false;
        v.stats = std::move(stats);
        return v;
    }
    const std::vector<std::size_t> picks = independent_equations(sys);
    const Assignment all_false = falsify_all(sys, picks);
    if (excess(sys, all_false) >= target)
        return finish_yes(s, lift_path(path, all_false), std::move(stats), target);

    struct BranchResult {
        std::optional<Assignment> witness;
        SolveStats stats;
    };
    std::vector<std::future<BranchResult>> futures;
    for (std::size_t pick : picks) {
        auto prefix = path;
        futures.push_back(std::async(std::launch::async, [&, pick, prefix]() mutable {
            BranchResult out;
            const int var = sys.eq(pick).lhs.lowest_set_var();
            auto [child, mark] = h_step(sys, static_cast<int>(pick) + 1, var);
            prefix.push_back(mark);
            std::map<std::string, bool> failed;
            SearchState st{target, &out.stats, &failed};
            out.witness = search_node(child, mark.weight, prefix, st);
            return out;
        }));
    }
    std::optional<Assignment> found;
    for (auto& f : futures) {
        BranchResult r = f.get();
        stats.nodes += r.stats.nodes;
        stats.reductions += r.stats.reductions;
        if (!found && r.witness) found = std::move(r.witness);
    }
    if (found) return finish_yes(s, std::move(*found), std::move(stats), target);
    Verdict v;
    v.yes = false;
    v.stats = std::move(stats);
    return v;
}

Verdict lift_verdict(const LinearSystem& original, Verdict v, const TransformLog& log,
                     const Rational& threshold) {
    if (v.yes) {
        Assignment lifted = lift_assignment(log, std::move(*v.witness));
        v.achieved_excess = excess(original, lifted);
        MAXLIN_CHECK(*v.achieved_excess >= threshold, "lifted witness misses the threshold");
        v.witness = std::move(lifted);
    }
    return v;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

} // namespace

Verdict solve_search_tree(const LinearSystem& s, int k, const SolveOptions& options) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    return options.parallel ? search_parallel(s, k) : search_sequential(s, k);
}

KernelOutcome kernelize(const LinearSystem& s, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (!s.integral_weights())
        throw PreconditionError("kernelize requires integral weights");

    if (k == 0) {
        // The average-assignment guarantee: excess >= 0 always attainable.
        Verdict v = solve_search_tree(s, 0);
        v.stats.regime = "trivial_yes_k0";
        return {std::move(v), "trivial_yes_k0"};
    }

    auto [reduced, log] = reduce(s);
    const std::uint64_t m = reduced.size();
    const std::uint64_t n = reduced.n_vars();
    const std::uint64_t two_k = 2 * static_cast<std::uint64_t>(k);

    if (m < two_k) {
        // Irreducibility bounds n by m, so this is already a tiny kernel.
        MAXLIN_CHECK(n < two_k, "kernel exceeds the few-equations bound");
        return {Kernel{std::move(reduced), std::move(log), k}, "kernel_few_equations"};
    }
    if (big_pow(m + 2, two_k - 1) <= big_pow(2, n)) {
        // Dense-enough equation count forces a Yes; the witness still comes
        // from the search tree on the reduced system.
        Verdict v = solve_search_tree(reduced, k);
        MAXLIN_CHECK(v.yes, "density regime produced a No");
        v = lift_verdict(s, std::move(v), log, Rational(2 * k));
        v.stats.regime = "yes_by_equation_density";
        return {std::move(v), "yes_by_equation_density"};
    }
    if (BigInt(m) >= big_pow(n, two_k)) {
        Verdict v = solve_search_tree(reduced, k);
        v = lift_verdict(s, std::move(v), log, Rational(2 * k));
        v.stats.regime = "search_tree_dense";
        return {std::move(v), "search_tree_dense"};
    }
    // n <= 4k^2 log2(16k^4), checked exactly as 2^n <= (16k^4)^(4k^2).
    // log2(16k^4) >= 4 makes n <= 16k^2 a cheap sufficient condition.
    if (BigInt(n) > BigInt(16) * k * k) {
        const BigInt k4 = big_pow(static_cast<std::uint64_t>(k), 4);
        MAXLIN_CHECK(big_pow(2, n) <=
                         boost::multiprecision::pow(BigInt(16) * k4,
                                                    static_cast<unsigned>(4ull * k * k)),
                     "kernel exceeds the k^2 log k variable bound");
    }
    return {Kernel{std::move(reduced), std::move(log), k}, "kernel_k2_log_k"};
}

KernelOutcome kernelize_r(const LinearSystem& s, int k, int r) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (s.max_arity() > static_cast<std::size_t>(r))
        throw PreconditionError("an equation exceeds the arity bound r");
    if (!s.integral_weights())
        throw PreconditionError("kernelize_r requires integral weights");

    if (k == 0) {
        Verdict v = solve_search_tree(s, 0);
        v.stats.regime = "trivial_yes_k0";
        return {std::move(v), "trivial_yes_k0"};
    }

    auto [reduced, log] = reduce(s);
    const std::size_t n = reduced.n_vars();
    const std::size_t bound = static_cast<std::size_t>(2 * k - 1) * static_cast<std::size_t>(r);
    if (n >= bound + 1) {
        Assignment x = guaranteed_excess_assignment(reduced, 2 * k, r);
        Verdict v;
        v.yes = true;
        v.witness = std::move(x);
        v.stats.regime = "yes_by_guaranteed_excess";
        v = lift_verdict(s, std::move(v), log, Rational(2 * k));
        return {std::move(v), "yes_by_guaranteed_excess"};
    }
    MAXLIN_CHECK(n <= bound, "kernel exceeds the (2k-1)r variable bound");
    return {Kernel{std::move(reduced), std::move(log), k}, "kernel_(2k-1)r"};
}

Verdict solve(const LinearSystem& s, int k, const SolveOptions& options) {
    KernelOutcome out = kernelize(s, k);
    if (out.solved()) {
        Verdict v = out.verdict();
        v.stats.regime = out.regime;
        return v;
    }
    const Kernel& kern = out.kernel();
    Verdict v = solve_search_tree(kern.system, k, options);
    v = lift_verdict(s, std::move(v), kern.log, Rational(2 * k));
    v.stats.regime = out.regime + "+search_tree";
    return v;
}

Assignment guaranteed_excess_assignment(const LinearSystem& s, int k, std::optional<int> r) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (!is_irreducible(s)) throw PreconditionError("system is not irreducible");
    const std::size_t true_arity = s.max_arity();
    std::size_t arity = true_arity;
    if (r) {
        if (*r < 1 || static_cast<std::size_t>(*r) < true_arity)
            throw PreconditionError("supplied r is below the maximum equation arity");
        arity = static_cast<std::size_t>(*r);
    }
    const std::size_t n = s.n_vars();
    if (n < arity * (static_cast<std::size_t>(k) - 1) + 1)
        throw PreconditionError("n < (k-1)r+1");

    VectorFamily family{n, {}, arity};
    family.vectors.reserve(s.size());
    for (const auto& e : s.equations()) family.vectors.push_back(e.lhs);

    const std::vector<BitVector> chosen = find_msum_free(family, k);
    std::vector<EquationSelector> plan;
    plan.reserve(chosen.size());
    for (const auto& v : chosen) plan.push_back(EquationSelector::by_original_lhs(v));

    HRun run = run_h(s, plan, std::nullopt);
    const Rational floor = s.min_weight() * k;
    MAXLIN_CHECK(run.total_marked_weight >= floor, "marked weight below k * w_min");
    Assignment x = complete_assignment(run);
    MAXLIN_CHECK(excess(s, x) >= floor, "guaranteed-excess witness below k * w_min");
    return x;
}

} // namespace maxlin
