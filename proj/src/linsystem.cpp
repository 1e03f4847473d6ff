#include "maxlin/linsystem.hpp"

#include "maxlin/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace maxlin {

void LinearSystem::add(BitVector lhs, int rhs, Rational weight) {
    Equation e{std::move(lhs), rhs, std::move(weight), next_id_};
    push(std::move(e));
}

void LinearSystem::add_vars(const std::vector<int>& vars, int rhs, Rational weight) {
    add(BitVector::from_vars(n_vars_, vars), rhs, std::move(weight));
}

void LinearSystem::push(Equation e) {
    if (e.lhs.size() != n_vars_) throw std::invalid_argument("equation dimension mismatch");
    if (e.lhs.none()) throw std::invalid_argument("equation left-hand side must be nonempty");
    if (e.rhs != 1 && e.rhs != -1) throw std::invalid_argument("rhs must be +1 or -1");
    if (e.weight <= 0) throw std::invalid_argument("equation weight must be positive");
    next_id_ = std::max(next_id_, e.id + 1);
    eqs_.push_back(std::move(e));
}

Rational LinearSystem::total_weight() const {
    Rational w(0);
    for (const auto& e : eqs_) w += e.weight;
    return w;
}

Rational LinearSystem::min_weight() const {
    if (eqs_.empty()) throw std::invalid_argument("min_weight of an empty system");
    Rational w = eqs_.front().weight;
    for (const auto& e : eqs_) w = std::min(w, e.weight);
    return w;
}

std::size_t LinearSystem::max_arity() const {
    std::size_t r = 0;
    for (const auto& e : eqs_) r = std::max(r, e.lhs.popcount());
    return r;
}

bool LinearSystem::integral_weights() const {
    for (const auto& e : eqs_)
        if (!is_integral(e.weight)) return false;
    return true;
}

bool LinearSystem::distinct_lhs() const {
    std::map<BitVector, int> seen;
    for (const auto& e : eqs_)
        if (!seen.emplace(e.lhs, 1).second) return false;
    return true;
}

BitMatrix LinearSystem::coefficient_matrix() const {
    std::vector<BitVector> rows;
    rows.reserve(eqs_.size());
    for (const auto& e : eqs_) rows.push_back(e.lhs);
    return BitMatrix(n_vars_, std::move(rows));
}

BitVector Assignment::negative_mask() const {
    BitVector m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0) m.set(i);
    return m;
}

Rational excess(const LinearSystem& s, const Assignment& x) {
    if (x.size() != s.n_vars()) throw std::invalid_argument("assignment dimension mismatch");
    const BitVector neg = x.negative_mask();
    Rational total(0);
    for (const auto& e : s.equations()) {
        const int product = e.lhs.parity_and(neg) ? -1 : 1;
        if (product == e.rhs)
            total += e.weight;
        else
            total -= e.weight;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Lifting

namespace {

std::size_t record_post_dim(const TransformRecord& rec) {
    if (const auto* m = std::get_if<Rule1Merge>(&rec)) return m->kept_lhs.size();
    if (const auto* d = std::get_if<Rule2Delete>(&rec)) return d->kept.size();
    return std::get<MarkRecord>(rec).marked_lhs.size();
}

} // namespace

Assignment lift_assignment(const TransformLog& log, Assignment x) {
    for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
        if (x.size() != record_post_dim(*it))
            throw std::invalid_argument("assignment dimension mismatch with log tail");
        if (const auto* del = std::get_if<Rule2Delete>(&*it)) {
            const std::size_t pre = del->kept.size() + del->deleted.size();
            Assignment wider = Assignment::all_plus(pre);
            for (std::size_t p = 0; p < del->kept.size(); ++p)
                wider.set(del->kept[p], x.values[p]);
            x = std::move(wider);
        } else if (const auto* mark = std::get_if<MarkRecord>(&*it)) {
            int product = mark->marked_rhs;
            for (int var : mark->marked_lhs.vars())
                if (var != mark->marked_var) product *= x.value(var);
            x.set(mark->marked_var, product);
        }
        // Rule1Merge: variables unchanged.
    }
    return x;
}

// ---------------------------------------------------------------------------
// Rules

std::pair<LinearSystem, TransformLog> apply_rule1(const LinearSystem& s) {
    struct Group {
        Rational plus{0}, minus{0};
        std::vector<std::pair<int, Rational>> sources;
        std::uint32_t first_id = 0;
    };
    std::map<BitVector, std::size_t> index;
    std::vector<std::pair<BitVector, Group>> groups; // first-occurrence order

    for (const auto& e : s.equations()) {
        auto [it, fresh] = index.emplace(e.lhs, groups.size());
        if (fresh) groups.push_back({e.lhs, Group{Rational(0), Rational(0), {}, e.id}});
        Group& g = groups[it->second].second;
        if (e.rhs > 0)
            g.plus += e.weight;
        else
            g.minus += e.weight;
        g.sources.emplace_back(e.rhs, e.weight);
    }

    LinearSystem out(s.n_vars());
    TransformLog log;
    for (auto& [lhs, g] : groups) {
        if (g.sources.size() > 1)
            log.records.push_back(Rule1Merge{lhs, g.sources});
        const Rational net = g.plus - g.minus;
        if (net > 0)
            out.push(Equation{lhs, 1, net, g.first_id});
        else if (net < 0)
            out.push(Equation{lhs, -1, -net, g.first_id});
        // net == 0: both sides cancel, drop the equation.
    }
    return {std::move(out), std::move(log)};
}

std::pair<LinearSystem, TransformLog> apply_rule2(const LinearSystem& s) {
    const std::vector<int> kept = independent_columns(s.coefficient_matrix());
    if (kept.size() == s.n_vars()) return {s, TransformLog{}};

    std::vector<int> deleted;
    deleted.reserve(s.n_vars() - kept.size());
    {
        std::size_t k = 0;
        for (int var = 1; var <= static_cast<int>(s.n_vars()); ++var) {
            if (k < kept.size() && kept[k] == var)
                ++k;
            else
                deleted.push_back(var);
        }
    }

    LinearSystem out(kept.size());
    for (const auto& e : s.equations()) {
        BitVector lhs(kept.size());
        for (std::size_t p = 0; p < kept.size(); ++p)
            if (e.lhs.test_var(kept[p])) lhs.set(p);
        // A nonzero row restricted to a column basis stays nonzero.
        MAXLIN_CHECK(lhs.any(), "Rule 2 produced an empty left-hand side");
        out.push(Equation{std::move(lhs), e.rhs, e.weight, e.id});
    }
    TransformLog log;
    log.records.push_back(Rule2Delete{std::move(deleted), kept});
    return {std::move(out), std::move(log)};
}

std::pair<LinearSystem, TransformLog> reduce(const LinearSystem& s) {
    LinearSystem cur = s;
    TransformLog log;
    // One Rule 1 saturation followed by one Rule 2 pass suffices; the loop
    // re-checks the fixed point.
    for (std::size_t iter = 0;; ++iter) {
        MAXLIN_CHECK(iter <= s.n_vars() + 2, "reduce did not reach a fixed point");
        auto [s1, log1] = apply_rule1(cur);
        auto [s2, log2] = apply_rule2(s1);
        const bool changed = !log1.empty() || !log2.empty();
        log.append(std::move(log1));
        log.append(std::move(log2));
        cur = std::move(s2);
        if (!changed) break;
    }
    return {std::move(cur), std::move(log)};
}

bool is_irreducible(const LinearSystem& s) {
    return s.distinct_lhs() && rank(s.coefficient_matrix()) == s.n_vars();
}

} // namespace maxlin
