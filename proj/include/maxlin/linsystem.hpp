#pragma once

#include "maxlin/gf2.hpp"
#include "maxlin/rational.hpp"

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace maxlin {

// One weighted equation prod_{i in I} x_i = rhs over {-1,+1} variables.
// The lhs bit vector has bit i-1 set iff i is in I.
struct Equation {
    BitVector lhs;       // nonzero
    int rhs = 1;         // +1 or -1
    Rational weight;     // > 0
    std::uint32_t id = 0; // stable across reductions and H rewrites
};

class LinearSystem {
public:
    LinearSystem() = default;
    explicit LinearSystem(std::size_t n_vars) : n_vars_(n_vars) {}

    std::size_t n_vars() const { return n_vars_; }
    std::size_t size() const { return eqs_.size(); }
    bool empty() const { return eqs_.empty(); }
    const std::vector<Equation>& equations() const { return eqs_; }
    const Equation& eq(std::size_t i) const { return eqs_[i]; }

    // Appends an equation with a fresh id. Validates lhs nonzero and of the
    // right dimension, weight > 0, rhs in {-1,+1}.
    void add(BitVector lhs, int rhs, Rational weight);
    // Convenience: 1-based variable indices.
    void add_vars(const std::vector<int>& vars, int rhs, Rational weight);
    // Appends a validated equation keeping its id (used by the reductions).
    void push(Equation e);

    Rational total_weight() const;
    Rational min_weight() const; // throws std::invalid_argument on empty
    std::size_t max_arity() const;
    bool integral_weights() const;
    bool distinct_lhs() const;

    BitMatrix coefficient_matrix() const;

private:
    std::size_t n_vars_ = 0;
    std::vector<Equation> eqs_;
    std::uint32_t next_id_ = 0;
};

// A point of {-1,+1}^n.
struct Assignment {
    std::vector<std::int8_t> values;

    Assignment() = default;
    explicit Assignment(std::vector<std::int8_t> v) : values(std::move(v)) {}
    static Assignment all_plus(std::size_t n) { return Assignment(std::vector<std::int8_t>(n, 1)); }

    std::size_t size() const { return values.size(); }
    int value(int var) const { return values[static_cast<std::size_t>(var) - 1]; }
    void set(int var, int sign) { values[static_cast<std::size_t>(var) - 1] = static_cast<std::int8_t>(sign); }

    // Bit i-1 set iff x_i = -1.
    BitVector negative_mask() const;

    bool operator==(const Assignment& other) const { return values == other.values; }
};

// Total weight of satisfied minus total weight of falsified equations.
Rational excess(const LinearSystem& s, const Assignment& x);

// ---------------------------------------------------------------------------
// Transform log: replayable record of reductions and H steps, used to lift
// assignments on a reduced system back to the original variables.

// A duplicate-lhs group collapsed by Rule 1. Lifting is a no-op.
struct Rule1Merge {
    BitVector kept_lhs;
    std::vector<std::pair<int, Rational>> sources; // (rhs, weight) of the merged equations
};

// Variables outside the greedy column basis dropped by Rule 2. Indices are
// 1-based in the pre-deletion space; `kept` is ascending and position p of
// the reduced space maps to kept[p].
struct Rule2Delete {
    std::vector<int> deleted;
    std::vector<int> kept;
};

// One Algorithm H marking. Coordinates are those of the system at the time
// of the step. Lifting assigns marked_var so the marked equation holds.
struct MarkRecord {
    BitVector marked_lhs;
    int marked_rhs = 1;
    int marked_var = 0; // 1-based, set in marked_lhs
    Rational weight;
};

using TransformRecord = std::variant<Rule1Merge, Rule2Delete, MarkRecord>;

struct TransformLog {
    std::vector<TransformRecord> records;

    bool empty() const { return records.empty(); }
    void append(TransformLog more) {
        for (auto& r : more.records) records.push_back(std::move(r));
    }
};

// Lifts an assignment for the reduced end of `log` back to the original
// variable space, applying records in reverse: deleted variables become +1
// (which preserves every equation's status exactly), merges change nothing,
// and marked variables are back-substituted so each marked equation holds.
Assignment lift_assignment(const TransformLog& log, Assignment x);

// ---------------------------------------------------------------------------
// Reduction rules.

// Rule 1: merge equal-lhs pairs (same rhs: weights add; opposite rhs: the
// heavier side survives with the weight difference; exact ties delete both).
std::pair<LinearSystem, TransformLog> apply_rule1(const LinearSystem& s);

// Rule 2: restrict every equation to the greedy lowest-index column basis of
// the coefficient matrix and re-index the surviving variables.
std::pair<LinearSystem, TransformLog> apply_rule2(const LinearSystem& s);

// Rule 1 then Rule 2, looped to a fixed point of both.
std::pair<LinearSystem, TransformLog> reduce(const LinearSystem& s);

// Distinct left-hand sides and full column rank.
bool is_irreducible(const LinearSystem& s);

} // namespace maxlin
