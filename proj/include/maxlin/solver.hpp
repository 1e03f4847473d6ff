#pragma once

#include "maxlin/linsystem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace maxlin {

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t reductions = 0;
    std::string regime;
};

// Decision for "maximum excess >= 2k", with a constructive witness on Yes.
struct Verdict {
    bool yes = false;
    std::optional<Assignment> witness;        // original variables of the input
    std::optional<Rational> achieved_excess;  // present iff yes
    SolveStats stats;
};

struct SolveOptions {
    // Evaluate the root branches concurrently; the published result is
    // reconciled to the sequential first-index Yes.
    bool parallel = false;
};

// Depth-bounded search tree: at each node reduce, test the unique assignment
// falsifying n' independent equations against the remaining threshold, and
// otherwise branch on which of those equations an H iteration marks. Exact
// for every input; k = 0 answers Yes via conditional expectations.
Verdict solve_search_tree(const LinearSystem& s, int k, const SolveOptions& options = {});

struct Kernel {
    LinearSystem system;
    TransformLog log; // original -> kernel
    int k = 0;
};

struct KernelOutcome {
    std::variant<Verdict, Kernel> result;
    std::string regime;

    bool solved() const { return std::holds_alternative<Verdict>(result); }
    const Verdict& verdict() const { return std::get<Verdict>(result); }
    const Kernel& kernel() const { return std::get<Kernel>(result); }
};

// Kernelization with the O(k^2 log k)-variable guarantee: either decides the
// instance outright or returns an irreducible kernel. Requires integral
// weights; all regime thresholds are exact big-integer comparisons.
KernelOutcome kernelize(const LinearSystem& s, int k);

// Arity-bounded kernelization: instances with more than (2k-1)r variables
// after reduction are Yes with a guaranteed-excess witness; otherwise the
// reduced system is a kernel with at most (2k-1)r variables.
KernelOutcome kernelize_r(const LinearSystem& s, int k, int r);

// Full pipeline: kernelize, then search the kernel and lift the witness.
Verdict solve(const LinearSystem& s, int k, const SolveOptions& options = {});

// Assignment with excess >= k * w_min for an irreducible system whose
// equations have at most r variables, provided n >= (k-1)r + 1. r is
// inferred from the system unless supplied; supplying r below the true
// maximum arity is rejected.
Assignment guaranteed_excess_assignment(const LinearSystem& s, int k,
                                        std::optional<int> r = std::nullopt);

} // namespace maxlin
