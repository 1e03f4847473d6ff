// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] must be the path to the CLI binary (used by the determinism suite).

#include "maxlin/algoh.hpp"
#include "maxlin/errors.hpp"
#include "maxlin/graphapps.hpp"
#include "maxlin/io.hpp"
#include "maxlin/pseudobool.hpp"
#include "maxlin/solver.hpp"
#include "maxlin/sumfree.hpp"
#include "maxlin/testkit.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace maxlin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BigInt distinct_lhs_count(std::size_t n, std::size_t r) {
    BigInt total(0), binom(1);
    for (std::size_t j = 1; j <= r; ++j) {
        binom = binom * (n - j + 1) / j;
        total += binom;
    }
    return total;
}

// Seeded instance family for the oracle-equivalence run: sizes and weights
// spread over the full allowed ranges, with duplicated rows mixed in so the
// Rule 1 paths get exercised.
LinearSystem corpus_instance(std::uint64_t index) {
    const std::uint64_t seed = mix64(0xACCE97ul, index);
    const std::size_t n = 1 + mix64(seed, 0) % 14;
    std::size_t r = 1 + mix64(seed, 1) % std::min<std::size_t>(n, 4);
    if (index % 7 == 0) r = n; // occasionally unbounded arity
    std::size_t m = 1 + mix64(seed, 2) % 40;
    const std::uint64_t max_weight = 1 + mix64(seed, 3) % 8;

    const BigInt available = distinct_lhs_count(n, r);
    std::size_t distinct = m;
    if (BigInt(distinct) > available) distinct = static_cast<std::size_t>(available);

    LinearSystem s = random_instance({n, distinct, r, max_weight, mix64(seed, 4)});
    // Duplicate some rows with fresh signs/weights (still within m <= 40).
    if (index % 3 == 0 && !s.empty()) {
        const std::size_t dups = std::min<std::size_t>(40 - distinct, distinct / 2);
        LinearSystem with_dups(s.n_vars());
        for (const auto& e : s.equations()) with_dups.push(e);
        for (std::size_t d = 0; d < dups; ++d) {
            const auto& e = s.eq(mix64(seed, 100 + d) % s.size());
            with_dups.add(e.lhs, (mix64(seed, 200 + d) & 1) ? 1 : -1,
                          Rational(1 + mix64(seed, 300 + d) % max_weight));
        }
        return with_dups;
    }
    return s;
}

Outcome criterion1() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    int yes_count = 0, no_count = 0;
    for (std::uint64_t i = 1; i <= 500; ++i) {
        const LinearSystem s = corpus_instance(i);
        const Rational best = brute_force_max_excess(s).first;
        for (int k = 0; k <= 4; ++k) {
            const Verdict v = solve(s, k);
            const bool expect = best >= Rational(2 * k);
            if (v.yes != expect) {
                out.fail("mismatch on instance " + std::to_string(i) + " k=" + std::to_string(k));
                continue;
            }
            if (v.yes) {
                ++yes_count;
                if (!v.witness || excess(s, *v.witness) < Rational(2 * k))
                    out.fail("witness failed on instance " + std::to_string(i));
            } else {
                ++no_count;
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) out.fail("runtime budget exceeded");
    std::ostringstream d;
    d << "500 instances x k in 0..4, " << yes_count << " yes / " << no_count << " no, "
      << std::fixed;
    d.precision(1);
    d << elapsed << "s";
    out.detail = d.str() + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion2() {
    Outcome out;
    int done = 0;
    for (std::uint64_t seed = 1; done < 200; ++seed) {
        const std::size_t n = 1 + mix64(seed, 10) % 12;
        const std::size_t r = 1 + mix64(seed, 11) % std::min<std::size_t>(n, 4);
        std::size_t m = 1 + mix64(seed, 12) % 24;
        const BigInt available = distinct_lhs_count(n, r);
        if (BigInt(m) > available) m = static_cast<std::size_t>(available);
        LinearSystem s = random_instance({n, m, r, 6, seed});
        if (seed % 2 == 0 && !s.empty()) {
            LinearSystem dup(s.n_vars());
            for (const auto& e : s.equations()) dup.push(e);
            const auto& e0 = s.eq(mix64(seed, 13) % s.size());
            dup.add(e0.lhs, -e0.rhs, e0.weight);
            s = std::move(dup);
        }
        auto [reduced, log] = reduce(s);
        if (brute_force_max_excess(s).first != brute_force_max_excess(reduced).first) {
            out.fail("max excess changed under reduce, seed " + std::to_string(seed));
        }
        ++done;
    }
    out.detail = "200 instances, exact rational equality" +
                 (out.detail.empty() ? std::string() : "; " + out.detail);
    return out;
}

LinearSystem random_irreducible(std::uint64_t seed, std::size_t max_n) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::size_t n = 2 + mix64(seed, attempt * 4) % (max_n - 1);
        const std::size_t r = 1 + mix64(seed, attempt * 4 + 1) % std::min<std::size_t>(n, 3);
        std::size_t m = n + mix64(seed, attempt * 4 + 2) % 8;
        const BigInt available = distinct_lhs_count(n, r);
        if (BigInt(m) > available) m = static_cast<std::size_t>(available);
        LinearSystem s = random_instance({n, m, r, 5, seed + attempt * 7919});
        auto [reduced, log] = reduce(s);
        if (!reduced.empty() && is_irreducible(reduced)) return reduced;
    }
}

Outcome criterion3() {
    Outcome out;
    int runs = 0, decompositions = 0;
    for (std::uint64_t seed = 1; runs < 120; ++seed) {
        const std::size_t cap = 2 + mix64(seed, 0) % 9; // up to 10 vars for exhaustion
        const LinearSystem s = random_irreducible(seed, cap);
        const Rational budget(1 + mix64(seed, 1) % 5);
        const HRun run = run_h(s, {}, budget);
        const Assignment completed = complete_assignment(run);
        if (excess(s, completed) < run.total_marked_weight)
            out.fail("completion below marked weight, seed " + std::to_string(seed));

        const std::size_t n = s.n_vars();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Assignment x = Assignment::all_plus(n);
            for (std::size_t b = 0; b < n; ++b)
                if ((mask >> b) & 1) x.values[b] = -1;
            bool marked_hold = true;
            for (const auto& mark : run.marks) {
                int product = 1;
                for (int var : mark.marked_lhs.vars()) product *= x.value(var);
                if (product != mark.marked_rhs) marked_hold = false;
            }
            if (!marked_hold) continue;
            ++decompositions;
            if (excess(s, x) != run.total_marked_weight + excess(run.residual, x))
                out.fail("decomposition mismatch, seed " + std::to_string(seed));
        }
        ++runs;
    }
    out.detail = std::to_string(runs) + " H runs, " + std::to_string(decompositions) +
                 " decomposition points" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion4() {
    Outcome out;
    int done = 0, rejections = 0;
    for (std::uint64_t seed = 1; done < 200; ++seed) {
        const std::size_t n = 3 + mix64(seed, 0) % 14; // up to 16
        const std::size_t r = 1 + mix64(seed, 1) % std::min<std::size_t>(n, 4);
        const int k = 1 + static_cast<int>(mix64(seed, 2) % 5);

        VectorFamily m{n, {}, r};
        std::set<BitVector> seen;
        for (std::size_t i = 0; i < n; ++i) {
            BitVector v(n);
            v.set(i);
            seen.insert(v);
            m.vectors.push_back(std::move(v));
        }
        std::uint64_t ctr = 50;
        const std::size_t extras = mix64(seed, 3) % (2 * n);
        for (std::size_t e = 0; e < extras; ++e) {
            const std::size_t arity = 1 + mix64(seed, ctr++) % r;
            BitVector v(n);
            std::size_t placed = 0;
            while (placed < arity) {
                const std::size_t pos = mix64(seed, ctr++) % n;
                if (!v.test(pos)) {
                    v.set(pos);
                    ++placed;
                }
            }
            if (seen.insert(v).second) m.vectors.push_back(std::move(v));
        }

        if (n >= r * (static_cast<std::size_t>(k) - 1) + 1) {
            const auto chosen = find_msum_free(m, k);
            if (chosen.size() != static_cast<std::size_t>(k) || !verify_msum_free(m, chosen))
                out.fail("find/verify mismatch, seed " + std::to_string(seed));
        } else {
            try {
                find_msum_free(m, k);
                out.fail("missing rejection, seed " + std::to_string(seed));
            } catch (const PreconditionError&) {
                ++rejections;
            }
        }
        ++done;
    }
    // The rejection boundary is exact: n = r(k-1)=8 fails, n = r(k-1)+1=9 works.
    {
        const std::size_t r = 2;
        const int k = 5;
        for (std::size_t n : {static_cast<std::size_t>(8), static_cast<std::size_t>(9)}) {
            VectorFamily m{n, {}, r};
            for (std::size_t i = 0; i < n; ++i) {
                BitVector v(n);
                v.set(i);
                m.vectors.push_back(std::move(v));
            }
            bool rejected = false;
            try {
                const auto chosen = find_msum_free(m, k);
                if (!verify_msum_free(m, chosen)) out.fail("boundary acceptance invalid");
            } catch (const PreconditionError&) {
                rejected = true;
            }
            if ((n == 8) != rejected) out.fail("rejection boundary off at n=" + std::to_string(n));
        }
    }
    out.detail = "200 families, " + std::to_string(rejections) + " exact rejections" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion5() {
    Outcome out;
    int checks = 0;
    for (std::uint64_t seed = 300; checks < 80; ++seed) {
        const LinearSystem s = random_irreducible(seed, 10);
        const std::size_t r = s.max_arity();
        const std::size_t n = s.n_vars();
        const int k_max = static_cast<int>((n - 1) / r) + 1;
        for (int k = 1; k <= k_max; ++k) {
            const Assignment x = guaranteed_excess_assignment(s, k);
            if (excess(s, x) < Rational(k) * s.min_weight())
                out.fail("guarantee missed, seed " + std::to_string(seed));
            ++checks;
        }
    }
    // Sharpness: the tight instance sits one variable below the requirement
    // and its maximum excess is exactly kappa - 1.
    for (int kappa = 2; kappa <= 5; ++kappa) {
        for (int r = 1; r <= 3; ++r) {
            const LinearSystem s = tight_instance(kappa, r);
            if (s.n_vars() != static_cast<std::size_t>(r * (kappa - 1)))
                out.fail("tight instance size off");
            if (brute_force_max_excess(s).first != kappa - 1)
                out.fail("tight instance max excess not kappa-1");
            try {
                guaranteed_excess_assignment(s, kappa);
                out.fail("tight instance must violate the bound by one");
            } catch (const PreconditionError&) {
            }
        }
    }
    out.detail = std::to_string(checks) + " guarantee checks + 12 tight instances" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion6() {
    Outcome out;
    int kernels = 0, solved = 0;
    for (std::uint64_t seed = 1; kernels + solved < 150; ++seed) {
        const std::size_t n = 1 + mix64(seed, 20) % 12;
        const std::size_t r = 1 + mix64(seed, 21) % std::min<std::size_t>(n, 3);
        std::size_t m = 1 + mix64(seed, 22) % 20;
        const BigInt available = distinct_lhs_count(n, r);
        if (BigInt(m) > available) m = static_cast<std::size_t>(available);
        const LinearSystem s = random_instance({n, m, r, 4, seed});
        const int k = 1 + static_cast<int>(mix64(seed, 23) % 3);

        const KernelOutcome o = kernelize_r(s, k, static_cast<int>(r));
        if (o.solved()) {
            ++solved;
            const Verdict& v = o.verdict();
            if (!v.yes || !v.witness || excess(s, *v.witness) < Rational(2 * k))
                out.fail("solved branch invalid, seed " + std::to_string(seed));
        } else {
            ++kernels;
            if (o.kernel().system.n_vars() > static_cast<std::size_t>(2 * k - 1) * r)
                out.fail("kernel exceeds (2k-1)r, seed " + std::to_string(seed));
        }
    }
    out.detail = std::to_string(kernels) + " kernels / " + std::to_string(solved) +
                 " solved, bound (2k-1)r held" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

LinearSystem first_masks_system(std::size_t n, std::size_t m) {
    LinearSystem s(n);
    for (std::uint64_t mask = 1; s.size() < m; ++mask) {
        BitVector lhs(n);
        for (std::size_t b = 0; b < n; ++b)
            if ((mask >> b) & 1) lhs.set(b);
        s.add(std::move(lhs), 1, Rational(1));
    }
    return s;
}

Outcome criterion7() {
    Outcome out;
    const auto expect = [&](const LinearSystem& s, int k, const std::string& regime,
                            const char* what) {
        const KernelOutcome o = kernelize(s, k);
        if (o.regime != regime)
            out.fail(std::string(what) + ": got " + o.regime + ", expected " + regime);
        return o;
    };

    // m = 2k-1 -> few-equations kernel; m = 2k with (m+2)^(2k-1) = 2^n
    // exactly on the boundary -> density Yes.
    expect(first_masks_system(1, 1), 1, "kernel_few_equations", "m=2k-1");
    {
        LinearSystem s(2);
        s.add_vars({1}, 1, Rational(1));
        s.add_vars({2}, 1, Rational(1));
        expect(s, 1, "yes_by_equation_density", "m=2k boundary (4 <= 4)");
    }
    // One more equation breaks the density bound: 5 > 4 and m < n^2.
    expect(first_masks_system(2, 3), 1, "kernel_k2_log_k", "density boundary + 1");
    // n=5: m=30 still satisfies (m+2) <= 2^5, m=31 does not and meets m >= n^2.
    expect(first_masks_system(5, 30), 1, "yes_by_equation_density", "m=30, n=5");
    expect(first_masks_system(5, 31), 1, "search_tree_dense", "m = n^2k + 6, n=5");
    // k=2 boundary around m = n^(2k) = 17^4.
    {
        const std::size_t n = 17;
        const std::size_t m = 83521; // 17^4
        const LinearSystem at = first_masks_system(n, m);
        const KernelOutcome dense = expect(at, 2, "search_tree_dense", "m = n^4");
        if (dense.solved() && !dense.verdict().yes) out.fail("all-positive instance must be yes");
        const LinearSystem below = first_masks_system(n, m - 1);
        const KernelOutcome kern = expect(below, 2, "kernel_k2_log_k", "m = n^4 - 1");
        if (!kern.solved()) {
            // Exact variable bound for the kernel branch: 2^n <= (16k^4)^(4k^2).
            const BigInt lhs = boost::multiprecision::pow(BigInt(2),
                                                          static_cast<unsigned>(kern.kernel().system.n_vars()));
            const BigInt rhs = boost::multiprecision::pow(BigInt(16 * 16), 16u);
            if (lhs > rhs) out.fail("kernel variable bound violated at k=2");
        }
    }
    out.detail = "7 crafted boundary instances classified by exact big-integer predicates" +
                 (out.detail.empty() ? std::string() : "; " + out.detail);
    return out;
}

FourierPolynomial random_poly(std::uint64_t seed) {
    const std::size_t n = 1 + mix64(seed, 0) % 12;
    FourierPolynomial f(n, Rational(static_cast<std::int64_t>(mix64(seed, 1) % 9) - 4));
    const std::size_t terms = 1 + mix64(seed, 2) % 12;
    std::uint64_t ctr = 10;
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t deg = 1 + mix64(seed, ctr++) % std::min<std::size_t>(4, n);
        BitVector support(n);
        std::size_t placed = 0;
        while (placed < deg) {
            const std::size_t pos = mix64(seed, ctr++) % n;
            if (!support.test(pos)) {
                support.set(pos);
                ++placed;
            }
        }
        const long num = static_cast<long>(mix64(seed, ctr++) % 13) - 6;
        const long den = 1 + static_cast<long>(mix64(seed, ctr++) % 3);
        if (num != 0) f.add_term_support(support, Rational(num, den));
    }
    return f;
}

Outcome criterion8() {
    Outcome out;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const FourierPolynomial f = random_poly(seed);
        const BoundResult b = lower_bound(f);
        if (evaluate(f, b.witness) < b.bound)
            out.fail("witness below bound, seed " + std::to_string(seed));
        auto [system, offset] = to_excess_system(f);
        const Rational max_f =
            system.empty() ? offset : offset + brute_force_max_excess(system).first;
        if (b.bound > max_f) out.fail("bound above true max, seed " + std::to_string(seed));
    }
    // Worked example: bound 2, brute-force max 4.
    FourierPolynomial f(3, Rational(1));
    f.add_term({1, 2}, Rational(2));
    f.add_term({2, 3}, Rational(-1));
    const BoundResult b = lower_bound(f);
    if (b.bound != 2) out.fail("worked example bound is not 2");
    auto [system, offset] = to_excess_system(f);
    if (offset + brute_force_max_excess(system).first != 4)
        out.fail("worked example max is not 4");
    out.detail = "200 random polynomials + worked example" +
                 (out.detail.empty() ? std::string() : "; " + out.detail);
    return out;
}

int uf_components(int n, const std::vector<LabeledEdge>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& e : edges) parent[find(e.u - 1)] = find(e.v - 1);
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++c;
    return c;
}

Outcome criterion9() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t graphs = 0;

    // Exhaustive: every connected graph on up to 7 labeled vertices.
    for (int n = 1; n <= 7 && out.pass; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            LabeledGraph g;
            g.n_vertices = n;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second, EdgeLabel::neq);
            if (uf_components(n, g.edges) != 1) continue;
            ++graphs;
            const CutResult cut = max_cut_assignment(g);
            const std::int64_t m = static_cast<std::int64_t>(g.edges.size());
            if (4 * cut.satisfied < 2 * m + n - 1) {
                out.fail("exhaustive bound failed at n=" + std::to_string(n) +
                         " mask=" + std::to_string(mask));
                break;
            }
        }
    }

    // 100 random labeled graphs on up to 16 vertices, per-component bound.
    for (std::uint64_t seed = 1; seed <= 100 && out.pass; ++seed) {
        const int n = 2 + static_cast<int>(mix64(seed, 0) % 15);
        LabeledGraph g;
        g.n_vertices = n;
        std::uint64_t ctr = 5;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (mix64(seed, ctr++) % 100 < 30)
                    g.add_edge(u, v, (mix64(seed, ctr++) & 1) ? EdgeLabel::neq : EdgeLabel::eq);
        const CutResult r = balanced_subgraph_assignment(g);

        // Per-component satisfied count against the component bound.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& e : g.edges) parent[find(e.u - 1)] = find(e.v - 1);
        std::map<int, std::pair<std::int64_t, std::int64_t>> comp; // root -> (nc, sat)
        std::map<int, std::int64_t> comp_edges;
        for (int v = 0; v < n; ++v) comp[find(v)].first++;
        for (const auto& e : g.edges) {
            comp_edges[find(e.u - 1)]++;
            const bool differ = r.coloring.value(e.u) != r.coloring.value(e.v);
            if (differ == (e.label == EdgeLabel::neq)) comp[find(e.u - 1)].second++;
        }
        for (const auto& [root, stats] : comp) {
            const std::int64_t nc = stats.first;
            const std::int64_t sat = stats.second;
            const std::int64_t mc = comp_edges.count(root) ? comp_edges[root] : 0;
            if (4 * sat < 2 * mc + nc - 1)
                out.fail("component bound failed, seed " + std::to_string(seed));
        }
    }

    // Pinned graphs: K3 and Petersen.
    {
        const LabeledGraph k3 = LabeledGraph::all_neq(3, {{1, 2}, {1, 3}, {2, 3}});
        if (max_cut_assignment(k3).satisfied != 2) out.fail("K3 cut is not 2");
        const LabeledGraph pet = LabeledGraph::all_neq(
            10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                 {5, 10}, {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
        const CutResult cut = max_cut_assignment(pet);
        if (cut.satisfied < 10) out.fail("Petersen cut below 10");
        std::int64_t best = 0;
        for (std::uint64_t mask = 0; mask < 1024; ++mask) {
            Assignment x = Assignment::all_plus(10);
            for (int b = 0; b < 10; ++b)
                if ((mask >> b) & 1) x.values[b] = -1;
            best = std::max(best, count_satisfied(pet, x));
        }
        if (best != 12) out.fail("Petersen oracle max is not 12");
    }

    std::ostringstream d;
    d << graphs << " connected graphs (n<=7) + 100 random labeled, " << std::fixed;
    d.precision(1);
    d << seconds_since(start) << "s";
    out.detail = d.str() + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion10() {
    Outcome out;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int n = 1 + static_cast<int>(mix64(seed, 40) % 14);
        LabeledGraph g;
        g.n_vertices = n;
        std::uint64_t ctr = 3;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (mix64(seed, ctr++) % 100 < 35) g.add_edge(u, v, EdgeLabel::neq);
        if (incidence_rank(g) != static_cast<std::size_t>(n - uf_components(n, g.edges)))
            out.fail("rank != n - components, seed " + std::to_string(seed));
    }
    out.detail = "100 random graphs vs union-find" +
                 (out.detail.empty() ? std::string() : "; " + out.detail);
    return out;
}

struct CmdResult {
    int exit_code = -1;
    std::string stdout_text;
};

CmdResult run_command(const std::string& cmd) {
    CmdResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.stdout_text.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

Outcome criterion11(const std::string& cli) {
    Outcome out;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "maxlin_acceptance";
    fs::create_directories(dir);

    const auto write = [&](const char* name, const std::string& text) {
        std::ofstream f(dir / name, std::ios::binary);
        f << text;
        return (dir / name).string();
    };

    const std::string tight_file = write("tight32.lin2", serialize_lin2(tight_instance(3, 2)));
    const std::string pbf_file = write("worked.pbf", "p pbf 3 2\nconst 1\n2 1 2\n-1 2 3\n");
    const std::string cut_file = write("k3.cut", "p cut 3 3\n1 2\n1 3\n2 3\n");
    const std::string bsg_file = write("tri.bsg", "p bsg 3 3\n1 2 =\n1 3 =\n2 3 !=\n");
    const std::string small_file =
        write("small.lin2", serialize_lin2(corpus_instance(11)));

    struct GoldenCase {
        std::string args;
        int expect_exit; // -1 for "do not check"
    };
    const std::vector<GoldenCase> cases = {
        {"solve --k 1 " + tight_file, 0},
        {"solve --k 2 " + tight_file, 1},
        {"search --k 1 " + tight_file, 0},
        {"solve --json --k 1 " + tight_file, 0},
        {"kernelize --k 2 " + tight_file, -1},
        {"kernelize --k 2 --r 2 " + tight_file, -1},
        {"excess --k 2 " + tight_file, 0},
        {"pb-bound " + pbf_file, 0},
        {"pb-bound --json " + pbf_file, 0},
        {"maxcut " + cut_file, 0},
        {"balance " + bsg_file, 0},
        {"oracle " + tight_file, 0},
        {"oracle " + small_file, 0},
        {"solve --k 1 " + small_file, -1},
        {"gen tight --kappa 3 --r 2", 0},
        {"gen random --n 6 --m 8 --r 2 --max-weight 5 --seed 99", 0},
    };
    int checked = 0;
    for (const auto& c : cases) {
        const CmdResult a = run_command(cli + " " + c.args);
        const CmdResult b = run_command(cli + " " + c.args);
        if (a.exit_code != b.exit_code || a.stdout_text != b.stdout_text) {
            out.fail("nondeterministic output for: " + c.args);
            continue;
        }
        if (c.expect_exit >= 0 && a.exit_code != c.expect_exit)
            out.fail("exit code " + std::to_string(a.exit_code) + " != " +
                     std::to_string(c.expect_exit) + " for: " + c.args);
        ++checked;
    }

    // The K3 report must carry cut=2 at guarantee 2.
    {
        const CmdResult r = run_command(cli + " maxcut " + cut_file);
        if (r.stdout_text.find("cut: 2") == std::string::npos ||
            r.stdout_text.find("guarantee: 2") == std::string::npos)
            out.fail("K3 report does not show cut 2 at guarantee 2");
    }

    // kernelize -o round trip: solving the written kernel with the same k
    // matches solving the original.
    {
        const std::string kern_file = (dir / "kernel.lin2").string();
        const CmdResult k = run_command(cli + " kernelize --k 2 -o " + kern_file + " " + tight_file);
        if (k.exit_code != 0) {
            out.fail("kernelize -o failed");
        } else {
            const CmdResult orig = run_command(cli + " solve --k 2 " + tight_file);
            const CmdResult kern = run_command(cli + " solve --k 2 " + kern_file);
            if (orig.exit_code != kern.exit_code) out.fail("kernel round trip changed the answer");
        }
    }

    // Exit-code protocol for bad inputs.
    {
        const std::string bad = write("bad.lin2", "p lin2 2 1\n1 7 1\n");
        if (run_command(cli + " solve --k 1 " + bad).exit_code != 2)
            out.fail("parse error must exit 2");
        const std::string wide = write("wide.lin2", serialize_lin2(LinearSystem(25)));
        if (run_command(cli + " oracle " + wide).exit_code != 3)
            out.fail("oracle guard must exit 3");
        if (run_command(cli + " excess --k 9 " + tight_file).exit_code != 3)
            out.fail("excess precondition must exit 3");
    }

    out.detail = std::to_string(checked) + " golden invocations byte-identical across two runs" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "oracle equivalence over 500 seeded instances", criterion1},
        {2, "reductions preserve the maximum excess", criterion2},
        {3, "algorithm H completion and decomposition", criterion3},
        {4, "sum-free construction verifies, rejections exact", criterion4},
        {5, "guaranteed excess k*w_min and tight sharpness", criterion5},
        {6, "(2k-1)r kernel bound", criterion6},
        {7, "kernel regime classification at the boundaries", criterion7},
        {8, "pseudo-boolean bound soundness", criterion8},
        {9, "Edwards-Erdos guarantee per component", criterion9},
        {10, "incidence rank equals n - components", criterion10},
        {11, "CLI determinism and exit-code protocol", [&cli]() { return criterion11(cli); }},
    };

    bool all_pass = true;
    for (const auto& e : entries) {
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::cout << "criterion " << e.id << " (" << e.name << "): " << (o.pass ? "PASS" : "FAIL");
        if (!o.detail.empty()) std::cout << " - " << o.detail;
        std::cout << std::endl;
        if (!o.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
