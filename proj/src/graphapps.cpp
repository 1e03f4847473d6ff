#include "maxlin/graphapps.hpp"

#include "maxlin/errors.hpp"
#include "maxlin/pseudobool.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace maxlin {

void LabeledGraph::add_edge(int u, int v, EdgeLabel label) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 1 || v < 1 || u > n_vertices || v > n_vertices)
        throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, label});
}

LabeledGraph LabeledGraph::all_neq(int n, const std::vector<std::pair<int, int>>& edge_list) {
    LabeledGraph g;
    g.n_vertices = n;
    for (auto [u, v] : edge_list) g.add_edge(u, v, EdgeLabel::neq);
    return g;
}

bool LabeledGraph::all_neq_labels() const {
    return std::all_of(edges.begin(), edges.end(),
                       [](const LabeledEdge& e) { return e.label == EdgeLabel::neq; });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int LabeledGraph::components() const {
    UnionFind uf(n_vertices);
    for (const auto& e : edges) uf.unite(e.u - 1, e.v - 1);
    int count = 0;
    for (int v = 0; v < n_vertices; ++v)
        if (uf.find(v) == v) ++count;
    return count;
}

std::int64_t count_satisfied(const LabeledGraph& g, const Assignment& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.n_vertices))
        throw std::invalid_argument("coloring dimension mismatch");
    std::int64_t count = 0;
    for (const auto& e : g.edges) {
        const bool differ = coloring.value(e.u) != coloring.value(e.v);
        if (differ == (e.label == EdgeLabel::neq)) ++count;
    }
    return count;
}

namespace {

CutResult cut_pipeline(const LabeledGraph& g) {
    if (g.n_vertices < 1) throw std::invalid_argument("graph has no vertices");

    UnionFind uf(g.n_vertices);
    for (const auto& e : g.edges) uf.unite(e.u - 1, e.v - 1);

    // Component id -> local vertex order (ascending global index).
    std::map<int, std::vector<int>> comp_vertices;
    for (int v = 0; v < g.n_vertices; ++v) comp_vertices[uf.find(v)].push_back(v + 1);
    std::map<int, std::vector<const LabeledEdge*>> comp_edges;
    for (const auto& e : g.edges) comp_edges[uf.find(e.u - 1)].push_back(&e);

    CutResult out;
    out.coloring = Assignment::all_plus(static_cast<std::size_t>(g.n_vertices));
    out.guarantee = Rational(0);

    for (const auto& [root, vertices] : comp_vertices) {
        const std::size_t nc = vertices.size();
        const auto edges_it = comp_edges.find(root);
        const std::size_t mc = edges_it == comp_edges.end() ? 0 : edges_it->second.size();
        out.guarantee += Rational(mc, 2) + Rational(nc - 1, 4);
        if (mc == 0) continue; // isolated vertices stay +1

        std::map<int, int> local; // global vertex -> 1-based local index
        for (std::size_t i = 0; i < nc; ++i) local[vertices[i]] = static_cast<int>(i) + 1;

        // Satisfied-edge count as a polynomial: sum of (1 -/+ x_u x_v)/2.
        FourierPolynomial f(nc, Rational(mc, 2));
        for (const LabeledEdge* e : edges_it->second) {
            const int sign = e->label == EdgeLabel::neq ? 1 : -1;
            f.add_term(std::vector<int>{local[e->u], local[e->v]}, Rational(-sign, 2));
        }

        // Opposite-label parallel pairs of equal multiplicity cancel their
        // term; the component bound needs the surviving terms to still span
        // the component.
        UnionFind terms_uf(static_cast<int>(nc));
        std::size_t term_unions = 0;
        for (const auto& [support, coef] : f.terms()) {
            const std::vector<int> pair = support.vars();
            if (terms_uf.find(pair[0] - 1) != terms_uf.find(pair[1] - 1)) {
                terms_uf.unite(pair[0] - 1, pair[1] - 1);
                ++term_unions;
            }
        }
        if (term_unions != nc - 1)
            throw PreconditionError(
                "cancelling parallel edges disconnect the component's terms; "
                "the per-component bound does not apply");

        const BoundResult bound = lower_bound(f);
        for (std::size_t i = 0; i < nc; ++i)
            out.coloring.set(vertices[i], bound.witness.values[i]);
    }

    out.satisfied = count_satisfied(g, out.coloring);
    // Cuts are integral, so the rational component bound rounds up.
    const Rational ceil_ok = Rational(out.satisfied);
    MAXLIN_CHECK(ceil_ok >= out.guarantee, "coloring fell below the component guarantee");
    return out;
}

} // namespace

CutResult max_cut_assignment(const LabeledGraph& g) {
    if (!g.all_neq_labels())
        throw std::invalid_argument("max cut requires every edge label to be !=");
    return cut_pipeline(g);
}

CutResult balanced_subgraph_assignment(const LabeledGraph& g) { return cut_pipeline(g); }

std::size_t incidence_rank(const LabeledGraph& g) {
    std::vector<BitVector> rows;
    rows.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        BitVector row(static_cast<std::size_t>(g.n_vertices));
        row.set_var(e.u);
        row.set_var(e.v);
        rows.push_back(std::move(row));
    }
    return rank(rows, static_cast<std::size_t>(g.n_vertices));
}

} // namespace maxlin
