#pragma once

#include "maxlin/linsystem.hpp"

#include <cstdint>
#include <vector>

namespace maxlin {

enum class EdgeLabel { eq, neq };

struct LabeledEdge {
    int u = 0; // 1-based, u < v after normalization
    int v = 0;
    EdgeLabel label = EdgeLabel::neq;
};

// Undirected graph with EQ/NEQ edge labels; parallel edges are kept
// distinct, self-loops are rejected. Plain Max Cut graphs are all-NEQ.
struct LabeledGraph {
    int n_vertices = 0;
    std::vector<LabeledEdge> edges;

    void add_edge(int u, int v, EdgeLabel label);
    static LabeledGraph all_neq(int n, const std::vector<std::pair<int, int>>& edge_list);

    bool all_neq_labels() const;
    int components() const; // isolated vertices count as components
};

struct CutResult {
    Assignment coloring;      // one sign per vertex
    std::int64_t satisfied = 0;
    Rational guarantee;       // sum over components of m_c/2 + (n_c - 1)/4
};

// Number of edges satisfied by the coloring: NEQ wants different endpoint
// colors, EQ wants equal ones.
std::int64_t count_satisfied(const LabeledGraph& g, const Assignment& coloring);

// 2-coloring with at least m_c/2 + (n_c - 1)/4 properly colored edges per
// connected component (the Edwards-Erdos guarantee), obtained through the
// pseudo-boolean lower bound. Requires every label to be NEQ.
CutResult max_cut_assignment(const LabeledGraph& g);

// Same pipeline for labeled graphs: satisfied count is at least
// m_c/2 + (n_c - 1)/4 per component. A parallel EQ/NEQ pair of equal
// multiplicity cancels outright and is rejected as a precondition violation.
CutResult balanced_subgraph_assignment(const LabeledGraph& g);

// F2 rank of the edge-vertex incidence matrix; equals n minus the number of
// connected components.
std::size_t incidence_rank(const LabeledGraph& g);

} // namespace maxlin
