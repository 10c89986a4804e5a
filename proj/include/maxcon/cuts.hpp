#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxcon/graph.hpp"

namespace maxcon {

/// One shore of an edge cut with its value and crossing edges.
struct Cut {
    VertexSet side;
    int value = 0;
    std::vector<std::pair<int, int>> crossing;
};

struct WeakClassification {
    bool is_weak = false;
    bool is_minimally_weak = false;
    bool is_critically_weak = false;
    // Proper weak subset of the queried set; present iff weak but not critical.
    std::optional<VertexSet> witness;
};

struct Lemma1Report {
    bool holds = false;
    bool s_equals_a = false;
    int delta = 0;
    int interior_cut = 0;       // e(X∩S, X̄∩S), the bounded quantity
    int interior_bound = 0;     // ⌈δ/2⌉ or ⌈(δ+1)/2⌉
    bool equality_case = false; // interior_cut == ⌈(δ+1)/2⌉ with S = A
    int side_min = 0;           // min{e(X∩A, Ā), e(X̄∩A, Ā)} when equality_case
    int side_bound = 0;         // ⌊(δ−1)/2⌋
};

struct Lemma2Report {
    bool holds = false;
    VertexSet interior;  // A − Γ(A)
    std::vector<int> isolated_interior_vertices;  // interior vertices lacking an interior neighbor
};

// Global minimum edge cut (Stoer-Wagner). Disconnected graphs give lambda 0
// with one component as witness. Requires n >= 2.
std::pair<int, Cut> edge_connectivity(const Graph& g);

int edge_connectivity_value(const Graph& g);

// All minimum cuts of a connected graph, one canonical shore per unordered
// cut (the shore containing vertex 1, which is the lexicographically smaller
// one). Flow-based: residual-closure enumeration per pinned vertex pair.
std::vector<Cut> enumerate_min_cuts(const Graph& g);

// Number of unordered minimum cuts; the second potential coordinate of the
// rewire engine.
int min_cut_count(const Graph& g);

// Weak / minimally weak / critically weak per the lambda < delta regime.
// Throws NotApplicableError when lambda(G) >= delta(G).
WeakClassification classify(const Graph& g, const VertexSet& a);

// Descends through weak proper subsets of a weak set until none remains.
VertexSet find_critically_weak(const Graph& g, const VertexSet& a);

Lemma1Report check_lemma1(const Graph& g, const VertexSet& a, const VertexSet& s,
                          const VertexSet& x);

Lemma2Report check_lemma2(const Graph& g, const VertexSet& a);

}  // namespace maxcon
