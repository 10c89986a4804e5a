#pragma once

#include <utility>
#include <vector>

#include "maxcon/degree_sequence.hpp"
#include "maxcon/errors.hpp"

namespace maxcon {

/// Subset of the vertices 1..n.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_(n + 1, false) {}
    VertexSet(int n, const std::vector<int>& members);

    static VertexSet full(int n);

    int universe_size() const { return n_; }
    bool contains(int v) const { return v >= 1 && v <= n_ && bits_[v]; }
    void add(int v);
    void remove(int v);
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool is_full() const { return count_ == n_; }

    VertexSet complement() const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet subtract(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    std::vector<int> vertices() const;

    bool operator==(const VertexSet& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator<(const VertexSet& other) const;  // lexicographic on sorted vertex lists

private:
    int n_ = 0;
    std::vector<bool> bits_;
    int count_ = 0;
};

/// The quadruple of an edge-exchange: edges a-a' and b-b' are removed,
/// non-edges a-b' and a'-b are added.
struct ExchangeMove {
    int a = 0, a_prime = 0, b = 0, b_prime = 0;

    ExchangeMove inverse() const { return {a, b_prime, b, a_prime}; }
    bool operator==(const ExchangeMove& o) const {
        return a == o.a && a_prime == o.a_prime && b == o.b && b_prime == o.b_prime;
    }
};

/// Labeled simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;  // in vertex order, index 0 = v1
    DegreeSequence degree_sequence() const;

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    Graph complement() const;
    bool is_subgraph_of(const Graph& other) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<bool>> adj_;  // (n+1) x (n+1), row 0 unused
    int edge_count_ = 0;
};

// e_G(X, Y): edges with one end in X and the other in Y. Edges inside the
// overlap X ∩ Y are counted once.
int cut_size(const Graph& g, const VertexSet& x, const VertexSet& y);

// Vertices of A adjacent to some vertex outside A.
VertexSet boundary(const Graph& g, const VertexSet& a);

// Apply an edge-exchange; throws IllegalExchangeError naming the bad pair.
Graph edge_exchange(const Graph& g, const ExchangeMove& m);

// E(G) \ E(F). Edges of F absent from G are ignored unless strict.
Graph subtract_edges(const Graph& g, const Graph& f, bool strict = false);

// Edge-disjoint union; throws OverlapError on a shared edge.
Graph union_edges(const Graph& g, const Graph& h);

std::vector<int> component_ids(const Graph& g);  // index 0 unused
int component_count(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace maxcon
