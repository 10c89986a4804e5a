#include <doctest.h>

#include <random>

#include "maxcon/graph.hpp"
#include "maxcon/oracle.hpp"

using namespace maxcon;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n, 1);
    return g;
}

Graph bowtie_bridge() {
    // Two triangles {1,2,3} and {4,5,6} joined by the bridge 3-4.
    Graph g(6);
    g.add_edge(1, 2); g.add_edge(2, 3); g.add_edge(1, 3);
    g.add_edge(4, 5); g.add_edge(5, 6); g.add_edge(4, 6);
    g.add_edge(3, 4);
    return g;
}

}  // namespace

TEST_CASE("vertex sets") {
    VertexSet a(6, {1, 2, 3});
    CHECK(a.count() == 3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(4));
    CHECK(a.complement().vertices() == std::vector<int>{4, 5, 6});
    CHECK(a.intersect(VertexSet(6, {3, 4})).vertices() == std::vector<int>{3});
    CHECK(a.subtract(VertexSet(6, {3, 4})).vertices() == std::vector<int>{1, 2});
    CHECK(VertexSet(6, {1, 2}).is_subset_of(a));
    CHECK(VertexSet(6, {1, 2}) < a);
}

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(3, 2));
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    g.remove_edge(2, 1);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), ValidationError);
    CHECK_THROWS_AS(g.add_edge(0, 2), ValidationError);
    CHECK(Graph::complete(4).edge_count() == 6);
    CHECK(Graph::complete(4).complement().edge_count() == 0);
}

TEST_CASE("cut size and boundary") {
    Graph g = bowtie_bridge();
    VertexSet a(6, {1, 2, 3});
    CHECK(cut_size(g, a, a.complement()) == 1);
    CHECK(boundary(g, a).vertices() == std::vector<int>{3});
    CHECK(cut_size(g, VertexSet(6, {1, 2}), VertexSet(6, {3}).complement().complement()) == 2);
    // Overlapping arguments count each edge once.
    CHECK(cut_size(g, VertexSet::full(6), VertexSet::full(6)) == g.edge_count());
}

TEST_CASE("edge exchange on the 6-cycle") {
    Graph g = cycle(6);
    Graph swapped = edge_exchange(g, {1, 2, 4, 5});
    // Splits into the two triangles {2,3,4} and {1,5,6}.
    CHECK(swapped.edges() == std::vector<std::pair<int, int>>{
                                 {1, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {5, 6}});
    CHECK(component_count(swapped) == 2);
    // The inverse move restores the original graph.
    CHECK(edge_exchange(swapped, ExchangeMove{1, 2, 4, 5}.inverse()) == g);
}

TEST_CASE("edge exchange validation") {
    Graph g = cycle(6);
    CHECK_THROWS_AS(edge_exchange(g, {1, 3, 4, 5}), IllegalExchangeError);  // 1-3 missing
    CHECK_THROWS_AS(edge_exchange(g, {1, 2, 3, 4}), IllegalExchangeError);  // 2-3 present
    CHECK_THROWS_AS(edge_exchange(g, {1, 2, 2, 3}), IllegalExchangeError);  // repeated vertex
}

TEST_CASE("edge exchange preserves every degree") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(8, 0.5, rng);
        auto edges = g.edges();
        if (edges.size() < 2) continue;
        auto [a, ap] = edges[rng() % edges.size()];
        auto [b, bp] = edges[rng() % edges.size()];
        ExchangeMove m{a, ap, b, bp};
        try {
            Graph h = edge_exchange(g, m);
            CHECK(h.degrees() == g.degrees());
            CHECK(edge_exchange(h, m.inverse()) == g);
        } catch (const IllegalExchangeError&) {
            // randomly drawn pair was not exchangeable; nothing to check
        }
    }
}

TEST_CASE("edge set arithmetic") {
    Graph g = bowtie_bridge();
    Graph f(6);
    f.add_edge(3, 4);
    Graph rest = subtract_edges(g, f);
    CHECK(rest.edge_count() == 6);
    CHECK(union_edges(rest, f) == g);
    CHECK_THROWS_AS(union_edges(g, f), OverlapError);

    Graph missing(6);
    missing.add_edge(1, 6);
    CHECK(subtract_edges(g, missing) == g);  // lenient by default
    CHECK_THROWS_AS(subtract_edges(g, missing, true), ValidationError);
}

TEST_CASE("components") {
    Graph g = bowtie_bridge();
    CHECK(is_connected(g));
    CHECK(component_count(g) == 1);
    g.remove_edge(3, 4);
    CHECK_FALSE(is_connected(g));
    CHECK(component_count(g) == 2);
    auto ids = component_ids(g);
    CHECK(ids[1] == ids[2]);
    CHECK(ids[1] != ids[5]);
    CHECK(component_count(Graph(3)) == 3);
}
