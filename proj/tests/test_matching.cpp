#include <doctest.h>

#include <random>

#include "maxcon/matching.hpp"
#include "maxcon/oracle.hpp"

using namespace maxcon;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i + 1, (i + 1) % 5 + 1);  // outer 5-cycle
    for (int i = 0; i < 5; ++i) g.add_edge(i + 1, i + 6);            // spokes
    g.add_edge(6, 8); g.add_edge(8, 10); g.add_edge(10, 7);          // inner 5-cycle
    g.add_edge(7, 9); g.add_edge(9, 6);
    return g;
}

bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    std::vector<bool> used(g.vertex_count() + 1, false);
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v) || used[u] || used[v]) return false;
        used[u] = used[v] = true;
    }
    return true;
}

}  // namespace

TEST_CASE("small matchings") {
    CHECK(maximum_matching(Graph::complete(4)).size() == 2);
    Graph c5(5);
    for (int i = 1; i < 5; ++i) c5.add_edge(i, i + 1);
    c5.add_edge(5, 1);
    CHECK(maximum_matching(c5).size() == 2);
    CHECK_FALSE(perfect_matching(c5).has_value());  // odd order

    Graph star(4);
    star.add_edge(1, 2); star.add_edge(1, 3); star.add_edge(1, 4);
    CHECK(maximum_matching(star).size() == 1);
    CHECK_FALSE(perfect_matching(star).has_value());
    CHECK(maximum_matching(Graph(0)).empty());
}

TEST_CASE("a blossom is contracted correctly") {
    // Triangle {1,2,3} with pendants 4 at 2 and 5 at 3: the augmenting path
    // must pass through the odd cycle.
    Graph g(5);
    g.add_edge(1, 2); g.add_edge(2, 3); g.add_edge(1, 3);
    g.add_edge(2, 4); g.add_edge(3, 5);
    auto m = maximum_matching(g);
    CHECK(m.size() == 2);
    CHECK(is_matching(g, m));
}

TEST_CASE("3-regular 3-edge-connected graph of even order has a perfect matching") {
    auto m = perfect_matching(petersen());
    REQUIRE(m.has_value());
    CHECK(m->size() == 5);
    CHECK(is_matching(petersen(), *m));
}

TEST_CASE("matching size agrees with exhaustive dynamic programming") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(n, 0.35, rng);
        auto m = maximum_matching(g);
        CHECK(is_matching(g, m));
        CHECK(static_cast<int>(m.size()) == oracle::brute_matching(g));
    }
}
