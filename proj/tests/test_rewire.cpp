#include <doctest.h>

#include <random>

#include "maxcon/cuts.hpp"
#include "maxcon/oracle.hpp"
#include "maxcon/rewire.hpp"

using namespace maxcon;

namespace {

Graph two_triangles() {
    Graph g(6);
    g.add_edge(1, 2); g.add_edge(2, 3); g.add_edge(1, 3);
    g.add_edge(4, 5); g.add_edge(5, 6); g.add_edge(4, 6);
    return g;
}

Graph two_k4_bridged() {
    // Two K4 blocks joined by the disjoint edges 1-5 and 2-6: lambda = 2 < 3 = delta.
    Graph g(8);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) g.add_edge(u, v);
    for (int u = 5; u <= 8; ++u)
        for (int v = u + 1; v <= 8; ++v) g.add_edge(u, v);
    g.add_edge(1, 5);
    g.add_edge(2, 6);
    return g;
}

}  // namespace

TEST_CASE("validation names the failed hypothesis") {
    Graph g = two_triangles();
    Graph f(6), z = g;

    CHECK(validate({g, f, z, RewireMode::Full}).ok);

    Graph f_outside(6);
    f_outside.add_edge(1, 4);
    CHECK(validate({g, f_outside, z, RewireMode::Full}).clause ==
          "F must be a subgraph of G0");

    Graph wrong_order(5);
    CHECK_FALSE(validate({g, f, wrong_order, RewireMode::Full}).ok);

    Graph f_in(6);
    f_in.add_edge(1, 2);
    CHECK(validate({g, f_in, z, RewireMode::Full}).clause == "F and Z0 must be edge-disjoint");

    Graph z_small = g;
    z_small.remove_edge(1, 2);
    z_small.remove_edge(1, 3);  // vertex 1 now uncovered by Z0
    CHECK(validate({g, f, z_small, RewireMode::Full}).clause ==
          "delta(Z0) > Delta(F) required (full mode)");

    // Relaxed mode pins Z0 to G0 - E(F).
    Graph h = subtract_edges(g, f_in);
    CHECK_FALSE(validate({g, f_in, g, RewireMode::Relaxed}).ok);
    CHECK(validate({g, f_in, h, RewireMode::Relaxed}).ok);

    // A pendant-degree graph needs at least n-1 sacrificial edges.
    Graph pendant(4);
    pendant.add_edge(1, 2);
    pendant.add_edge(3, 4);
    CHECK(validate({pendant, Graph(4), pendant, RewireMode::Full}).clause ==
          "|E(Z0)| >= |V| - 1 required when delta(G0) = 1");

    CHECK_THROWS_AS(rewire({g, f_outside, z, RewireMode::Full}), HypothesisViolation);
}

TEST_CASE("connect phase merges components without touching protected edges") {
    Graph g = two_triangles();
    RewireState state({g, Graph(6), g, RewireMode::Full});
    connect_phase(state);
    CHECK(is_connected(state.h()));
    CHECK(state.g().degrees() == g.degrees());
}

TEST_CASE("full mode reaches lambda = delta") {
    Graph g0 = two_triangles();
    auto res = rewire({g0, Graph(6), g0, RewireMode::Full});
    CHECK(res.certificate.final_lambda == 2);
    CHECK(res.certificate.final_delta == 2);
    CHECK(res.certificate.mode_target_met);
    CHECK(res.certificate.preserved_edges_ok);
    CHECK(subtract_edges(g0, res.graph).edge_count() <= g0.edge_count());
    CHECK(oracle::brute_min_cut(res.graph).first == 2);

    auto res2 = rewire({two_k4_bridged(), Graph(8), two_k4_bridged(), RewireMode::Full});
    CHECK(res2.certificate.final_lambda == 3);
    CHECK(oracle::brute_min_cut(res2.graph).first == 3);
}

TEST_CASE("a single exchange fixes the bridged K4 pair") {
    Graph g = two_k4_bridged();
    RewireState state({g, Graph(8), g, RewireMode::Full});
    auto move = improve_step(state);
    REQUIRE(move.has_value());
    CHECK(edge_connectivity_value(state.h()) == 3);
}

TEST_CASE("relaxed mode protects F and reaches the parity target") {
    // Two triangles plus the protected bridge 1-4.
    Graph g0 = two_triangles();
    g0.add_edge(1, 4);
    Graph f(6);
    f.add_edge(1, 4);
    Graph z0 = subtract_edges(g0, f);
    auto res = rewire({g0, f, z0, RewireMode::Relaxed});
    CHECK(res.graph.has_edge(1, 4));
    Graph h = subtract_edges(res.graph, f);
    CHECK(res.certificate.final_delta == 2);
    CHECK(res.certificate.final_lambda == 2);  // even delta: full strength required
    CHECK(res.certificate.mode_target_met);
}

TEST_CASE("already optimal inputs come back unchanged") {
    Graph k4 = Graph::complete(4);
    auto res = rewire({k4, Graph(4), k4, RewireMode::Full});
    CHECK(res.graph == k4);
    CHECK(res.certificate.moves_applied == 0);
}

TEST_CASE("the move trace replays onto the input graph") {
    std::mt19937 rng(43);
    int exercised = 0;
    while (exercised < 40) {
        Graph g0 = oracle::random_graph(8, 0.45, rng);
        if (g0.min_degree() < 2) continue;
        ++exercised;
        auto res = rewire({g0, Graph(8), g0, RewireMode::Full});
        Graph replay = g0;
        for (const ExchangeMove& m : res.trace) replay = edge_exchange(replay, m);
        CHECK(replay == res.graph);
        CHECK(res.graph.degrees() == g0.degrees());
        CHECK(oracle::brute_min_cut(res.graph).first == res.graph.min_degree());
    }
}
