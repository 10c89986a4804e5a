#include <doctest.h>

#include "maxcon/cuts.hpp"
#include "maxcon/factors.hpp"
#include "maxcon/oracle.hpp"

using namespace maxcon;

TEST_CASE("realization with a prescribed factor") {
    auto [g, factor] = kundu_realize({DegreeSequence::parse("2,2,2,2"), {1, 1, 1, 1}, 1});
    CHECK(g.degree_sequence() == DegreeSequence::parse("2,2,2,2"));
    CHECK(factor.is_subgraph_of(g));
    CHECK(factor.degrees() == std::vector<int>{1, 1, 1, 1});
    CHECK(subtract_edges(g, factor).degrees() == std::vector<int>{1, 1, 1, 1});

    // Mixed demands inside the k/k+1 band.
    auto [g2, factor2] = kundu_realize({DegreeSequence::parse("3,3,2,2"), {2, 2, 1, 1}, 1});
    CHECK(g2.degree_sequence() == DegreeSequence::parse("3,3,2,2"));
    CHECK(factor2.degrees() == std::vector<int>{2, 2, 1, 1});
    CHECK(factor2.is_subgraph_of(g2));
}

TEST_CASE("factor request validation") {
    DegreeSequence pi = DegreeSequence::parse("2,2,2,2");
    CHECK_THROWS_AS(kundu_realize({pi, {1, 1, 1}, 1}), ValidationError);     // length
    CHECK_THROWS_AS(kundu_realize({pi, {3, 1, 1, 1}, 1}), ValidationError);  // outside band
    CHECK_THROWS_AS(kundu_realize({pi, {3, 3, 3, 3}, 3}), ValidationError);  // demand above degree
    CHECK_THROWS_AS(kundu_realize({DegreeSequence::parse("3,3,2,2"), {1, 1, 2, 2}, 1}),
                    NotGraphicError);  // residual (2,2,0,0) is not graphic
}

TEST_CASE("zero residual is allowed") {
    auto [g, factor] = kundu_realize({DegreeSequence::parse("1,1,1,1"), {1, 1, 1, 1}, 1});
    CHECK(g == factor);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("sweep: every feasible factor request is satisfied exactly") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& pi : oracle::all_graphic_sequences(n)) {
            for (int k = 1; k <= 2; ++k) {
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    std::vector<int> kappa(n), resid(n);
                    bool feasible = true;
                    for (int i = 0; i < n && feasible; ++i) {
                        kappa[i] = k + ((mask >> i) & 1u);
                        resid[i] = pi.term(i) - kappa[i];
                        feasible = resid[i] >= 0;
                    }
                    if (!feasible) continue;
                    if (!is_graphic(DegreeSequence::sorted(kappa))) continue;
                    if (!is_graphic(DegreeSequence::sorted(resid))) continue;
                    auto [g, factor] = kundu_realize({pi, kappa, k});
                    CHECK(g.degree_sequence() == pi);
                    CHECK(factor.is_subgraph_of(g));
                    CHECK(factor.degrees() == kappa);
                }
            }
        }
    }
}

TEST_CASE("maximally edge-connected realization with a factor") {
    auto res = maxcon_with_factor({DegreeSequence::parse("2,2,2,2"), {1, 1, 1, 1}, 1});
    CHECK(oracle::brute_min_cut(res.g).first == 2);
    CHECK(res.factor.degrees() == std::vector<int>{1, 1, 1, 1});
    CHECK(res.factor.is_subgraph_of(res.g));
    CHECK(res.certificate.mode_target_met);

    CHECK_THROWS_AS(maxcon_with_factor({DegreeSequence::parse("2,2,1,1"), {1, 1, 1, 1}, 1}),
                    HypothesisViolation);  // d_i >= 2 violated
}

TEST_CASE("matching extraction from a factor, direct hypothesis") {
    DegreeSequence k4 = DegreeSequence::parse("3,3,3,3");
    auto dec = peel_one_factors(k4, 3, 1);
    CHECK(dec.one_factors.size() == 2);
    CHECK(verify_decomposition(dec, k4, {3, 3, 3, 3}).ok());

    DegreeSequence pi6 = DegreeSequence::parse("4,4,4,4,4,4");
    auto dec6 = peel_one_factors(pi6, 3, 1);
    CHECK(dec6.one_factors.size() == 2);
    CHECK(verify_decomposition(dec6, pi6, {3, 3, 3, 3, 3, 3}).ok());
}

TEST_CASE("matching extraction, dense-sequence hypothesis") {
    DegreeSequence k6 = DegreeSequence::parse("5,5,5,5,5,5");
    auto dec = peel_complement_case(k6, 3, 0);
    CHECK(dec.one_factors.size() == 1);
    CHECK(verify_decomposition(dec, k6, {3, 3, 3, 3, 3, 3}).ok());

    auto dec2 = peel_complement_case(k6, 5, 2);
    CHECK(dec2.one_factors.size() == 3);
    CHECK(verify_decomposition(dec2, k6, {5, 5, 5, 5, 5, 5}).ok());
}

TEST_CASE("peel preconditions") {
    CHECK_THROWS_AS(peel_one_factors(DegreeSequence::parse("2,2,2"), 2, 0),
                    PreconditionFailed);  // odd order
    CHECK_THROWS_AS(peel_one_factors(DegreeSequence::parse("3,3,3,3"), 1, 0),
                    PreconditionFailed);  // 2k < d_1
    CHECK_THROWS_AS(peel_one_factors(DegreeSequence::parse("3,3,3,3"), 3, -1),
                    PreconditionFailed);
    CHECK_THROWS_AS(peel_complement_case(DegreeSequence::parse("2,2,2,2"), 2, 1),
                    PreconditionFailed);  // k < n-1-d_n+2r
}

TEST_CASE("the decomposition audit flags tampering") {
    DegreeSequence k4 = DegreeSequence::parse("3,3,3,3");
    auto dec = peel_one_factors(k4, 3, 1);
    REQUIRE(verify_decomposition(dec, k4, {3, 3, 3, 3}).ok());

    auto broken = dec;
    broken.one_factors[0].pop_back();  // matching no longer covers everything
    CHECK_FALSE(verify_decomposition(broken, k4, {3, 3, 3, 3}).ok());

    auto wrong_kappa = verify_decomposition(dec, k4, {3, 3, 3, 1});
    CHECK_FALSE(wrong_kappa.ok());

    auto leak = dec;
    leak.residual = leak.factor;  // residual now overlaps the matchings
    CHECK_FALSE(verify_decomposition(leak, k4, {3, 3, 3, 3}).ok());
}
