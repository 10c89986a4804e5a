#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxcon/degree_sequence.hpp"
#include "maxcon/graph.hpp"
#include "maxcon/oracle.hpp"

using namespace maxcon;

TEST_CASE("construction and parsing") {
    auto pi = DegreeSequence::parse("3, 2,2 1");
    CHECK(pi.size() == 4);
    CHECK(pi.terms() == std::vector<int>{3, 2, 2, 1});

    auto shuffled = DegreeSequence::sorted({1, 3, 2, 2});
    CHECK(shuffled.terms() == std::vector<int>{3, 2, 2, 1});
    CHECK(shuffled.original_position(0) == 1);  // the 3 came from slot 1
    CHECK(shuffled.original_position(3) == 0);

    CHECK_THROWS_AS(DegreeSequence(std::vector<int>{1, 2}), ValidationError);       // increasing
    CHECK_THROWS_AS(DegreeSequence(std::vector<int>{2, -1}), ValidationError);      // negative
    CHECK_THROWS_AS(DegreeSequence::parse("2, x"), ValidationError);
}

TEST_CASE("graphic test") {
    CHECK(is_graphic(DegreeSequence::parse("2,2,2,2")));
    CHECK(is_graphic(DegreeSequence::parse("3,3,3,3")));
    CHECK(is_graphic(DegreeSequence::parse("3,1,1,1")));
    CHECK(is_graphic(DegreeSequence(std::vector<int>{})));
    CHECK(is_graphic(DegreeSequence(std::vector<int>{0, 0})));
    CHECK_FALSE(is_graphic(DegreeSequence::parse("3,3,1,1")));
    CHECK_FALSE(is_graphic(DegreeSequence::parse("1")));        // odd sum
    CHECK_FALSE(is_graphic(DegreeSequence::parse("4,1,1,1")));  // term exceeds n-1
}

TEST_CASE("realization assigns original terms to vertices") {
    auto pi = DegreeSequence::sorted({1, 2, 1});
    Graph g = realize(pi);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(3) == 1);
    CHECK_THROWS_AS(realize(DegreeSequence::parse("3,3,1,1")), NotGraphicError);
}

TEST_CASE("realization is valid for every graphic sequence up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& pi : oracle::all_graphic_sequences(n)) {
            Graph g = realize(pi);
            CHECK(g.degree_sequence() == pi);
        }
    }
}

TEST_CASE("term-wise subtraction") {
    auto lowered = subtract_k(DegreeSequence::parse("3,3,3,3"), 2);
    CHECK(lowered.terms() == std::vector<int>{1, 1, 1, 1});
    CHECK(subtract_k(lowered, 0) == lowered);
    CHECK_THROWS_AS(subtract_k(DegreeSequence::parse("3,1"), 2), ValidationError);
}

TEST_CASE("reverse complement is an involution preserving graphicality") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& pi : oracle::all_graphic_sequences(n)) {
            auto rc = complement_reverse(pi);
            CHECK(is_graphic(rc));
            CHECK(complement_reverse(rc) == pi);
            // The complement of any realization has exactly this sequence.
            CHECK(realize(pi).complement().degree_sequence() == rc);
        }
    }
}

TEST_CASE("connectivity feasibility test") {
    // Sum 4 < 2(n-1) = 6: no connected realization despite d_n = 1.
    CHECK_FALSE(edmonds_feasible(DegreeSequence::parse("1,1,1,1"), 1));
    CHECK(edmonds_feasible(DegreeSequence::parse("1,1"), 1));
    CHECK(edmonds_feasible(DegreeSequence::parse("2,2,2"), 2));
    CHECK_FALSE(edmonds_feasible(DegreeSequence::parse("2,2,2"), 3));
    CHECK(edmonds_feasible(DegreeSequence::parse("3,3,2,2"), 2));
}
