#include "doctest.h"
#include "support.hpp"

#include "qweingarten/oracles.hpp"

using namespace qweingarten;

TEST_SUITE("oracles") {

TEST_CASE("Catalan numbers") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned k = 0; k <= 8; ++k) {
        CHECK(oracles::catalan_number(k) == expected[k]);
    }
    CHECK(oracles::catalan_number(20) == BigInt("6564120420"));
}

TEST_CASE("moment sequences") {
    auto semicircle = oracles::semicircle_moments(6);
    std::vector<BigRational> expected{1, 0, 1, 0, 2, 0, 5};
    CHECK(semicircle.values == expected);
    auto uniform = oracles::uniform01_moments(3);
    CHECK(uniform.values == std::vector<BigRational>{1, frac(1, 2), frac(1, 3), frac(1, 4)});
}

TEST_CASE("matchings") {
    CHECK(oracles::all_matchings(0).size() == 1);
    CHECK(oracles::all_matchings(3).size() == 15);
    CHECK(oracles::all_matchings(4).size() == 105);
    CHECK(oracles::brute_force_pairings(3).size() == 5);
    CHECK(oracles::brute_force_pairings(2) == std::vector<std::vector<int>>{{2, 1, 4, 3}, {4, 3, 2, 1}});
}

TEST_CASE("colored counts") {
    CHECK(oracles::circular_star_moments(ColorWord::parse("ab")) == 1);
    CHECK(oracles::circular_star_moments(ColorWord::parse("aa")) == 0);
    CHECK(oracles::circular_star_moments(ColorWord::parse("abab")) == 2);
    CHECK(oracles::circular_star_moments(ColorWord::parse("abba")) == 1);
    CHECK(oracles::circular_star_moments(ColorWord::parse("aba")) == 0);
    CHECK_THROWS(oracles::circular_star_moments(ColorWord::alternating(8)));
}

TEST_CASE("loops, paths and 2x2 inverse") {
    Pairing p({2, 1, 4, 3});
    Pairing q({4, 3, 2, 1});
    CHECK(oracles::brute_force_loops(p, p) == 2);
    CHECK(oracles::brute_force_loops(p, q) == 1);
    CHECK(oracles::breadth_first_paths(2, 0, 0, 2).size() == 2);
    CHECK(oracles::breadth_first_paths(2, 0, 1, 3).size() == 2);
    auto inv = oracles::inverse_2x2(1, 2, 3, 4);
    CHECK(inv == std::vector<BigRational>{-2, 1, frac(3, 2), frac(-1, 2)});
    CHECK_THROWS(oracles::inverse_2x2(1, 2, 2, 4));
}

}
